"""Graph statistics on B(n, k) and on arbitrary sets of group elements.

Two independent routes produce every count: `enumerate` walks all of
B(n, k) through the census kernel, `dp` reads coefficients of the exact
counting series; they must agree integer-for-integer.

Densities follow delta(Y) = degree_sum / #Y; together with the Cheeger
count #d*Y (directed edges leaving Y) this satisfies
delta(Y) + #d*Y/#Y = 2m exactly.  (Some sources abbreviate the numerator
2m#Y - #d*Y itself as the density; we always divide by #Y.)

The outer boundary dY (vertices outside Y adjacent to Y) is computed only
in the element model via the embedding of B(n, k) into the Cayley graph,
since some Cayley neighbours of B(n, k) are not n-leaf marked forests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .errors import CapExceeded
from .forests import (
    ACTION_LABELS,
    LABEL_WORDS,
    MarkedForest,
    apply_within,
    base_forest,
    count_bb,
    count_trees_exact_height,
    encode_forest,
    enumerate_bb,
    _seq_counts,
)
from .group import (
    GenSetSpec,
    IDENTITY,
    NormalForm,
    multiply,
    normalize,
)
from .kernels import bb_census
from .series import count_series

DEFAULT_CAP = 10**8
EMBED_N_CAP = 12


class EmbeddingError(RuntimeError):
    """The BFS assignment hit an inconsistent or non-injective edge."""


# ---------------------------------------------------------------------------
# raw census counts (mode-dual)


@dataclass(frozen=True)
class CensusCounts:
    """Exact tallies over B(n, k), from either route."""

    n: int
    k: int
    mode: str
    total: int
    trivial: int
    leftmost: int
    rightmost: int
    x1inv_blocked: int
    x1barinv_blocked: int
    isolated: int

    def same_counts(self, other: "CensusCounts") -> bool:
        return (
            self.total,
            self.trivial,
            self.leftmost,
            self.rightmost,
            self.x1inv_blocked,
            self.x1barinv_blocked,
            self.isolated,
        ) == (
            other.total,
            other.trivial,
            other.leftmost,
            other.rightmost,
            other.x1inv_blocked,
            other.x1barinv_blocked,
            other.isolated,
        )


def census_counts(
    n: int,
    k: int,
    mode: str = "enumerate",
    cap: int = DEFAULT_CAP,
    trunc: Optional[int] = None,
) -> CensusCounts:
    """Blocked/trivial/isolated tallies over B(n, k) by the chosen route.

    trunc overrides the dp series order (default n; larger values give the
    same coefficients, the prefix of a truncated product is stable).
    """
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if trunc is not None and trunc < n:
        raise ValueError(f"series truncation {trunc} cannot cover [z^{n}]")
    if mode == "both":
        a = census_counts(n, k, "enumerate", cap)
        b = census_counts(n, k, "dp", cap, trunc)
        if not a.same_counts(b):
            raise AssertionError(f"enumerate/dp disagree at n={n} k={k}: {a} {b}")
        return a
    if mode == "enumerate":
        estimate = count_bb(n, k)
        if estimate > cap:
            raise CapExceeded(
                f"|B({n},{k})| = {estimate} exceeds enumeration cap {cap}"
            )
        table = [
            [count_trees_exact_height(l, h) for h in range(k + 1)] if l else [0] * (k + 1)
            for l in range(n + 1)
        ]
        (total, trivial, leftmost, rightmost, right_b, left_b, iso, seqs) = bb_census(
            n, k, table
        )
        if total != estimate or seqs != _seq_counts(n, k)[0]:
            raise AssertionError(
                f"kernel visit counts disagree with recursion at n={n} k={k}"
            )
        return CensusCounts(
            n, k, "enumerate", total, trivial, leftmost, rightmost, right_b, left_b, iso
        )
    if mode == "dp":
        fam = count_series(k, n if trunc is None else trunc)
        return CensusCounts(
            n,
            k,
            "dp",
            fam.total[n],
            fam.trivial_marked[n],
            fam.marked_leftmost[n],
            fam.marked_rightmost[n],
            fam.x1inv_blocked[n],
            fam.x1barinv_blocked[n],
            fam.isolated[n],
        )
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# subgraph statistics


@dataclass(frozen=True)
class SubgraphStats:
    """Exact per-label edge statistics of a finite induced subgraph.

    For each signed generator a, internal(a) + blocked(a) = #Y: every
    vertex either keeps its a-edge inside Y or contributes one Cheeger
    boundary edge.
    """

    vertices: int
    internal: tuple[tuple[str, int], ...]
    blocked: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        if self.vertices <= 0:
            raise ValueError("statistics need a nonempty vertex set")
        if tuple(l for l, _ in self.internal) != tuple(l for l, _ in self.blocked):
            raise ValueError("label sequences differ")
        for (label, inn), (_, out) in zip(self.internal, self.blocked):
            if inn + out != self.vertices:
                raise AssertionError(
                    f"label {label}: {inn} internal + {out} blocked != {self.vertices}"
                )

    @property
    def m(self) -> int:
        if len(self.internal) % 2:
            raise AssertionError("odd number of signed labels")
        return len(self.internal) // 2

    @property
    def degree_sum(self) -> int:
        return sum(c for _, c in self.internal)

    @property
    def cheeger_total(self) -> int:
        return sum(c for _, c in self.blocked)

    @property
    def density(self) -> Fraction:
        return Fraction(self.degree_sum, self.vertices)

    def per_label_internal(self) -> dict[str, int]:
        return dict(self.internal)

    def per_label_blocked(self) -> dict[str, int]:
        return dict(self.blocked)


_FOREST_GENSETS = ("standard", "symmetric", "extended")


def _stats_from_counts(c: CensusCounts, genset: GenSetSpec) -> SubgraphStats:
    if genset.name not in _FOREST_GENSETS:
        raise ValueError(
            f"forest-model statistics support gensets {_FOREST_GENSETS}, "
            f"not {genset.name!r}"
        )
    blocked_by_label = {
        "x0": c.leftmost,
        "x0^-1": c.rightmost,
        "x1": c.trivial,
        "x1^-1": c.x1inv_blocked,
        "x1bar": c.trivial,
        "x1bar^-1": c.x1barinv_blocked,
    }
    labels = [label for label, _ in genset.signed()]
    blocked = tuple((label, blocked_by_label[label]) for label in labels)
    internal = tuple((label, c.total - b) for label, b in blocked)
    return SubgraphStats(vertices=c.total, internal=internal, blocked=blocked)


def stats_bb(
    n: int,
    k: int,
    genset: GenSetSpec,
    mode: str = "enumerate",
    cap: int = DEFAULT_CAP,
) -> SubgraphStats:
    """Induced-subgraph statistics of B(n, k) under a named generating set."""
    return _stats_from_counts(census_counts(n, k, mode, cap), genset)


def isolated_census(
    n: int, k: int, mode: str = "enumerate", cap: int = DEFAULT_CAP
) -> int:
    """Vertices of B(n, k) with all four symmetric-set labels blocked."""
    return census_counts(n, k, mode, cap).isolated


def bprime_stats(
    n: int, k: int, mode: str = "enumerate", cap: int = DEFAULT_CAP
) -> SubgraphStats:
    """Statistics of B'(n, k): B(n, k) minus its isolated vertices.

    Isolated vertices carry no internal symmetric-set edges, so the degree
    sum is unchanged while the vertex count drops; the density rises by
    the exact factor beta/(beta - isolated).
    """
    c = census_counts(n, k, mode, cap)
    remaining = c.total - c.isolated
    if remaining == 0:
        raise ValueError(
            f"B'({n},{k}) is empty: all {c.total} vertices are isolated"
        )
    sym = _stats_from_counts(c, GenSetSpec.symmetric())
    internal = sym.internal
    blocked = tuple((label, remaining - cnt) for label, cnt in internal)
    return SubgraphStats(vertices=remaining, internal=internal, blocked=blocked)


# ---------------------------------------------------------------------------
# the embedding into the Cayley graph


@dataclass(frozen=True)
class Embedding:
    """Injective assignment of normal forms to B(n, k), BFS from the base."""

    n: int
    k: int
    assignment: tuple[tuple[MarkedForest, NormalForm], ...]

    @property
    def base(self) -> MarkedForest:
        return base_forest(self.n)

    def mapping(self) -> dict[MarkedForest, NormalForm]:
        return dict(self.assignment)

    def image(self) -> set[NormalForm]:
        return {nf for _, nf in self.assignment}


def embed(
    n: int,
    k: int,
    n_cap: int = EMBED_N_CAP,
    cap: int = DEFAULT_CAP,
    _action: Callable[[str, MarkedForest, int], Optional[MarkedForest]] = apply_within,
) -> Embedding:
    """Embed B(n, k) into the Cayley graph of F.

    The all-trivial forest with leftmost mark goes to the identity; each
    action edge multiplies on the right by its generator.  Every edge is
    checked in both directions during the BFS, and the final assignment
    must be injective and cover all of B(n, k).
    """
    if n > n_cap:
        raise CapExceeded(f"embed supports n <= {n_cap} (got n = {n})")
    all_forests = enumerate_bb(n, k, cap)
    steps = {label: normalize(LABEL_WORDS[label]) for label in ACTION_LABELS}
    base = base_forest(n)
    assigned: dict[MarkedForest, NormalForm] = {base: IDENTITY}
    frontier = [base]
    while frontier:
        nxt = []
        for f in frontier:
            e = assigned[f]
            for label in ACTION_LABELS:
                g = _action(label, f, k)
                if g is None:
                    continue
                ge = multiply(e, steps[label])
                seen = assigned.get(g)
                if seen is None:
                    assigned[g] = ge
                    nxt.append(g)
                elif seen != ge:
                    raise EmbeddingError(
                        f"edge {label} at {encode_forest(f)} gives {ge}, "
                        f"but {encode_forest(g)} already carries {seen}"
                    )
        frontier = nxt
    if len(assigned) != len(all_forests):
        raise EmbeddingError(
            f"B({n},{k}) not reached fully: {len(assigned)} of {len(all_forests)}"
        )
    values = {nf for nf in assigned.values()}
    if len(values) != len(assigned):
        raise EmbeddingError(f"assignment over B({n},{k}) is not injective")
    assignment = tuple(
        sorted(assigned.items(), key=lambda fv: encode_forest(fv[0]))
    )
    return Embedding(n=n, k=k, assignment=assignment)


def outer_boundary_exact(
    n: int,
    k: int,
    genset: GenSetSpec,
    n_cap: int = EMBED_N_CAP,
    cap: int = DEFAULT_CAP,
) -> int:
    """#dY for Y = B(n, k) embedded in the Cayley graph, exactly.

    Boundary vertices are deduplicated by normal form (dY is a vertex set).
    """
    emb = embed(n, k, n_cap, cap)
    Y = emb.image()
    steps = [normalize(w) for _, w in genset.signed()]
    outside: set[NormalForm] = set()
    for y in Y:
        for s in steps:
            t = multiply(y, s)
            if t not in Y:
                outside.add(t)
    return len(outside)


@dataclass(frozen=True)
class DoublingBound:
    """Edge-selection upper bound on #dY for Y = B(n, k), extended set."""

    n: int
    k: int
    upper_bound: int
    total: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.upper_bound, self.total)


def doubling_bound(
    n: int, k: int, mode: str = "enumerate", cap: int = DEFAULT_CAP
) -> DoublingBound:
    """Edge-selection upper bound on #dY for Y = B(n, k), extended set.

    Every boundary vertex v keeps an edge back into Y, and mapping v to
    that endpoint is injective per label.  Category counts:

      v = u*x0 or u*x0^-1   (mark at an end)        <= leftmost + rightmost
      v = u*x1 or u*x1bar   (marked tree trivial)   <= 2 * trivial
      v = u*x1^-1           (blocked merge right)   <= trivial, exactly the
                            blocked-merge count; every height-blocked
                            x1bar^-1 target also arises this way, since
                            splitting its k+1 caret the other way lands
                            back in Y
      v = u*x1bar^-1, u leftmost-marked (no left
                            neighbour to merge)     <= leftmost

    Total: 3*trivial + 2*leftmost + rightmost.  Since leftmost and
    rightmost are o(|B(n,k)|), the ratio tends to 3 xi_k.
    """
    c = census_counts(n, k, mode, cap)
    bound = 3 * c.trivial + 2 * c.leftmost + c.rightmost
    return DoublingBound(n=n, k=k, upper_bound=bound, total=c.total)


# ---------------------------------------------------------------------------
# element-model statistics


def stats_elements(
    elements: Iterable[NormalForm], genset: GenSetSpec
) -> SubgraphStats:
    """Exact induced-subgraph statistics over a finite set of elements."""
    Y = set(elements)
    if not Y:
        raise ValueError("statistics need a nonempty vertex set")
    internal = []
    blocked = []
    for label, word in genset.signed():
        step = normalize(word)
        inn = sum(1 for y in Y if multiply(y, step) in Y)
        internal.append((label, inn))
        blocked.append((label, len(Y) - inn))
    return SubgraphStats(
        vertices=len(Y), internal=tuple(internal), blocked=tuple(blocked)
    )
