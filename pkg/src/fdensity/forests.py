"""Marked binary forests and the partial actions of the generators of F.

A vertex of the graph model is a forest: a nonempty sequence of rooted
binary trees carrying exactly one marked tree.  B(n, k) is the set of such
forests with n leaves in total and every tree of height at most k.

Trees are nested pairs: a leaf is ``None``, an inner node is ``(left,
right)``.  Textual grammar (used verbatim in files and on the CLI):

    tree   := "." | "(" tree tree ")"
    forest := item (" " item)*
    item   := tree | "*" tree          -- exactly one item is starred

The six action labels match the signed generators of the extended set
{x0, x1, x1bar}; acting by a label corresponds to right multiplication by
that generator under the embedding into F (see census.embed):

    x0        move the mark one tree to the left
    x0^-1     move the mark one tree to the right
    x1        split the marked tree (child trees replace it; left marked)
    x1bar     same split, but the right child is marked
    x1^-1     merge the marked tree with its right neighbour (mark stays)
    x1bar^-1  merge the left neighbour with the marked tree (mark stays)

Each action is partial: ``apply`` returns None where undefined, and
``apply_within`` additionally returns None when a merge would create a tree
of height above k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .errors import CapExceeded
from .group import W_X0, W_X1, W_X1BAR, Word, inverse_word

Tree = Optional[tuple]

LEAF: Tree = None

ACTION_LABELS = ("x0", "x0^-1", "x1", "x1^-1", "x1bar", "x1bar^-1")

LABEL_WORDS: dict[str, Word] = {
    "x0": W_X0,
    "x0^-1": inverse_word(W_X0),
    "x1": W_X1,
    "x1^-1": inverse_word(W_X1),
    "x1bar": W_X1BAR,
    "x1bar^-1": inverse_word(W_X1BAR),
}


# ---------------------------------------------------------------------------
# trees


def leaves(t: Tree) -> int:
    if t is None:
        return 1
    return leaves(t[0]) + leaves(t[1])


def height(t: Tree) -> int:
    if t is None:
        return 0
    return 1 + max(height(t[0]), height(t[1]))


def encode_tree(t: Tree) -> str:
    if t is None:
        return "."
    return "(" + encode_tree(t[0]) + encode_tree(t[1]) + ")"


def _decode_tree(text: str, i: int) -> tuple[Tree, int]:
    if i >= len(text):
        raise ValueError(f"unexpected end of input at position {i}")
    ch = text[i]
    if ch == ".":
        return None, i + 1
    if ch == "(":
        left, i = _decode_tree(text, i + 1)
        right, i = _decode_tree(text, i)
        if i >= len(text) or text[i] != ")":
            raise ValueError(f"expected ')' at position {i}")
        return (left, right), i + 1
    raise ValueError(f"unexpected character {ch!r} at position {i}")


def decode_tree(text: str) -> Tree:
    t, i = _decode_tree(text, 0)
    if i != len(text):
        raise ValueError(f"trailing input at position {i}")
    return t


@lru_cache(maxsize=None)
def enumerate_trees(n: int, kmax: int) -> tuple[Tree, ...]:
    """All trees with n leaves and height <= kmax, in encode-lex order."""
    if n < 1:
        raise ValueError("a tree has at least one leaf")
    kmax = min(kmax, n - 1)
    if n == 1:
        return (LEAF,)
    if kmax < 1 or n > 2**kmax:
        return ()
    out = []
    for ln in range(1, n):
        for lt in enumerate_trees(ln, kmax - 1):
            for rt in enumerate_trees(n - ln, kmax - 1):
                out.append((lt, rt))
    return tuple(sorted(out, key=encode_tree))


@lru_cache(maxsize=None)
def count_trees(n: int, kmax: int) -> int:
    """Number of trees with n leaves and height <= kmax, without
    materializing them."""
    if n < 1:
        raise ValueError("a tree has at least one leaf")
    kmax = min(kmax, n - 1)
    if n == 1:
        return 1
    if kmax < 1 or (n - 1) >> kmax:
        return 0
    return sum(
        count_trees(ln, kmax - 1) * count_trees(n - ln, kmax - 1)
        for ln in range(1, n)
    )


def count_trees_exact_height(n: int, h: int) -> int:
    """Number of trees with n leaves and height exactly h."""
    if h < 0 or (h > n - 1 and n > 1):
        return 0
    return count_trees(n, h) - (count_trees(n, h - 1) if h >= 1 else 0)


# ---------------------------------------------------------------------------
# marked forests


@dataclass(frozen=True)
class MarkedForest:
    trees: tuple[Tree, ...]
    mark: int

    def __post_init__(self) -> None:
        if not self.trees:
            raise ValueError("a forest has at least one tree")
        if not 0 <= self.mark < len(self.trees):
            raise ValueError(f"mark {self.mark} out of range")

    @property
    def n(self) -> int:
        return sum(leaves(t) for t in self.trees)

    def max_height(self) -> int:
        return max(height(t) for t in self.trees)

    def __str__(self) -> str:
        return encode_forest(self)


def encode_forest(f: MarkedForest) -> str:
    return " ".join(
        ("*" if i == f.mark else "") + encode_tree(t) for i, t in enumerate(f.trees)
    )


def decode_forest(text: str) -> MarkedForest:
    items = text.split(" ")
    trees = []
    mark = None
    for idx, item in enumerate(items):
        if not item:
            raise ValueError(f"empty forest item at index {idx}")
        body = item
        if item[0] == "*":
            if mark is not None:
                raise ValueError(f"second mark at item {idx}")
            mark = idx
            body = item[1:]
        trees.append(decode_tree(body))
    if mark is None:
        raise ValueError("no marked tree")
    return MarkedForest(tuple(trees), mark)


def base_forest(n: int) -> MarkedForest:
    """n trivial trees, leftmost marked; embeds to the identity of F."""
    return MarkedForest((LEAF,) * n, 0)


def apply(label: str, f: MarkedForest) -> Optional[MarkedForest]:
    """The partial action of one signed generator; None where undefined."""
    ts, m = f.trees, f.mark
    if label == "x0":
        if m == 0:
            return None
        return MarkedForest(ts, m - 1)
    if label == "x0^-1":
        if m == len(ts) - 1:
            return None
        return MarkedForest(ts, m + 1)
    if label in ("x1", "x1bar"):
        t = ts[m]
        if t is None:
            return None
        split = ts[:m] + (t[0], t[1]) + ts[m + 1:]
        return MarkedForest(split, m if label == "x1" else m + 1)
    if label == "x1^-1":
        if m == len(ts) - 1:
            return None
        merged = ts[:m] + ((ts[m], ts[m + 1]),) + ts[m + 2:]
        return MarkedForest(merged, m)
    if label == "x1bar^-1":
        if m == 0:
            return None
        merged = ts[:m - 1] + ((ts[m - 1], ts[m]),) + ts[m + 1:]
        return MarkedForest(merged, m - 1)
    raise ValueError(f"unknown action label {label!r}")


def apply_within(label: str, f: MarkedForest, k: int) -> Optional[MarkedForest]:
    """Like apply, but blocked when a merge would exceed height k."""
    if label == "x1^-1":
        m = f.mark
        if m == len(f.trees) - 1:
            return None
        if max(height(f.trees[m]), height(f.trees[m + 1])) >= k:
            return None
    elif label == "x1bar^-1":
        m = f.mark
        if m == 0:
            return None
        if max(height(f.trees[m - 1]), height(f.trees[m])) >= k:
            return None
    return apply(label, f)


def apply_word(labels: list[str], f: MarkedForest, k: int = -1) -> Optional[MarkedForest]:
    """Compose partial actions left to right; k < 0 means unbounded."""
    g: Optional[MarkedForest] = f
    for label in labels:
        if g is None:
            return None
        g = apply(label, g) if k < 0 else apply_within(label, g, k)
    return g


def is_isolated(f: MarkedForest, k: int) -> bool:
    """All four symmetric-set actions blocked within height k."""
    return all(
        apply_within(label, f, k) is None
        for label in ("x1", "x1^-1", "x1bar", "x1bar^-1")
    )


# ---------------------------------------------------------------------------
# enumeration of B(n, k)


@lru_cache(maxsize=None)
def _seq_counts(n: int, k: int) -> tuple[int, int]:
    """(number of tree sequences with n total leaves, total tree count over
    them), all heights <= k."""
    if n == 0:
        return (1, 0)
    seqs = 0
    marks = 0
    for ln in range(1, n + 1):
        t = count_trees(ln, k)
        if t == 0:
            continue
        s, b = _seq_counts(n - ln, k)
        seqs += t * s
        marks += t * (b + s)
    return (seqs, marks)


def count_bb(n: int, k: int) -> int:
    """|B(n, k)| by direct recursion over tree sequences."""
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _seq_counts(n, k)[1]


def _iter_sequences(n: int, k: int) -> Iterator[tuple[Tree, ...]]:
    if n == 0:
        yield ()
        return
    for ln in range(1, n + 1):
        for t in enumerate_trees(ln, k):
            for rest in _iter_sequences(n - ln, k):
                yield (t,) + rest


def iter_bb(n: int, k: int) -> Iterator[MarkedForest]:
    """Yield all of B(n, k) (unsorted)."""
    for seq in _iter_sequences(n, k):
        for m in range(len(seq)):
            yield MarkedForest(seq, m)


def enumerate_bb(n: int, k: int, cap: int = 10**8) -> list[MarkedForest]:
    """All of B(n, k) in encode-lex order; refuses if the count exceeds cap."""
    total = count_bb(n, k)
    if total > cap:
        raise CapExceeded(f"|B({n},{k})| = {total} exceeds cap {cap}")
    out = list(iter_bb(n, k))
    out.sort(key=encode_forest)
    return out
