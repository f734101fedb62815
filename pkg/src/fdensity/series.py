"""Exact truncated power series over the integers, and the tree series.

Phi_k(z) counts rooted binary trees of height <= k by number of leaves:
Phi_0 = z and Phi_k = z + Phi_{k-1}^2.  The marked-forest counting series

    Psi_k(z) = Phi_k / (1 - Phi_k)^2

has [z^n] Psi_k = |B(n, k)|.  The per-label blocked counts over B(n, k)
are coefficients of closed-form combinations of Phi_k and Phi_{k-1}
assembled in count_series (with Phi_{-1} = 0, so k = 0 works uniformly).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb


class TruncatedSeries:
    """A polynomial in z modulo z^(trunc+1), with exact int coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)})"

    def _check(self, other: "TruncatedSeries") -> None:
        if self.trunc != other.trunc:
            raise ValueError("truncation orders differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = self.trunc
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries(c * a for a in self.coeffs)

    def geometric(self) -> "TruncatedSeries":
        """1 / (1 - self); requires zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("geometric() needs zero constant term")
        n = self.trunc
        out = [0] * (n + 1)
        out[0] = 1
        for m in range(1, n + 1):
            out[m] = sum(self.coeffs[i] * out[m - i] for i in range(1, m + 1))
        return TruncatedSeries(out)


def zero(trunc: int) -> TruncatedSeries:
    return TruncatedSeries([0] * (trunc + 1))


def one(trunc: int) -> TruncatedSeries:
    return TruncatedSeries([1] + [0] * trunc)


def z(trunc: int) -> TruncatedSeries:
    if trunc < 1:
        raise ValueError("truncation order must be at least 1")
    return TruncatedSeries([0, 1] + [0] * (trunc - 1))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def phi(k: int, trunc: int) -> TruncatedSeries:
    """Phi_k truncated; [z^n] counts binary trees with n leaves, height <= k."""
    if k < 0:
        return zero(trunc)
    if k == 0:
        return z(trunc)
    p = phi(k - 1, trunc)
    return z(trunc) + p * p


@lru_cache(maxsize=None)
def psi(k: int, trunc: int) -> TruncatedSeries:
    """Psi_k = Phi_k/(1-Phi_k)^2; [z^n] = |B(n, k)|."""
    p = phi(k, trunc)
    g = p.geometric()
    return p * g * g


@dataclass(frozen=True)
class CountSeriesFamily:
    """Coefficientwise-exact counting series over B(n, k), n = degree.

    total:            all marked forests (= Psi_k)
    trivial_marked:   marked tree is a single leaf (x1 and x1bar blocked)
    marked_leftmost:  mark on the first tree (x0 blocked)
    marked_rightmost: mark on the last tree (x0^-1 blocked)
    x1inv_blocked:    merge with right neighbour impossible within height k
    x1barinv_blocked: merge with left neighbour impossible within height k
    isolated:         all four symmetric-set labels blocked
    """

    k: int
    trunc: int
    total: TruncatedSeries
    trivial_marked: TruncatedSeries
    marked_leftmost: TruncatedSeries
    marked_rightmost: TruncatedSeries
    x1inv_blocked: TruncatedSeries
    x1barinv_blocked: TruncatedSeries
    isolated: TruncatedSeries


@lru_cache(maxsize=None)
def count_series(k: int, trunc: int) -> CountSeriesFamily:
    """Blocked-count series over B(n, k); Phi_{-1} = 0 covers k = 0.

    A merge at the mark is blocked when the mark is at the boundary or one
    of the two trees involved has height exactly k; trees of height exactly
    k are counted by Phi_k - Phi_{k-1}.  Inclusion-exclusion gives each
    series below; Phi_k - Phi_{k-1}^2 = z makes x1inv_blocked equal
    trivial_marked coefficientwise, which realises the per-label boundary
    balance exactly rather than just asymptotically.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = phi(k, trunc)
    pprev = phi(k - 1, trunc)
    g = p.geometric()
    zs = z(trunc)
    ons = one(trunc)
    total = p * g * g
    trivial = zs * g * g
    edge = p * g
    # blocked merge on the right: mark rightmost, or (splitting off the
    # rightmost position) one of the two adjacent trees has height k:
    # edge + (p^2 - pprev^2) * g^2.
    tall_pair = (p * p - pprev * pprev) * g * g
    blocked = edge + tall_pair
    # isolated: marked tree trivial and each side either absent or of
    # height exactly k; H = Phi_k - Phi_{k-1} counts height exactly k.
    h = p - pprev
    side = ons + h * g
    isolated = side * zs * side
    return CountSeriesFamily(
        k=k,
        trunc=trunc,
        total=total,
        trivial_marked=trivial,
        marked_leftmost=edge,
        marked_rightmost=edge,
        x1inv_blocked=blocked,
        x1barinv_blocked=blocked,
        isolated=isolated,
    )


def catalan_series_check(trunc: int) -> bool:
    """Does C(z) = sum c_n z^(n+1) satisfy C = z + C^2 through z^trunc?"""
    c = TruncatedSeries([0] + [catalan(n) for n in range(trunc)])
    return c == z(trunc) + c * c


def catalan_prefix_holds(k: int, trunc: int | None = None) -> bool:
    """[z^(n+1)] Phi_k = c_n for n <= k (trees of <= k+1 leaves are short)."""
    p = phi(k, trunc if trunc is not None else k + 1)
    return all(p[n + 1] == catalan(n) for n in range(0, min(k, p.trunc - 1) + 1))
