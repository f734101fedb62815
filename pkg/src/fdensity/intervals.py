"""Certified interval arithmetic for the singularity xi_k and derived limits.

xi_k is the unique root of Phi_k(z) = 1 in (0, 1]; it is the radius of
convergence of Psi_k, decreases strictly in k, and tends to 1/4.  Exact
rational iteration of Phi_k is hopeless for large k (coefficient sizes
square at every level), so enclosures are computed with fixed-precision
dyadic endpoints and outward rounding; certificates are exact integer sign
tests.  Bisection escalates the working precision when a comparison is
undecided; escalation failure raises PrecisionExhausted naming the width
that was achieved.

The derived limit quantities are assembled from xi_k enclosures with exact
Fraction interval arithmetic:

    trivial-mark fraction      -> xi_k
    edge-mark fraction         -> 0
    isolated fraction  p(k)    = xi_k (1 - Phi_{k-1}(xi_k))^2
    standard density           = 4 - 2 xi_k    (limit 7/2)
    symmetric density          = 4 - 4 xi_k    (limit 3)
    density of B' (non-isolated vertices)
                               = (4 - 4 xi_k) / (1 - p(k))
    doubling ratio bound       = 3 xi_k        (limit 3/4)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import PrecisionExhausted

DEFAULT_TOL = Fraction(1, 10**12)
DEFAULT_MAX_BITS = 4096


@dataclass(frozen=True)
class CertifiedInterval:
    """A closed interval with exact rational endpoints, lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x) -> "CertifiedInterval":
        x = Fraction(x)
        return CertifiedInterval(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def encloses(self, other: "CertifiedInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __add__(self, other) -> "CertifiedInterval":
        o = _coerce(other)
        return CertifiedInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> "CertifiedInterval":
        return CertifiedInterval(-self.hi, -self.lo)

    def __sub__(self, other) -> "CertifiedInterval":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "CertifiedInterval":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "CertifiedInterval":
        o = _coerce(other)
        products = (
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        )
        return CertifiedInterval(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CertifiedInterval":
        o = _coerce(other)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("interval denominator contains zero")
        inv = CertifiedInterval(1 / o.hi, 1 / o.lo)
        return self * inv

    def __rtruediv__(self, other) -> "CertifiedInterval":
        return _coerce(other) / self

    def squared(self) -> "CertifiedInterval":
        sq = self * self
        lo = Fraction(0) if 0 in self else sq.lo
        return CertifiedInterval(lo, sq.hi)


def _coerce(x) -> CertifiedInterval:
    if isinstance(x, CertifiedInterval):
        return x
    return CertifiedInterval.point(x)


# ---------------------------------------------------------------------------
# dyadic evaluation of Phi_k


def _phi_scaled(k: int, zlo: int, zhi: int, p: int, bound: int) -> tuple[int, int]:
    """Outward-rounded [Phi_k(zlo/2^p), Phi_k(zhi/2^p)] as scaled integers.

    Requires 0 <= zlo <= zhi.  Phi_k is monotone in z on [0, inf) with
    nonnegative values, so the endpoint tracks are independent.  Raises
    when the upper track exceeds `bound` (evaluation too close to or past
    the singularity for this use).
    """
    one = 1 << p
    vlo, vhi = zlo, zhi
    for _ in range(k):
        if vhi > bound * one:
            raise PrecisionExhausted(
                f"Phi evaluation exceeded bound {bound}; point too far past the singularity"
            )
        vlo = zlo + ((vlo * vlo) >> p)
        vhi = zhi - ((-(vhi * vhi)) >> p)
    if vhi > bound * one:
        raise PrecisionExhausted(
            f"Phi evaluation exceeded bound {bound}; point too far past the singularity"
        )
    return vlo, vhi


def _phi_cmp_one(k: int, zlo: int, zhi: int, p: int) -> int:
    """Sign of Phi_k(z) - 1, certified: -1, +1, or 0 when undecided.

    The lower track alone certifies +1 (Phi_j <= Phi_k pointwise), so the
    upper track may be saturated once it passes 2; saturation never yields
    a wrong -1 because a saturated upper track stays above 1 forever.
    """
    one = 1 << p
    cap = 2 * one + 1
    vlo, vhi = zlo, zhi
    for _ in range(k):
        if vlo > one:
            return 1
        if vhi > cap:
            vhi = cap
        vlo = zlo + ((vlo * vlo) >> p)
        vhi = zhi - ((-(vhi * vhi)) >> p)
    if vhi < one:
        return -1
    if vlo > one:
        return 1
    return 0


def _to_scaled(x: Fraction, p: int) -> tuple[int, int]:
    """Outward dyadic bounds (floor, ceil) of x at precision p."""
    num = x.numerator << p
    den = x.denominator
    lo = num // den
    hi = -((-num) // den)
    return lo, hi


def phi_at(
    k: int, z_point, precision: int = 128, bound: int = 64
) -> CertifiedInterval:
    """Certified enclosure of Phi_k over a point or interval in [0, ~1]."""
    if k < 0:
        return CertifiedInterval.point(0)
    iv = _coerce(z_point)
    if iv.lo < 0:
        raise ValueError("Phi enclosure requires a nonnegative argument")
    zlo, _ = _to_scaled(iv.lo, precision)
    _, zhi = _to_scaled(iv.hi, precision)
    vlo, vhi = _phi_scaled(k, zlo, zhi, precision, bound)
    scale = 1 << precision
    return CertifiedInterval(Fraction(vlo, scale), Fraction(max(vlo, vhi), scale))


# ---------------------------------------------------------------------------
# the singularity xi_k


@lru_cache(maxsize=None)
def xi(
    k: int,
    tol: Fraction = DEFAULT_TOL,
    max_bits: int = DEFAULT_MAX_BITS,
) -> CertifiedInterval:
    """Certified enclosure of the root of Phi_k(z) = 1, of width <= tol.

    Bisection on [1/4, 1] with exact endpoint certificates
    Phi_k(lo) < 1 < Phi_k(hi); an undecided midpoint comparison doubles the
    working precision.  xi_0 = 1 exactly.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if k == 0:
        return CertifiedInterval(Fraction(1), Fraction(1))
    p = 64
    a, b = (1 << p) // 4, 1 << p
    if _phi_cmp_one(k, a, a, p) != -1 or _phi_cmp_one(k, b, b, p) != 1:
        raise AssertionError("bracket endpoints failed to certify")
    while Fraction(b - a, 1 << p) > tol:
        m = (a + b) // 2
        # A one-ulp bracket cannot shrink further at this precision.
        side = 0 if m in (a, b) else _phi_cmp_one(k, m, m, p)
        if side < 0:
            a = m
        elif side > 0:
            b = m
        else:
            if 2 * p > max_bits:
                raise PrecisionExhausted(
                    f"xi_{k}: precision budget {max_bits} bits exhausted at "
                    f"width {Fraction(b - a, 1 << p)}"
                )
            a, b, p = a << p, b << p, 2 * p
    return CertifiedInterval(Fraction(a, 1 << p), Fraction(b, 1 << p))


@dataclass(frozen=True)
class LimitFractions:
    """Certified n -> infinity limits of the B(n, k) statistics, fixed k."""

    k: int
    xi: CertifiedInterval
    trivial_fraction: CertifiedInterval
    edge_fraction: CertifiedInterval
    isolated_fraction: CertifiedInterval
    density_standard: CertifiedInterval
    density_symmetric: CertifiedInterval
    bprime_density: CertifiedInterval
    doubling_ratio: CertifiedInterval


def limit_fractions(
    k: int,
    tol: Fraction = DEFAULT_TOL,
    max_bits: int = DEFAULT_MAX_BITS,
) -> LimitFractions:
    """All derived limit quantities at a given k >= 1."""
    if k < 1:
        raise ValueError("limit fractions need k >= 1")
    x = xi(k, tol, max_bits)
    prec = max(128, 8 + max(x.lo.denominator.bit_length(), 64))
    phi_prev = phi_at(k - 1, x, precision=prec)
    pinf = x * (1 - phi_prev).squared()
    dsym = 4 - 4 * x
    return LimitFractions(
        k=k,
        xi=x,
        trivial_fraction=x,
        edge_fraction=CertifiedInterval.point(0),
        isolated_fraction=pinf,
        density_standard=4 - 2 * x,
        density_symmetric=dsym,
        bprime_density=dsym / (1 - pinf),
        doubling_ratio=3 * x,
    )
