"""Exact rational interval arithmetic.

Everything certificate-grade in this package runs on closed intervals with
`fractions.Fraction` endpoints.  Interval operations return intervals that
contain the exact image set; because endpoint arithmetic is exact there is
no rounding step and hence no rounding-mode bookkeeping.  Floating point is
used in one place only: to *seed* brackets for n-th roots.  Every seed is
verified by exact rational powering before it is trusted, so a bad seed can
cost time but never correctness.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

#: Default width target for root enclosures.
DEFAULT_ROOT_TOL = Fraction(1, 10**30)

# pi truncated to 40 decimal places; the 41st digit is 6, so the truncation
# window [PI_LO, PI_LO + 10^-40] is a genuine enclosure.  The test suite
# re-derives this bracket from an arctangent series with explicit tail
# bounds, in pure rational arithmetic.
_PI_DIGITS = 31415926535897932384626433832795028841971
PI_LO = Fraction(_PI_DIGITS, 10**40)
PI_HI = Fraction(_PI_DIGITS + 1, 10**40)


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(
            "refusing to build an interval endpoint from a float; "
            "pass a Fraction, int, or decimal string instead"
        )
    return Fraction(value)


class Interval:
    """A closed interval [lo, hi] with exact rational endpoints.

    Supports +, -, *, /, integer powers, abs, and containment queries.
    Mixed arithmetic with ints/Fractions treats the scalar as a point
    interval.  Division requires the divisor to be bounded away from zero.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        lo = _as_fraction(lo)
        hi = _as_fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval: lo={lo} > hi={hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("Interval is immutable")

    # -- queries ----------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, value) -> bool:
        value = _as_fraction(value)
        return self.lo <= value <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersection(self, other: "Interval") -> "Interval":
        if not self.intersects(other):
            raise ValueError(f"disjoint intervals {self} and {other}")
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_nonnegative(self) -> bool:
        return self.lo >= 0

    def straddles_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    # Certified order relations: true only when the relation holds for
    # every pair of points drawn from the two intervals.
    def strictly_below(self, other) -> bool:
        other = _coerce(other)
        return self.hi < other.lo

    def below(self, other) -> bool:
        other = _coerce(other)
        return self.hi <= other.lo

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other.lo == other.hi:  # scalar fast path
            c = other.lo
            if c >= 0:
                return Interval(self.lo * c, self.hi * c)
            return Interval(self.hi * c, self.lo * c)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def inverse(self) -> "Interval":
        if self.straddles_zero():
            raise ZeroDivisionError(f"interval {self} contains zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("interval powers must have int exponents; "
                            "use frac_pow for fractional powers")
        if n < 0:
            return (self ** (-n)).inverse()
        if n == 0:
            return Interval(1)
        if n % 2 == 1 or self.lo >= 0:
            return Interval(self.lo**n, self.hi**n)
        if self.hi <= 0:
            return Interval(self.hi**n, self.lo**n)
        # even power of a zero-straddling interval
        return Interval(0, max(self.lo**n, self.hi**n))

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(0, max(-self.lo, self.hi))

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Interval)
            and self.lo == other.lo
            and self.hi == other.hi
        )

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __float__(self):
        return float(self.mid)

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __str__(self):
        return f"[{float(self.lo):.17g}, {float(self.hi):.17g}]"


def _coerce(value) -> Interval:
    if isinstance(value, Interval):
        return value
    return Interval(value)


def pi_enclosure() -> Interval:
    """Enclosure of pi with width 1e-40."""
    return Interval(PI_LO, PI_HI)


def _float_root_seed(a: Fraction, n: int) -> float:
    """Non-rigorous float estimate of a**(1/n), overflow-safe."""
    num, den = a.numerator, a.denominator
    try:
        return float(a) ** (1.0 / n)
    except OverflowError:
        # compute in log space from the integer bit lengths
        log2a = (num.bit_length() - den.bit_length()) * math.log(2)
        return math.exp(log2a / n)


def _root_bracket(a: Fraction, n: int, tol: Fraction):
    """Return (lo, hi) with lo**n <= a <= hi**n and hi - lo <= tol."""
    if a < 0:
        raise ValueError(f"n-th root of negative rational {a}")
    if a == 0:
        return Fraction(0), Fraction(0)
    seed = _float_root_seed(a, n)
    if seed <= 0 or not math.isfinite(seed):
        lo, hi = Fraction(0), max(Fraction(1), a)
    else:
        slack = Fraction(1, 2**40)
        s = Fraction(seed)
        for _ in range(80):
            lo = s * (1 - slack)
            hi = s * (1 + slack)
            if lo**n <= a <= hi**n:
                break
            slack *= 4
        else:  # pathological seed; fall back to a trivial bracket
            lo, hi = Fraction(0), max(Fraction(1), a)
    if lo < 0:
        lo = Fraction(0)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid**n <= a:
            lo = mid
        else:
            hi = mid
    return lo, hi


def root_enclosure(u, n: int, tol: Fraction = DEFAULT_ROOT_TOL) -> Interval:
    """Enclosure of the n-th root of a nonnegative interval or rational.

    The root map is monotone, so the enclosure is the hull of verified
    brackets of the endpoint roots.  ``tol`` bounds each bracket's width
    (the result can be wider if the input interval is wide).
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"root order must be a positive int, got {n!r}")
    u = _coerce(u)
    if u.lo < 0:
        raise ValueError(f"n-th root of interval {u} with negative part")
    if n == 1:
        return u
    lo, _ = _root_bracket(u.lo, n, tol)
    _, hi = _root_bracket(u.hi, n, tol)
    return Interval(lo, hi)


def sqrt_enclosure(u, tol: Fraction = DEFAULT_ROOT_TOL) -> Interval:
    return root_enclosure(u, 2, tol)


def frac_pow(u, num: int, den: int,
             tol: Fraction = DEFAULT_ROOT_TOL) -> Interval:
    """Enclosure of u ** (num/den) for positive u (u >= 0 when num > 0).

    Computed as the num-th integer power of an n-th root enclosure; for
    negative ``num`` the positive power is inverted.
    """
    if not isinstance(num, int) or not isinstance(den, int) or den < 1:
        raise ValueError("frac_pow exponent must be int/positive-int")
    u = _coerce(u)
    if num == 0:
        return Interval(1)
    root = root_enclosure(u, den, tol)
    return root**num


def sqrt2_enclosure(tol: Fraction = DEFAULT_ROOT_TOL) -> Interval:
    return root_enclosure(2, 2, tol)


def stokes_modulus(tol: Fraction = DEFAULT_ROOT_TOL) -> Interval:
    """Enclosure of sqrt(6/(5*pi)), the modulus of the Stokes multiplier
    attached to the tritronquee's exponentially small corrections."""
    return sqrt_enclosure(Interval(6) / (5 * pi_enclosure()), tol)


def truncation_window(printed: str) -> Interval:
    """The set of reals a truncated decimal string stands for.

    A value printed as ``0.91863`` (with further digits dropped, not
    rounded) lies in [0.91863, 0.91864).  We return the closed hull, which
    is what a containment check against an enclosure needs.
    """
    printed = printed.strip()
    if printed.startswith("-"):
        return -truncation_window(printed[1:])
    if "." not in printed:
        raise ValueError(f"expected a decimal string, got {printed!r}")
    digits = len(printed) - printed.index(".") - 1
    lo = Fraction(printed)
    return Interval(lo, lo + Fraction(1, 10**digits))


__all__ = [
    "Rational",
    "Interval",
    "DEFAULT_ROOT_TOL",
    "pi_enclosure",
    "root_enclosure",
    "sqrt_enclosure",
    "sqrt2_enclosure",
    "frac_pow",
    "stokes_modulus",
    "truncation_window",
]
