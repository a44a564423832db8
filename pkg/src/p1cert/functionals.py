"""Weighted tail functionals and the exact value algebra they feed.

The four functionals map a decaying-exponential coefficient family

    P(eta) = sum over m of p_m * eta^(-m)        (eta = e^x)

to weighted l1 sums that bound radial-path integrals of x^(-j/2) P(e^x)
against bounded analytic prefactors:

    tail1_j[P] = 2/(j-2) * sum |p_m|              (j > 2, m >= 0)
    tail2_j[P] = sum 2/m * |p_m|                  (j > 0, m >= 1)
    tail3_j[P] = 2/(j-3) * sum |p_m|              (j > 3, m >= 0)
    tail4_j[P] = sum (j^2+2j-2)/(j(j-1)m) * |p_m| (j > 1, m >= 1)

Families carry a formal symbol S: entries are keyed (k, m) and stand
for coefficients of S^k e^(-m x).  The functionals therefore return
polynomials in |S| (:class:`SPoly`) rather than numbers.

The value algebra is exact end to end: :class:`QSqrt2` is the field
Q(sqrt(2)) with decidable signs, :class:`SPoly` are polynomials in |S|
over it, and :class:`PowerSum` are finite sums of SPoly-weighted powers
rho^(-e) with rational e.  Numbers only appear at the final enclosure
step, where |S|, sqrt(2), and rho are replaced by verified intervals.
A PowerSum whose exponents are all nonnegative and whose coefficients
are all nonnegative is mechanically certified nonincreasing in rho, so
its supremum over rho >= rho0 is its value at rho0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from .numerics import (
    DEFAULT_ROOT_TOL,
    Interval,
    frac_pow,
    sqrt2_enclosure,
    stokes_modulus,
)

Scalar = Union[int, str, Fraction]
FamilyKey = Tuple[int, int]  # (k, m): coefficient of S^k e^(-m x)


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(
            f"float {value!r} is not an exact value; "
            "use int, Fraction, or a 'num/den' string"
        )
    return Fraction(value)


# -- Q(sqrt(2)) ---------------------------------------------------------------

class QSqrt2:
    """Exact element a + b*sqrt(2) of the field Q(sqrt(2))."""

    __slots__ = ("a", "b")

    def __init__(self, a: Scalar = 0, b: Scalar = 0):
        object.__setattr__(self, "a", _exact(a))
        object.__setattr__(self, "b", _exact(b))

    def __setattr__(self, name, value):
        raise AttributeError("QSqrt2 is immutable")

    # arithmetic
    def __add__(self, other):
        other = _coerce_q(other)
        return QSqrt2(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt2(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-_coerce_q(other))

    def __rsub__(self, other):
        return _coerce_q(other) + (-self)

    def __mul__(self, other):
        other = _coerce_q(other)
        return QSqrt2(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    # order
    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        norm = a * a - 2 * b * b  # (a + b*sqrt2)(a - b*sqrt2)
        if a > 0:  # b < 0
            return 1 if norm > 0 else -1
        return 1 if norm < 0 else -1  # a < 0, b > 0

    def is_nonnegative(self) -> bool:
        return self.sign() >= 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    # conversion
    def enclosure(self, sqrt2: Interval | None = None,
                  tol: Fraction = DEFAULT_ROOT_TOL) -> Interval:
        if sqrt2 is None:
            sqrt2 = sqrt2_enclosure(tol)
        return Interval(self.a) + sqrt2 * self.b

    def __eq__(self, other):
        try:
            other = _coerce_q(other)
        except TypeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        if self.b == 0:
            return f"QSqrt2({self.a})"
        return f"QSqrt2({self.a}, {self.b})"


def _coerce_q(value) -> QSqrt2:
    if isinstance(value, QSqrt2):
        return value
    return QSqrt2(_exact(value))


# -- polynomials in |S| --------------------------------------------------------

class SPoly:
    """Polynomial in the nonnegative symbol |S| with QSqrt2 coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Union[Mapping[int, Union[Scalar, QSqrt2]],
                                     Iterable[Tuple[int, Union[Scalar, QSqrt2]]]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, QSqrt2] = {}
        for k, c in items:
            if not isinstance(k, int) or k < 0:
                raise ValueError(f"|S| powers must be nonnegative ints, got {k!r}")
            c = _coerce_q(c)
            if c.is_zero():
                continue
            s = acc.get(k, QSqrt2()) + c
            if s.is_zero():
                acc.pop(k, None)
            else:
                acc[k] = s
        object.__setattr__(self, "_coeffs", acc)

    def __setattr__(self, name, value):
        raise AttributeError("SPoly is immutable")

    @classmethod
    def constant(cls, value: Union[Scalar, QSqrt2]) -> "SPoly":
        return cls({0: value})

    @classmethod
    def s_power(cls, k: int, coeff: Union[Scalar, QSqrt2] = 1) -> "SPoly":
        return cls({k: coeff})

    def items(self):
        return sorted(self._coeffs.items())

    def coefficient(self, k: int) -> QSqrt2:
        return self._coeffs.get(k, QSqrt2())

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_nonnegative(self) -> bool:
        """True when every coefficient is >= 0 (so the value is, too)."""
        return all(c.is_nonnegative() for c in self._coeffs.values())

    def __add__(self, other):
        other = _coerce_spoly(other)
        acc = dict(self._coeffs)
        for k, c in other._coeffs.items():
            s = acc.get(k, QSqrt2()) + c
            if s.is_zero():
                acc.pop(k, None)
            else:
                acc[k] = s
        return SPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return SPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-_coerce_spoly(other))

    def __rsub__(self, other):
        return _coerce_spoly(other) + (-self)

    def __mul__(self, other):
        other = _coerce_spoly(other)
        acc: dict[int, QSqrt2] = {}
        for k1, c1 in self._coeffs.items():
            for k2, c2 in other._coeffs.items():
                k = k1 + k2
                s = acc.get(k, QSqrt2()) + c1 * c2
                if s.is_zero():
                    acc.pop(k, None)
                else:
                    acc[k] = s
        return SPoly(acc)

    __rmul__ = __mul__

    def enclosure(self, s_abs: Interval | None = None,
                  sqrt2: Interval | None = None,
                  tol: Fraction = DEFAULT_ROOT_TOL) -> Interval:
        if s_abs is None:
            s_abs = stokes_modulus(tol)
        if sqrt2 is None:
            sqrt2 = sqrt2_enclosure(tol)
        total = Interval(0)
        for k, c in self._coeffs.items():
            total = total + c.enclosure(sqrt2) * s_abs**k
        return total

    def __eq__(self, other):
        try:
            other = _coerce_spoly(other)
        except TypeError:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        if not self._coeffs:
            return "SPoly(0)"
        bits = [f"{k}: {c!r}" for k, c in self.items()]
        return "SPoly({" + ", ".join(bits) + "})"


def _coerce_spoly(value) -> SPoly:
    if isinstance(value, SPoly):
        return value
    if isinstance(value, QSqrt2):
        return SPoly.constant(value)
    return SPoly.constant(_exact(value))


# -- sums of rho powers --------------------------------------------------------

class PowerSum:
    """Finite sum over rational e of  SPoly_e * rho^(-e).

    Exponents may be any rationals; the nonincreasing-in-rho
    certification below additionally requires them nonnegative.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[Scalar, Union[Scalar, QSqrt2, SPoly]],
                                    Iterable[Tuple[Scalar, Union[Scalar, QSqrt2, SPoly]]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Fraction, SPoly] = {}
        for e, c in items:
            e = _exact(e)
            c = _coerce_spoly(c)
            if c.is_zero():
                continue
            s = acc.get(e, SPoly()) + c
            if s.is_zero():
                acc.pop(e, None)
            else:
                acc[e] = s
        object.__setattr__(self, "_terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSum is immutable")

    @classmethod
    def monomial(cls, coeff: Union[Scalar, QSqrt2, SPoly], exponent: Scalar) -> "PowerSum":
        """coeff * rho^(-exponent)."""
        return cls({_exact(exponent): coeff})

    @classmethod
    def constant(cls, coeff: Union[Scalar, QSqrt2, SPoly]) -> "PowerSum":
        return cls.monomial(coeff, 0)

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, exponent: Scalar) -> SPoly:
        return self._terms.get(_exact(exponent), SPoly())

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        other = _coerce_powersum(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, SPoly()) + c
            if s.is_zero():
                acc.pop(e, None)
            else:
                acc[e] = s
        return PowerSum(acc)

    __radd__ = __add__

    def __neg__(self):
        return PowerSum({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce_powersum(other))

    def __rsub__(self, other):
        return _coerce_powersum(other) + (-self)

    def __mul__(self, other):
        other = _coerce_powersum(other)
        acc: dict[Fraction, SPoly] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = acc.get(e, SPoly()) + c1 * c2
                if s.is_zero():
                    acc.pop(e, None)
                else:
                    acc[e] = s
        return PowerSum(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("PowerSum powers must be nonnegative ints")
        result = PowerSum.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def nonincreasing_in_rho(self) -> bool:
        """Mechanical certificate that the value cannot grow with rho >= 1.

        True when every exponent is >= 0 and every coefficient polynomial
        is (coefficientwise) nonnegative: each term c * rho^(-e) is then
        nonnegative and nonincreasing for rho >= 1, hence so is the sum,
        and the supremum over rho >= rho0 is attained at rho0.
        """
        return all(
            e >= 0 and c.is_nonnegative() for e, c in self._terms.items()
        )

    def enclosure(self, rho, s_abs: Interval | None = None,
                  sqrt2: Interval | None = None,
                  tol: Fraction = DEFAULT_ROOT_TOL) -> Interval:
        """Interval value at rho (Interval or exact rational)."""
        if not isinstance(rho, Interval):
            rho = Interval(_exact(rho))
        if s_abs is None:
            s_abs = stokes_modulus(tol)
        if sqrt2 is None:
            sqrt2 = sqrt2_enclosure(tol)
        total = Interval(0)
        for e, c in self._terms.items():
            power = frac_pow(rho, -e.numerator, e.denominator, tol)
            total = total + c.enclosure(s_abs, sqrt2) * power
        return total

    def __eq__(self, other):
        try:
            other = _coerce_powersum(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "PowerSum(0)"
        bits = [f"rho^(-{e}): {c!r}" for e, c in self.items()]
        return "PowerSum({" + ", ".join(bits) + "})"


def _coerce_powersum(value) -> PowerSum:
    if isinstance(value, PowerSum):
        return value
    if isinstance(value, (SPoly, QSqrt2)):
        return PowerSum.constant(value)
    return PowerSum.constant(_exact(value))


# -- the weighted tail functionals ---------------------------------------------

def _family(entries: Mapping[FamilyKey, Scalar]) -> dict[FamilyKey, Fraction]:
    out: dict[FamilyKey, Fraction] = {}
    for (k, m), c in entries.items():
        if not (isinstance(k, int) and isinstance(m, int)) or k < 0:
            raise ValueError(f"family keys are (S-power >= 0, integer m): {(k, m)!r}")
        c = _exact(c)
        if c != 0:
            out[(k, m)] = c
    return out


def _require_m_at_least(family: Mapping[FamilyKey, Fraction], m_min: int, name: str):
    for (_, m) in family:
        if m < m_min:
            raise ValueError(
                f"{name} needs every exponential order m >= {m_min}, found m = {m}"
            )


def _abs_sums_by_s_power(family: Mapping[FamilyKey, Fraction],
                         weight_of_m) -> SPoly:
    acc: dict[int, Fraction] = {}
    for (k, m), c in family.items():
        acc[k] = acc.get(k, Fraction(0)) + abs(c) * weight_of_m(m)
    return SPoly({k: v for k, v in acc.items()})


def tail1(j: int, entries: Mapping[FamilyKey, Scalar]) -> SPoly:
    """2/(j-2) * sum |p_m| over the family; needs j > 2 and m >= 0."""
    if j <= 2:
        raise ValueError(f"tail1 needs j > 2, got j = {j}")
    family = _family(entries)
    _require_m_at_least(family, 0, "tail1")
    w = Fraction(2, j - 2)
    return _abs_sums_by_s_power(family, lambda m: w)


def tail2(j: int, entries: Mapping[FamilyKey, Scalar]) -> SPoly:
    """sum (2/m) |p_m| over the family; needs j > 0 and m >= 1."""
    if j <= 0:
        raise ValueError(f"tail2 needs j > 0, got j = {j}")
    family = _family(entries)
    _require_m_at_least(family, 1, "tail2")
    return _abs_sums_by_s_power(family, lambda m: Fraction(2, m))


def tail3(j: int, entries: Mapping[FamilyKey, Scalar]) -> SPoly:
    """2/(j-3) * sum |p_m| over the family; needs j > 3 and m >= 0."""
    if j <= 3:
        raise ValueError(f"tail3 needs j > 3, got j = {j}")
    family = _family(entries)
    _require_m_at_least(family, 0, "tail3")
    w = Fraction(2, j - 3)
    return _abs_sums_by_s_power(family, lambda m: w)


def tail4(j: int, entries: Mapping[FamilyKey, Scalar]) -> SPoly:
    """sum (j^2+2j-2)/(j(j-1)m) |p_m| over the family; needs j > 1, m >= 1."""
    if j <= 1:
        raise ValueError(f"tail4 needs j > 1, got j = {j}")
    family = _family(entries)
    _require_m_at_least(family, 1, "tail4")
    w = Fraction(j * j + 2 * j - 2, j * (j - 1))
    return _abs_sums_by_s_power(family, lambda m: w / m)


__all__ = [
    "QSqrt2",
    "SPoly",
    "PowerSum",
    "tail1",
    "tail2",
    "tail3",
    "tail4",
]
