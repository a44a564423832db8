"""Uniform pass/fail records for certified inequality and identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

_COMPARATORS = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    "==": lambda a, b: a == b,
}


@dataclass(frozen=True)
class CheckResult:
    """One certified comparison: ``value <comparison> bound``.

    ``value`` is the rigorously certified quantity (for sup-norm checks, the
    certified upper end of its enclosure); ``bound`` is the constant it must
    respect.  Both are exact rationals so that the comparison itself carries
    no rounding.  ``lo``, when given, is the lower end of the enclosure whose
    upper end is ``value``; it never participates in the pass/fail decision
    and exists so reports can show the full enclosure.
    """

    name: str
    value: Fraction
    bound: Fraction
    comparison: str = "<"
    note: str = ""
    lo: Optional[Fraction] = None
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        if self.comparison not in _COMPARATORS:
            raise ValueError(f"unknown comparison {self.comparison!r}")
        ok = _COMPARATORS[self.comparison](self.value, self.bound)
        object.__setattr__(self, "passed", bool(ok))

    @property
    def margin(self) -> Fraction:
        """How far below the bound the certified value sits."""
        return self.bound - self.value

    @property
    def value_lo(self) -> Fraction:
        """Lower end of the certified enclosure (defaults to ``value``)."""
        return self.value if self.lo is None else self.lo

    def as_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "passed": self.passed,
            "value": str(self.value),
            "value_float": float(self.value),
            "bound": str(self.bound),
            "bound_float": float(self.bound),
            "comparison": self.comparison,
            "margin_float": float(self.margin),
            "note": self.note,
        }

    def as_inequality(self) -> Dict[str, object]:
        """Report row: the comparison with both sides as [lo, hi] pairs."""
        lo = self.value_lo
        return {
            "desc": self.name,
            "lhs": [str(lo), str(self.value)],
            "lhs_float": [float(lo), float(self.value)],
            "rel": self.comparison,
            "rhs": [str(self.bound), str(self.bound)],
            "rhs_float": [float(self.bound), float(self.bound)],
            "pass": self.passed,
            "note": self.note,
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[{status}] {self.name}: {float(self.value):.6e} "
            f"{self.comparison} {float(self.bound):.6e}"
            + (f"  ({self.note})" if self.note else "")
        )


def check(
    name: str,
    value: Fraction,
    bound: Fraction,
    comparison: str = "<",
    note: str = "",
    lo: Optional[Fraction] = None,
) -> CheckResult:
    return CheckResult(
        name=name,
        value=Fraction(value),
        bound=Fraction(bound),
        comparison=comparison,
        note=note,
        lo=None if lo is None else Fraction(lo),
    )


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(r.passed for r in results)


def failures(results: Iterable[CheckResult]) -> List[CheckResult]:
    return [r for r in results if not r.passed]
