"""Machine-readable pass/fail records for individual checks.

Every verdict is decided in exact arithmetic; both sides of the checked
relation are recorded as exact decimal strings so a report can be audited
without re-running the computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping


def exact_str(value: Any) -> str:
    """Render an exact value (int, Fraction, surd, bool) as a string."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one exact check.

    `passed` is True iff `lhs <relation> rhs` holds exactly.  `margin` is
    the signed slack of the relation (as an exact value string), when the
    relation has a meaningful one; identity checks over grids leave it
    empty and use `detail` for the witness point on failure.
    """

    name: str
    claim: str
    passed: bool
    inputs: Mapping[str, Any] = field(default_factory=dict)
    lhs: str = ""
    rhs: str = ""
    relation: str = ""
    margin: str = ""
    detail: str = ""

    def as_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "claim": self.claim,
            "passed": self.passed,
            "inputs": {k: exact_str(v) for k, v in self.inputs.items()},
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "margin": self.margin,
            "detail": self.detail,
        }

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.claim}"


def all_passed(reports: list[CheckReport]) -> bool:
    return all(r.passed for r in reports)


def sorted_reports(reports: list[CheckReport]) -> list[CheckReport]:
    """Deterministic aggregation order, independent of execution order."""
    return sorted(reports, key=lambda r: r.name)
