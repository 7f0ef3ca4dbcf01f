"""Value objects produced by property checks and verification runs."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .setcore import SubsetMask

Value = Union[Fraction, float]


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    SAMPLED_NO_VIOLATION = "sampled_no_violation"


@dataclass(frozen=True)
class ViolationRecord:
    """One witnessed violation of ``lhs <= rhs``; ``margin = lhs - rhs``."""

    kind: str
    witness: tuple[SubsetMask, ...]
    lhs: Value
    rhs: Value
    margin: Value


@dataclass
class PropertyReport:
    name: str
    verdict: Verdict
    checked: int
    violations: list[ViolationRecord] = field(default_factory=list)
    seed: Optional[int] = None
    # pairs at distance zero that are not equal (pseudometric evidence)
    informational: list[tuple[SubsetMask, ...]] = field(default_factory=list)
    informational_count: int = 0
    violation_count: int = 0
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if (self.verdict is Verdict.FAILS) != bool(self.violations):
            raise ValueError("verdict 'fails' must coincide with a non-empty violation list")
        if not self.violation_count:
            self.violation_count = len(self.violations)

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.FAILS

    @property
    def witness(self) -> Optional[ViolationRecord]:
        return self.violations[0] if self.violations else None


def make_report(name, checked, violations, violation_count=None, *, sampled=False, **kw) -> PropertyReport:
    if violations:
        verdict = Verdict.FAILS
    elif sampled:
        verdict = Verdict.SAMPLED_NO_VIOLATION
    else:
        verdict = Verdict.HOLDS
    return PropertyReport(
        name=name,
        verdict=verdict,
        checked=checked,
        violations=list(violations),
        violation_count=violation_count if violation_count is not None else len(violations),
        **kw,
    )
