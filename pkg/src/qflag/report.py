"""
Uniform result records for verification routines.

Every ``verify_*`` function returns a :class:`CheckResult`: a count of
identities checked, the failures with witnesses, and free-form data
(ranks, dimensions, thresholds) for reports.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

__all__ = ["CheckResult"]


@dataclass
class CheckResult:
    """Outcome of one verification routine.

    EXAMPLES::

        >>> res = CheckResult("demo")
        >>> res.record(True)
        >>> res.record(False, weight=(1,))
        >>> res.passed, res.checks, res.failures
        (False, 2, [{'weight': (1,)}])
    """

    name: str
    checks: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)
    max_failures: int = 20

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, **witness) -> None:
        self.checks += 1
        if not ok and len(self.failures) < self.max_failures:
            self.failures.append(witness)
        elif not ok:
            self.data["suppressed_failures"] = self.data.get("suppressed_failures", 0) + 1

    def merge(self, other: "CheckResult", prefix: str | None = None) -> None:
        self.checks += other.checks
        for wit in other.failures:
            entry = dict(wit)
            entry.setdefault("check", prefix or other.name)
            if len(self.failures) < self.max_failures:
                self.failures.append(entry)
            else:
                self.data["suppressed_failures"] = self.data.get("suppressed_failures", 0) + 1
        if other.data.get("suppressed_failures"):
            self.data["suppressed_failures"] = (self.data.get("suppressed_failures", 0)
                                                + other.data["suppressed_failures"])

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "checks": self.checks,
                "failures": self.failures, "data": self.data}

    def __bool__(self) -> bool:
        return self.passed
