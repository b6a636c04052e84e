"""Verification reports shared by every ``verify_*`` routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class IdentityViolation(AssertionError):
    """A checked identity failed; ``report`` carries every witness."""

    def __init__(self, report: "Report"):
        self.report = report
        first = report.failures[0] if report.failures else {}
        super().__init__(f"{report.identity}: {len(report.failures)} failure(s), first {first}")


class CongruenceViolation(IdentityViolation):
    pass


class OracleMismatch(IdentityViolation):
    pass


class RangeViolation(IdentityViolation):
    pass


@dataclass
class Report:
    identity: str
    range: dict[str, Any]
    failures: list[dict[str, Any]] = field(default_factory=list)
    checked: int = 0
    note: str | None = None

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, **witness) -> bool:
        self.checked += 1
        if not passed:
            self.failures.append(witness)
        return passed

    def raise_if_failed(self, exc: type[IdentityViolation] = IdentityViolation) -> "Report":
        if self.failures:
            raise exc(self)
        return self

    def to_json(self) -> dict[str, Any]:
        out = {
            "identity": self.identity,
            "range": self.range,
            "status": self.status,
            "checked": self.checked,
            "failures": self.failures,
        }
        if self.note:
            out["note"] = self.note
        return out
