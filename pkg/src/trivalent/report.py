"""Structured pass/fail reports for the verification checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True, slots=True)
class Finding:
    """One failed check: which law or identity broke, and on what."""

    check: str
    detail: str

    def __str__(self) -> str:
        return f"{self.check}: {self.detail}"


@dataclass(slots=True)
class Report:
    name: str
    checks: int = 0
    failures: list[Finding] = field(default_factory=list)
    notes: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, check: str, ok: bool, detail: str = "") -> bool:
        self.checks += 1
        if not ok:
            self.failures.append(Finding(check, detail))
        return ok

    def to_dict(self) -> dict:
        out: dict = {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "checks": self.checks,
        }
        if self.failures:
            out["failures"] = [{"check": f.check, "detail": f.detail} for f in self.failures]
        if self.notes:
            out["notes"] = self.notes
        return out

    def summary(self) -> str:
        status = "pass" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.name}: {status} [{self.checks} checks]"
