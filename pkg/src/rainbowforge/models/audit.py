"""Pydantic models for structural audit reports."""

from enum import Enum

from pydantic import BaseModel, Field, computed_field


class AuditProfile(str, Enum):
    EXTREMAL4 = "extremal4"
    EXTREMAL5 = "extremal5"
    OUTER = "outer"
    CENSUS = "census"


class AuditCheck(BaseModel):
    name: str
    passed: bool
    details: str = ""


class AuditReport(BaseModel):
    """Named pass/fail checks; overall is their conjunction."""

    profile: AuditProfile
    checks: list[AuditCheck] = Field(default_factory=list)
    phase: int | None = None  # detected rotation for the outer-cycle pattern
    reflected: bool | None = None
    partition: list[list[int]] | None = None  # detected A, B, C

    @computed_field  # type: ignore[prop-decorator]
    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, passed: bool, details: str = "") -> None:
        self.checks.append(AuditCheck(name=name, passed=passed, details=details))

    def failed(self) -> list[AuditCheck]:
        return [check for check in self.checks if not check.passed]
