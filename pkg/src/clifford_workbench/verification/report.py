"""Report models for verification runs."""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field

from clifford_workbench.config.suite_config import SuiteConfig

FORMAT_VERSION = 1

ParameterValue = str | int | float | bool | None


class CheckRecord(BaseModel):
    """One verified claim: a residual compared against its tolerance."""

    model_config = ConfigDict(ser_json_inf_nan="constants")

    name: str
    suite: str
    parameters: dict[str, ParameterValue] = Field(default_factory=dict)
    residual: float
    tolerance: float
    order: float | None = None
    passed: bool
    note: str = ""
    config_digest: str


class SuiteSummary(BaseModel):
    suite: str
    total: int
    passed: int
    failed: int

    @property
    def all_passed(self) -> bool:
        return self.failed == 0


class VerificationReport(BaseModel):
    """Checks of one run plus the configuration and sign ledger that produced them."""

    model_config = ConfigDict(ser_json_inf_nan="constants")

    format_version: int = FORMAT_VERSION
    suite: str
    config: SuiteConfig
    ledger: dict[str, int | str] = Field(default_factory=dict)
    checks: list[CheckRecord] = Field(default_factory=list)
    summaries: list[SuiteSummary] = Field(default_factory=list)
    diagnostics: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[CheckRecord]:
        return [check for check in self.checks if not check.passed]

    def summarize(self) -> VerificationReport:
        """Recompute per-suite summaries in first-seen suite order."""
        order: list[str] = []
        for check in self.checks:
            if check.suite not in order:
                order.append(check.suite)
        self.summaries = [
            SuiteSummary(
                suite=name,
                total=sum(1 for c in self.checks if c.suite == name),
                passed=sum(1 for c in self.checks if c.suite == name and c.passed),
                failed=sum(1 for c in self.checks if c.suite == name and not c.passed),
            )
            for name in order
        ]
        return self


def clean_float(value: float | None) -> float | None:
    """NaN becomes None so reports compare equal after a round trip."""
    if value is None:
        return None
    value = float(value)
    return None if math.isnan(value) else value
