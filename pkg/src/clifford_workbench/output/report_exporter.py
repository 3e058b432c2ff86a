"""Report export: structured JSON or one CSV row per check."""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Literal

from pydantic import ValidationError

from clifford_workbench.errors import ReportIOError
from clifford_workbench.verification.report import CheckRecord, VerificationReport

ReportFormat = Literal["structured", "tabular"]

FORMAT_SUFFIX: dict[str, str] = {
    "structured": ".json",
    "tabular": ".csv",
}

TABULAR_COLUMNS = [
    "suite",
    "name",
    "parameters",
    "residual",
    "tolerance",
    "order",
    "passed",
    "note",
    "config_digest",
]


def report_filename(suite: str, fmt: ReportFormat, digest: str) -> str:
    return f"{suite}_{digest}{FORMAT_SUFFIX[fmt]}"


def _format_parameters(record: CheckRecord) -> str:
    return ";".join(f"{key}={value}" for key, value in record.parameters.items())


def _format_float(value: float | None) -> str:
    return "" if value is None else repr(float(value))


def emit_report(report: VerificationReport, path: str | Path, fmt: ReportFormat = "structured") -> Path:
    """Write the report; identical reports produce identical bytes."""
    path = Path(path)
    if fmt not in FORMAT_SUFFIX:
        raise ValueError(f"unknown report format '{fmt}'; expected one of {sorted(FORMAT_SUFFIX)}")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        if fmt == "structured":
            with open(path, "w") as f:
                json.dump(report.model_dump(mode="json", by_alias=True), f, indent=2)
                f.write("\n")
        else:
            with open(path, "w", newline="") as f:
                writer = csv.writer(f)
                writer.writerow(TABULAR_COLUMNS)
                for record in report.checks:
                    writer.writerow([
                        record.suite,
                        record.name,
                        _format_parameters(record),
                        _format_float(record.residual),
                        _format_float(record.tolerance),
                        _format_float(record.order),
                        "pass" if record.passed else "FAIL",
                        record.note,
                        record.config_digest,
                    ])
    except OSError as exc:
        raise ReportIOError(path, str(exc)) from exc
    return path


def load_report(path: str | Path) -> VerificationReport:
    """Read a structured report back."""
    path = Path(path)
    try:
        with open(path) as f:
            data = json.load(f)
    except OSError as exc:
        raise ReportIOError(path, str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise ReportIOError(path, f"not a structured report: {exc}") from exc
    try:
        return VerificationReport.model_validate(data)
    except ValidationError as exc:
        raise ReportIOError(path, f"report does not match the expected layout: {exc.error_count()} errors") from exc
