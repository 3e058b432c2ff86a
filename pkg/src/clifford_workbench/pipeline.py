"""Main pipeline: SuiteConfig → suites → VerificationReport → export."""

from __future__ import annotations

import logging
import time
from pathlib import Path
from typing import Callable

from clifford_workbench.config.suite_config import SUITE_ORDER, SuiteConfig
from clifford_workbench.output.report_exporter import ReportFormat, emit_report, report_filename
from clifford_workbench.verification.report import VerificationReport
from clifford_workbench.verification.suites import run_named_suite

logger = logging.getLogger(__name__)


def resolve_suites(name: str) -> list[str]:
    if name == "all":
        return list(SUITE_ORDER)
    if name not in SUITE_ORDER:
        raise ValueError(f"unknown suite '{name}'; available: all, {', '.join(SUITE_ORDER)}")
    return [name]


def run_suite(
    name: str,
    cfg: SuiteConfig,
    status_callback: Callable[[str], None] | None = None,
) -> VerificationReport:
    """Run one suite, or every suite for ``all``, and collect the records.

    Wall-clock time is logged against the configured budget but never
    written into the report, so equal configurations give equal reports.
    """

    def status(msg: str):
        if status_callback:
            status_callback(msg)

    suites = resolve_suites(name)
    report = VerificationReport(suite=name, config=cfg, ledger=cfg.convention.signs.as_dict())
    started = time.perf_counter()

    for suite in suites:
        status(f"Running {suite} suite (n={cfg.n}, lambda={cfg.mass})...")
        suite_started = time.perf_counter()
        collector = run_named_suite(suite, cfg)
        report.checks.extend(collector.records)
        report.diagnostics.extend(collector.diagnostics)
        failed = sum(1 for r in collector.records if not r.passed)
        logger.info(
            "%s: %d checks, %d failed, %.1f s",
            suite, len(collector.records), failed, time.perf_counter() - suite_started,
        )

    elapsed = time.perf_counter() - started
    if elapsed > cfg.runtime_budget_seconds:
        logger.warning("verification took %.0f s, over the %.0f s budget", elapsed, cfg.runtime_budget_seconds)
    return report.summarize()


def run_pipeline(
    cfg: SuiteConfig,
    suite: str,
    output_dir: str | Path,
    fmt: ReportFormat = "structured",
    status_callback: Callable[[str], None] | None = None,
) -> dict:
    """Run the suite and write its report.

    Returns a dict with:
        report, passed, output_file
    """
    report = run_suite(suite, cfg, status_callback=status_callback)
    if status_callback:
        status_callback("Writing report...")
    path = emit_report(report, Path(output_dir) / report_filename(suite, fmt, cfg.digest()), fmt)
    if status_callback:
        status_callback("Done!")
    return {
        "report": report,
        "passed": report.passed,
        "output_file": str(path.resolve()),
    }
