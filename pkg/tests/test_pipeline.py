from __future__ import annotations

from pathlib import Path

import pytest

from clifford_workbench.config.suite_config import SUITE_ORDER
from clifford_workbench.output.report_exporter import load_report, report_filename
from clifford_workbench.pipeline import resolve_suites, run_pipeline, run_suite
from clifford_workbench.verification import suites


def test_resolve_suites():
    assert resolve_suites("all") == list(SUITE_ORDER)
    assert resolve_suites("cauchy") == ["cauchy"]
    with pytest.raises(ValueError):
        resolve_suites("topology")


def test_run_suite_records_the_ledger(quick_config):
    report = run_suite("algebra", quick_config)
    assert report.suite == "algebra"
    assert report.ledger["dirac_sign"] == 1
    assert "right" in report.ledger["kernel_sides"]
    assert report.checks
    assert {c.suite for c in report.checks} == {"algebra"}
    assert [s.suite for s in report.summaries] == ["algebra"]


def test_pipeline_writes_a_report(quick_config, tmp_path):
    messages: list[str] = []
    results = run_pipeline(quick_config, "algebra", tmp_path, status_callback=messages.append)

    path = Path(results["output_file"])
    assert path.name == report_filename("algebra", "structured", quick_config.digest())
    assert results["passed"] is True
    assert load_report(path) == results["report"]
    assert messages[0].startswith("Running algebra suite")
    assert messages[-2:] == ["Writing report...", "Done!"]


def test_equal_configurations_give_equal_bytes(quick_config, tmp_path):
    first = run_pipeline(quick_config, "transform", tmp_path / "a")
    second = run_pipeline(quick_config, "transform", tmp_path / "b")
    assert Path(first["output_file"]).read_bytes() == Path(second["output_file"]).read_bytes()


def test_tabular_output(quick_config, tmp_path):
    results = run_pipeline(quick_config, "meanvalue", tmp_path, fmt="tabular")
    path = Path(results["output_file"])
    assert path.suffix == ".csv"
    lines = path.read_text().splitlines()
    assert lines[0].startswith("suite,name,parameters")
    assert len(lines) == 1 + len(results["report"].checks)


def test_failing_check_is_reported(quick_config, tmp_path, monkeypatch):
    monkeypatch.setitem(suites.SUITES, "meanvalue", lambda c: c.add("broken", 1.0, 0.5, n=1))
    results = run_pipeline(quick_config, "meanvalue", tmp_path)
    assert results["passed"] is False
    assert [r.name for r in results["report"].failures] == ["broken"]
    assert load_report(results["output_file"]).summaries[0].failed == 1
