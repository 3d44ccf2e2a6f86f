import json
import logging
from datetime import datetime

from core.logging import format_report, format_reports, save_report
from core.semigroup import Elem
from oracle.report import Report


def _failing_report():
    report = Report("demo", {"N": 2}, limit=2)
    report.record(True, Elem(0, 0, 0))
    for i in range(3):
        report.record(False, (Elem(i, 0, 0),), "x", "y")
    return report


def test_report_counts():
    report = _failing_report()
    assert report.checks == 4
    assert report.total_counterexamples == 3
    assert len(report.counterexamples) == 2
    assert report.status == "fail"
    assert report.counterexamples[0] == {"inputs": ["(0,0,0)"], "expected": "x", "actual": "y"}


def test_report_json_has_note_only_when_set():
    report = Report("demo", {"N": 1})
    report.count(5)
    assert "note" not in report.to_json()
    report.note = "consistent"
    assert report.to_json()["note"] == "consistent"
    assert report.to_json()["checks"] == 5


def test_save_report(tmp_path):
    payload = {"status": "pass", "reports": []}
    path = save_report(tmp_path / "reports", "scan", payload, when=datetime(2024, 5, 1, 12, 30, 5))
    assert path.name == "20240501_123005_scan.json"
    assert json.loads(path.read_text(encoding="utf-8")) == payload


def test_save_report_never_raises(tmp_path, caplog):
    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")
    with caplog.at_level(logging.ERROR, logger="core.report_logger"):
        assert save_report(blocker / "sub", "suite", {"status": "pass"}) is None
    assert "Report save error" in caplog.text


def test_format_report():
    text = format_report(_failing_report().to_json())
    lines = text.splitlines()
    assert lines[0] == "[FAIL] demo: 4 checks, 3 counterexamples"
    assert lines[1] == "  grid: N=2"
    assert sum(line.startswith("  ✗") for line in lines) == 2
    assert lines[-1] == "  … 1 more"


def test_format_reports_footer():
    ok = Report("ok", {})
    ok.count(1)
    text = format_reports([ok.to_json(), _failing_report().to_json()])
    assert text.splitlines()[0] == "[PASS] ok: 1 checks"
    assert text.endswith("2 reports, 1 failed: demo")
