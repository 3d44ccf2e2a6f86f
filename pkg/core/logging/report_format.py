"""Текстовые сводки отчётов для терминала."""


def _grid_text(grid: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in grid.items())


def format_report(report: dict) -> str:
    """Сформировать текст по JSON-отчёту (Report.to_json())."""
    status = report["status"].upper()
    header = (
        f"[{status}] {report['suite']}: {report['checks']} checks"
        + (f", {report['total_counterexamples']} counterexamples" if report["total_counterexamples"] else "")
    )
    lines = [header]
    if report.get("grid"):
        lines.append(f"  grid: {_grid_text(report['grid'])}")
    if report.get("note"):
        lines.append(f"  note: {report['note']}")
    for ce in report["counterexamples"]:
        lines.append(f"  ✗ inputs={ce['inputs']} expected={ce['expected']} actual={ce['actual']}")
    shown = len(report["counterexamples"])
    if report["total_counterexamples"] > shown:
        lines.append(f"  … {report['total_counterexamples'] - shown} more")
    return "\n".join(lines)


def format_reports(reports: list[dict]) -> str:
    """Отчёты подряд и итоговая строка."""
    failed = [r["suite"] for r in reports if r["status"] != "pass"]
    body = "\n".join(format_report(r) for r in reports)
    footer = (
        f"\n{len(reports)} reports, all pass" if not failed
        else f"\n{len(reports)} reports, {len(failed)} failed: {', '.join(failed)}"
    )
    return body + footer
