from .report_logger import save_report
from .report_format import format_report, format_reports

__all__ = ["save_report", "format_report", "format_reports"]
