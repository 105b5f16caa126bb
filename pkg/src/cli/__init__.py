"""CLI package."""

from .cli import build_parser, main, parse_run_config
from .report_formatter import ReportFormatter, emit_report
from .runner import CommandRunner, run


__all__ = ["CommandRunner", "ReportFormatter", "build_parser", "emit_report", "main", "parse_run_config", "run"]
