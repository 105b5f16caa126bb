"""Report formatting for TraceHankel CLI."""

from typing import Union

from pydantic import BaseModel

from src.models.models import AnalysisReport, HankelDeterminantReport, VerificationSummary


class ReportFormatter:
    """Class for rendering analysis results as text or as JSON records."""

    def emit_report(self, report: BaseModel) -> str:
        """Machine-readable record; field order follows the model definition."""
        return report.model_dump_json(indent=2)

    def format_polynomial(self, coefficients: list) -> str:
        return "[" + ", ".join(coefficients) + "]"

    def format_analysis(self, command: str, report: AnalysisReport) -> str:
        if command == "spectral-size":
            return str(report.spectral_size)
        if command == "spectral-poly":
            return self.format_polynomial(report.spectral_polynomial)
        if report.degenerate is None:
            return "undetermined"
        return "true" if report.degenerate else "false"

    def format_hankel(self, report: HankelDeterminantReport) -> str:
        return report.value

    def format_verification(self, summary: VerificationSummary) -> str:
        lines = [f"seed {summary.seed}"]
        for check in summary.checks:
            status = "ok" if check.passed else "FAILED"
            lines.append(f"{check.name}: {check.samples} samples, {check.failures} failures [{status}]")
        lines.append("PASS" if summary.passed else "FAIL")
        for check in summary.checks:
            for counterexample in check.counterexamples:
                lines.append(f"counterexample {counterexample.model_dump_json()}")
        return "\n".join(lines)

    def render(
        self,
        command: str,
        report: Union[AnalysisReport, HankelDeterminantReport, VerificationSummary],
        as_json: bool,
    ) -> str:
        if as_json:
            return self.emit_report(report)
        if isinstance(report, VerificationSummary):
            return self.format_verification(report)
        if isinstance(report, HankelDeterminantReport):
            return self.format_hankel(report)
        return self.format_analysis(command, report)


def emit_report(report: BaseModel) -> str:
    return ReportFormatter().emit_report(report)
