"""Command runner for TraceHankel CLI."""

import sys

from pydantic import BaseModel

from src.analysis.spectral import SpectralAnalyzer
from src.analysis.verification import VerificationSuite
from src.arithmetic.fields import RATIONALS, parse_field_spec
from src.cli.report_formatter import ReportFormatter
from src.common import logger
from src.common.exceptions import TraceHankelError, VerificationFailedError
from src.config.config import Config
from src.models.models import AnalysisReport, HankelDeterminantReport, HankelSpec, RunConfig
from src.parsers.parser_manager import ParserManager


class CommandRunner:
    """Класс для выполнения одной команды CLI и вывода отчёта."""

    def __init__(self, config: RunConfig):
        """Инициализация CommandRunner."""
        self.config = config
        self.formatter = ReportFormatter()

    def run(self) -> int:
        """Выполнение команды; возвращает код завершения."""
        logger.info("[CommandRunner] Starting %s", self.config.command)
        try:
            report = self._execute()
        except TraceHankelError as e:
            logger.error("[CommandRunner] %s failed: %s", self.config.command, e)
            return e.exit_code
        as_json = self.config.output_format == "json"
        sys.stdout.write(self.formatter.render(self.config.command, report, as_json) + "\n")
        sys.stdout.flush()
        if getattr(report, "passed", True) is False:
            logger.error("[CommandRunner] verification failed for seed %d", report.seed)
            return VerificationFailedError.exit_code
        logger.info("[CommandRunner] Finished %s", self.config.command)
        return 0

    def _execute(self) -> BaseModel:
        if self.config.command == "verify":
            return self._verify()
        field = parse_field_spec(self.config.field_spec)
        matrix = ParserManager(field).load(self.config.input_path, self.config.input_format)
        analyzer = SpectralAnalyzer(matrix)
        if self.config.command == "hankel-det":
            spec = HankelSpec(t=self.config.t, l=self.config.l)
            return HankelDeterminantReport(
                order=matrix.order,
                field=field.name,
                t=spec.t,
                l=spec.l,
                value=field.format(analyzer.hankel_det(spec)),
            )
        if self.config.output_format == "json":
            return analyzer.analyze()
        return self._quick_report(analyzer)

    def _quick_report(self, analyzer: SpectralAnalyzer) -> AnalysisReport:
        """Text mode computes only what the command prints."""
        command = self.config.command
        m = analyzer.spectral_size()
        polynomial = analyzer.spectral_polynomial().formatted_coefficients() if command == "spectral-poly" else []
        degenerate = analyzer.degeneracy_test() if command == "degenerate" else False
        return AnalysisReport(
            order=analyzer.g.order,
            field=analyzer.field.name,
            spectral_size=m,
            degenerate=degenerate,
            spectral_polynomial=polynomial,
            hankel_determinants=[],
        )

    def _verify(self):
        if parse_field_spec(self.config.field_spec) != RATIONALS:
            logger.warning("[CommandRunner] verify always runs over the rationals; --field is ignored")
        seed = self.config.seed if self.config.seed is not None else Config.DEFAULT_SEED
        return VerificationSuite(seed).run()


def run(config: RunConfig) -> int:
    return CommandRunner(config).run()
