"""Command-line interface for TraceHankel project."""

import argparse
from typing import Optional

from pydantic import ValidationError

from src.cli.runner import run
from src.common import logger
from src.common.exceptions import InputValidationError
from src.config.config import Config
from src.models.models import RunConfig


COMMANDS = ("spectral-size", "spectral-poly", "hankel-det", "degenerate", "verify")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracehankel",
        description="Spectral size and spectral polynomial of a matrix from traces of its powers (exact arithmetic).",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input_path", nargs="?", help="matrix or graph file, '-' for standard input")
    parser.add_argument("--format", dest="input_format", choices=("dense", "edges", "mm"), default="dense")
    parser.add_argument("--field", dest="field_spec", default=Config.DEFAULT_FIELD, help="rational or gf:<prime>")
    parser.add_argument("-t", type=int, help="order of M_{t,l} for hankel-det")
    parser.add_argument("-l", type=int, default=0, help="power offset of M_{t,l} for hankel-det")
    parser.add_argument("--json", action="store_true", help="emit a JSON record")
    parser.add_argument("--seed", type=int, help="seed for verify")
    parser.add_argument("--tolerance", help=argparse.SUPPRESS)
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on standard error")
    return parser


def parse_run_config(argv: Optional[list] = None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tolerance is not None:
        parser.error("exact arithmetic admits no tolerance")
    if args.verbose:
        logger.set_level("DEBUG")
    return RunConfig(
        command=args.command,
        input_path=args.input_path,
        input_format=args.input_format,
        field_spec=args.field_spec,
        t=args.t,
        l=args.l,
        output_format="json" if args.json else "text",
        seed=args.seed,
    )


def main(argv: Optional[list] = None) -> int:
    """Точка входа CLI; возвращает код завершения."""
    if not Config.validate():
        logger.error("Invalid configuration: %s", ", ".join(Config.invalid_settings()))
        return InputValidationError.exit_code
    try:
        config = parse_run_config(argv)
    except ValidationError as e:
        logger.error("Invalid arguments: %s", e)
        return InputValidationError.exit_code
    return run(config)
