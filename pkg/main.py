"""Main entry point for TraceHankel project."""

import sys

from src.cli import main as run_cli
from src.common import logger


def main() -> None:
    """Точка входа в приложение."""
    try:
        sys.exit(run_cli())
    except KeyboardInterrupt:
        logger.error("Interrupted")
        sys.exit(130)


if __name__ == "__main__":
    main()
