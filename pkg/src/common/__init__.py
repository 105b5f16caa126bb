"""Common utilities for TraceHankel project."""

from src.common.logger import Logger


logger = Logger()
