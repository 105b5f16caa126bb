"""Exceptions for TraceHankel project."""

from typing import Optional


class TraceHankelError(Exception):
    """Base error; `exit_code` is what the CLI returns when it escapes a command."""

    exit_code: int = 1


class ArithmeticDomainError(TraceHankelError):
    exit_code = 3


class PreconditionError(TraceHankelError):
    exit_code = 3


class InputParseError(TraceHankelError):
    exit_code = 2

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class InputValidationError(TraceHankelError):
    exit_code = 3


class UnsupportedFieldError(TraceHankelError):
    exit_code = 4


class UnsupportedFormatError(TraceHankelError):
    exit_code = 4


class InvariantViolationError(TraceHankelError):
    exit_code = 1


class VerificationFailedError(TraceHankelError):
    exit_code = 5
