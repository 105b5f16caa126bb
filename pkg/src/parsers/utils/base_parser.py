"""Base parser for TraceHankel input files."""

from typing import Union

from src.arithmetic.fields import RATIONALS, Field
from src.common.exceptions import InputParseError


class BaseParser:
    COMMENT_PREFIXES: tuple = ("#",)

    def __init__(self, field: Field = RATIONALS):
        self.field = field

    def parse(self, text: Union[str, bytes]):
        raise NotImplementedError

    def _decode(self, text: Union[str, bytes]) -> str:
        if isinstance(text, bytes):
            try:
                return text.decode("utf-8")
            except UnicodeDecodeError as e:
                raise InputParseError(f"input is not UTF-8 text: {e}") from e
        return text

    def _content_lines(self, text: Union[str, bytes]) -> list:
        """(1-based line number, stripped line) for every line that is not blank or a comment."""
        lines = []
        for number, raw in enumerate(self._decode(text).splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith(self.COMMENT_PREFIXES):
                continue
            lines.append((number, line))
        return lines

    def _integers(self, line: str, number: int, count: int) -> list:
        tokens = line.split()
        if len(tokens) != count:
            raise InputParseError(f"expected {count} integers, got {len(tokens)} tokens", line=number)
        try:
            return [int(token) for token in tokens]
        except ValueError as e:
            raise InputParseError(f"expected integers in {line!r}", line=number) from e

    def _scalar(self, token: str, number: int):
        try:
            return self.field.parse(token)
        except ValueError as e:
            raise InputParseError(f"bad scalar {token!r} for field {self.field.name}: {e}", line=number) from e
