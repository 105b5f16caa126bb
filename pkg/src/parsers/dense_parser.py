"""Dense matrix parser for TraceHankel project."""

from typing import Union

from src.arithmetic.fields import RATIONALS, Field
from src.common.exceptions import InputParseError
from src.matrices.matrix import ExactMatrix
from src.parsers.utils.base_parser import BaseParser


class DenseMatrixParser(BaseParser):
    """Первая строка: порядок n, затем n строк по n скаляров."""

    def parse(self, text: Union[str, bytes]) -> ExactMatrix:
        lines = self._content_lines(text)
        if not lines:
            raise InputParseError("empty input: expected the matrix order on the first line")
        number, header = lines[0]
        (order,) = self._integers(header, number, 1)
        if order < 1:
            raise InputParseError(f"matrix order must be positive, got {order}", line=number)
        body = lines[1:]
        if len(body) != order:
            last = body[-1][0] if body else number
            raise InputParseError(f"expected {order} matrix rows, found {len(body)}", line=last)
        rows = []
        for number, line in body:
            tokens = line.split()
            if len(tokens) != order:
                raise InputParseError(f"expected {order} entries, got {len(tokens)}", line=number)
            rows.append([self._scalar(token, number) for token in tokens])
        return ExactMatrix(rows, self.field)


def parse_dense(text: Union[str, bytes], field: Field = RATIONALS) -> ExactMatrix:
    return DenseMatrixParser(field).parse(text)
