"""Matrix Market coordinate parser for TraceHankel project."""

from typing import Union

from src.arithmetic.fields import RATIONALS, Field
from src.common.exceptions import InputParseError, InputValidationError, UnsupportedFormatError
from src.matrices.matrix import ExactMatrix
from src.models.models import GraphSpec
from src.parsers.utils.base_parser import BaseParser


BANNER = "%%MatrixMarket"
SUPPORTED = {
    ("pattern", "symmetric"),
    ("pattern", "general"),
    ("integer", "general"),
    ("integer", "symmetric"),
}


class MatrixMarketParser(BaseParser):
    """Заголовок "%%MatrixMarket matrix coordinate <field> <symmetry>", индексы с единицы."""

    COMMENT_PREFIXES = ("%",)

    def parse(self, text: Union[str, bytes]) -> Union[GraphSpec, ExactMatrix]:
        text = self._decode(text)
        first_line = text.splitlines()[0].strip() if text.strip() else ""
        value_kind, symmetry = self._read_banner(first_line)
        lines = self._content_lines(text)
        if not lines:
            raise InputParseError("missing size line", line=2)
        number, size_line = lines[0]
        rows, columns, nnz = self._integers(size_line, number, 3)
        if rows != columns or rows < 1:
            raise InputValidationError(f"line {number}: expected a square matrix, got {rows}x{columns}")
        entries = lines[1:]
        if len(entries) != nnz:
            last = entries[-1][0] if entries else number
            raise InputParseError(f"size line announces {nnz} entries, found {len(entries)}", line=last)
        if value_kind == "pattern":
            return self._graph(entries, rows, directed=symmetry == "general")
        return self._matrix(entries, rows, symmetric=symmetry == "symmetric")

    def _read_banner(self, line: str) -> tuple:
        tokens = line.split()
        if not tokens or tokens[0] != BANNER:
            raise InputParseError(f"missing {BANNER} banner", line=1)
        if len(tokens) != 5 or tokens[1] != "matrix" or tokens[2] != "coordinate":
            raise UnsupportedFormatError(f"unsupported Matrix Market header {line!r}")
        value_kind, symmetry = tokens[3], tokens[4]
        if (value_kind, symmetry) not in SUPPORTED:
            raise UnsupportedFormatError(f"unsupported Matrix Market variant {value_kind} {symmetry}")
        return value_kind, symmetry

    def _check_index(self, i: int, j: int, order: int, number: int) -> None:
        if not (1 <= i <= order and 1 <= j <= order):
            raise InputValidationError(f"line {number}: index ({i}, {j}) outside 1..{order}")

    def _graph(self, entries: list, order: int, directed: bool) -> GraphSpec:
        edges = []
        for number, line in entries:
            i, j = self._integers(line, number, 2)
            self._check_index(i, j, order, number)
            if i == j:
                raise InputValidationError(f"line {number}: loop at vertex {i}")
            edges.append((i, j))
        return GraphSpec(vertex_count=order, edges=tuple(edges), directed=directed)

    def _matrix(self, entries: list, order: int, symmetric: bool) -> ExactMatrix:
        rows = [[0] * order for _ in range(order)]
        for number, line in entries:
            i, j, value = self._integers(line, number, 3)
            self._check_index(i, j, order, number)
            rows[i - 1][j - 1] += value
            if symmetric and i != j:
                rows[j - 1][i - 1] += value
        return ExactMatrix(rows, self.field)


def parse_matrix_market(text: Union[str, bytes], field: Field = RATIONALS) -> Union[GraphSpec, ExactMatrix]:
    return MatrixMarketParser(field).parse(text)
