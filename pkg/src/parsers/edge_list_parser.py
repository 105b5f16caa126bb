"""Edge-list parser for TraceHankel project."""

from typing import Union

from src.common.exceptions import InputParseError, InputValidationError
from src.models.models import GraphSpec
from src.parsers.utils.base_parser import BaseParser


class EdgeListParser(BaseParser):
    """Первая строка: число вершин, далее строки "u v" с 1 <= u, v <= n, u != v."""

    def parse(self, text: Union[str, bytes]) -> GraphSpec:
        lines = self._content_lines(text)
        if not lines:
            raise InputParseError("empty input: expected the vertex count on the first line")
        number, header = lines[0]
        (vertex_count,) = self._integers(header, number, 1)
        if vertex_count < 1:
            raise InputValidationError(f"line {number}: vertex count must be positive, got {vertex_count}")
        edges = []
        for number, line in lines[1:]:
            u, v = self._integers(line, number, 2)
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise InputValidationError(f"line {number}: edge ({u}, {v}) leaves the range 1..{vertex_count}")
            if u == v:
                raise InputValidationError(f"line {number}: loop at vertex {u}")
            edges.append((u, v))
        return GraphSpec(vertex_count=vertex_count, edges=tuple(edges))


def parse_edge_list(text: Union[str, bytes]) -> GraphSpec:
    return EdgeListParser().parse(text)
