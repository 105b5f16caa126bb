"""Parser manager for TraceHankel project."""

import sys
from pathlib import Path

from src.arithmetic.fields import RATIONALS, Field
from src.common import logger
from src.common.exceptions import InputValidationError, UnsupportedFormatError
from src.matrices.matrix import ExactMatrix
from src.models.models import GraphSpec
from src.parsers.dense_parser import DenseMatrixParser
from src.parsers.edge_list_parser import EdgeListParser
from src.parsers.graph import adjacency_matrix
from src.parsers.matrix_market_parser import MatrixMarketParser


STDIN_PATH = "-"


class ParserManager:
    """Менеджер парсеров: выбирает парсер по формату и возвращает точную матрицу."""

    PARSERS = {
        "dense": DenseMatrixParser,
        "edges": EdgeListParser,
        "mm": MatrixMarketParser,
    }

    def __init__(self, field: Field = RATIONALS):
        self.field = field
        logger.debug("[ParserManager] Parsers available: %s over %s", sorted(self.PARSERS), field.name)

    def read_source(self, path: str) -> bytes:
        """Чтение входа из файла или из стандартного потока ('-')."""
        if path == STDIN_PATH:
            return sys.stdin.buffer.read()
        try:
            return Path(path).read_bytes()
        except OSError as e:
            raise InputValidationError(f"cannot read {path}: {e}") from e

    def parse(self, content: bytes, input_format: str) -> ExactMatrix:
        parser_class = self.PARSERS.get(input_format)
        if parser_class is None:
            raise UnsupportedFormatError(f"unknown input format {input_format!r}")
        result = parser_class(self.field).parse(content)
        if isinstance(result, GraphSpec):
            logger.info(
                "[ParserManager] Graph with %d vertices and %d edges",
                result.vertex_count,
                len(result.edges),
            )
            return adjacency_matrix(result, self.field)
        logger.info("[ParserManager] Matrix of order %d", result.order)
        return result

    def load(self, path: str, input_format: str) -> ExactMatrix:
        logger.info("[ParserManager] Loading %s as %s", path, input_format)
        return self.parse(self.read_source(path), input_format)
