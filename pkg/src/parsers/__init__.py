"""Parser package."""

from .dense_parser import DenseMatrixParser, parse_dense
from .edge_list_parser import EdgeListParser, parse_edge_list
from .graph import adjacency_matrix
from .matrix_market_parser import MatrixMarketParser, parse_matrix_market
from .parser_manager import ParserManager


__all__ = [
    "DenseMatrixParser",
    "EdgeListParser",
    "MatrixMarketParser",
    "ParserManager",
    "adjacency_matrix",
    "parse_dense",
    "parse_edge_list",
    "parse_matrix_market",
]
