"""Adjacency matrices for TraceHankel project."""

from src.arithmetic.fields import RATIONALS, Field
from src.matrices.matrix import ExactMatrix
from src.models.models import GraphSpec


def adjacency_matrix(g: GraphSpec, field: Field = RATIONALS) -> ExactMatrix:
    """0/1 matrix with zero diagonal; symmetric iff the graph is undirected."""
    rows = [[0] * g.vertex_count for _ in range(g.vertex_count)]
    for u, v in g.edges:
        rows[u - 1][v - 1] = 1
        if not g.directed:
            rows[v - 1][u - 1] = 1
    return ExactMatrix(rows, field)
