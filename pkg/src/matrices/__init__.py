"""Exact matrix package."""

from .matrix import (
    ExactMatrix,
    char_poly,
    determinant,
    evaluate_polynomial_at,
    power_traces,
    unimodular_conjugate,
)
from .poly_matrix import PolyMatrix, det_poly_matrix


__all__ = [
    "ExactMatrix",
    "PolyMatrix",
    "char_poly",
    "det_poly_matrix",
    "determinant",
    "evaluate_polynomial_at",
    "power_traces",
    "unimodular_conjugate",
]
