"""Matrices with polynomial entries for TraceHankel project."""

from __future__ import annotations

from dataclasses import dataclass

from src.arithmetic.fields import RATIONALS, Field
from src.arithmetic.polynomial import UPolynomial
from src.common.exceptions import ArithmeticDomainError, PreconditionError
from src.matrices.matrix import ExactMatrix


@dataclass(frozen=True)
class PolyMatrix:
    rows: tuple
    field: Field = RATIONALS

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise PreconditionError("polynomial matrix must be square and non-empty")
        if any(entry.field != self.field for row in rows for entry in row):
            raise ArithmeticDomainError(f"polynomial matrix entries must all be over {self.field.name}")
        object.__setattr__(self, "rows", rows)

    @property
    def order(self) -> int:
        return len(self.rows)

    def evaluate(self, value) -> ExactMatrix:
        """Scalar matrix obtained by evaluating every entry at λ = value."""
        return ExactMatrix([[entry.evaluate(value) for entry in row] for row in self.rows], self.field)


def det_poly_matrix(a: PolyMatrix) -> UPolynomial:
    """Determinant in the polynomial ring by Bareiss fraction-free elimination.

    Every division by the previous pivot is exact in F[λ]; a non-zero
    remainder would mean corrupted input and raises.
    """
    rows = [list(row) for row in a.rows]
    n = len(rows)
    sign = 1
    previous = UPolynomial.constant(1, a.field)
    for k in range(n - 1):
        if rows[k][k].is_zero:
            pivot = next((r for r in range(k + 1, n) if not rows[r][k].is_zero), None)
            if pivot is None:
                return UPolynomial.zero(a.field)
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]).exact_div(previous)
        previous = rows[k][k]
    result = rows[n - 1][n - 1]
    return result if sign > 0 else -result
