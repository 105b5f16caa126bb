"""Dense exact matrices for TraceHankel project.

Entries are documented with the 1-based ``[A]_i^j`` convention (row i,
column j); storage is a tuple of row tuples.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from src.arithmetic.fields import RATIONALS, Field, Scalar
from src.arithmetic.polynomial import UPolynomial
from src.common.exceptions import ArithmeticDomainError, PreconditionError, UnsupportedFieldError


@dataclass(frozen=True)
class ExactMatrix:
    rows: tuple
    field: Field = RATIONALS

    def __post_init__(self):
        rows = tuple(tuple(self.field.coerce(value) for value in row) for row in self.rows)
        if not rows:
            raise PreconditionError("matrix order must be positive")
        if any(len(row) != len(rows) for row in rows):
            raise PreconditionError(f"matrix is not square: {len(rows)} rows of lengths {[len(r) for r in rows]}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def _wrap(cls, rows: Sequence[Sequence[Scalar]], field: Field) -> ExactMatrix:
        """Build without coercion from entries already in `field`."""
        matrix = object.__new__(cls)
        object.__setattr__(matrix, "rows", tuple(tuple(row) for row in rows))
        object.__setattr__(matrix, "field", field)
        return matrix

    @classmethod
    def identity(cls, order: int, field: Field = RATIONALS) -> ExactMatrix:
        return cls.diagonal([1] * order, field)

    @classmethod
    def zeros(cls, order: int, field: Field = RATIONALS) -> ExactMatrix:
        return cls.diagonal([0] * order, field)

    @classmethod
    def diagonal(cls, values: Iterable, field: Field = RATIONALS) -> ExactMatrix:
        values = [field.coerce(v) for v in values]
        zero = field.zero
        return cls._wrap([[v if i == j else zero for j in range(len(values))] for i, v in enumerate(values)], field)

    @classmethod
    def block_diagonal(cls, blocks: Sequence[ExactMatrix]) -> ExactMatrix:
        if not blocks:
            raise PreconditionError("block-diagonal matrix needs at least one block")
        field = blocks[0].field
        if any(block.field != field for block in blocks):
            raise ArithmeticDomainError("blocks over different fields")
        n = sum(block.order for block in blocks)
        rows = [[field.zero] * n for _ in range(n)]
        offset = 0
        for block in blocks:
            for i, row in enumerate(block.rows):
                rows[offset + i][offset : offset + block.order] = row
            offset += block.order
        return cls._wrap(rows, field)

    @classmethod
    def companion(cls, polynomial: UPolynomial) -> ExactMatrix:
        """Companion matrix: ones below the diagonal, last column −c_0..−c_{n−1}."""
        if not polynomial.is_monic or polynomial.degree < 1:
            raise PreconditionError("companion matrix needs a monic polynomial of degree >= 1")
        field = polynomial.field
        n = polynomial.degree
        rows = [[field.zero] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = field.one
        for i in range(n):
            rows[i][n - 1] = -polynomial.coefficient(i)
        return cls._wrap(rows, field)

    @property
    def order(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Scalar:
        """[A]_i^j with 1-based indices."""
        return self.rows[i - 1][j - 1]

    def _check_operand(self, other: ExactMatrix) -> None:
        if other.field != self.field:
            raise ArithmeticDomainError(f"matrices over {self.field.name} and {other.field.name}")
        if other.order != self.order:
            raise PreconditionError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_operand(other)
        return ExactMatrix._wrap(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            self.field,
        )

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_operand(other)
        return ExactMatrix._wrap(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            self.field,
        )

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_operand(other)
        columns = list(zip(*other.rows))
        zero = self.field.zero
        return ExactMatrix._wrap(
            [[sum((a * b for a, b in zip(row, column) if a), zero) for column in columns] for row in self.rows],
            self.field,
        )

    def scale(self, value) -> ExactMatrix:
        value = self.field.coerce(value)
        return ExactMatrix._wrap([[a * value for a in row] for row in self.rows], self.field)

    def transpose(self) -> ExactMatrix:
        return ExactMatrix._wrap(list(zip(*self.rows)), self.field)

    def trace(self) -> Scalar:
        return sum((self.rows[i][i] for i in range(self.order)), self.field.zero)

    @property
    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i] for i in range(self.order) for j in range(i))

    @property
    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def conjugate_elementary(self, i: int, j: int, c) -> ExactMatrix:
        """E⁻¹·A·E for E = I + c·e_i·e_jᵀ (0-based i ≠ j); det E = 1, spectrum unchanged."""
        if i == j:
            raise PreconditionError("elementary similarity needs distinct indices")
        c = self.field.coerce(c)
        rows = [list(row) for row in self.rows]
        for row in rows:
            row[j] += c * row[i]
        rows[i] = [a - c * b for a, b in zip(rows[i], rows[j])]
        return ExactMatrix._wrap(rows, self.field)

    def formatted_rows(self) -> list[list[str]]:
        return [[self.field.format(value) for value in row] for row in self.rows]


def power_traces(g: ExactMatrix, k_max: int) -> list[Scalar]:
    """[tr G⁰, tr G¹, …, tr G^K] from a running power (K products in total)."""
    if k_max < 0:
        raise PreconditionError(f"number of powers must be non-negative, got {k_max}")
    traces = [g.field.from_int(g.order)]
    power = None
    for _ in range(k_max):
        power = g if power is None else power @ g
        traces.append(power.trace())
    return traces


def determinant(a: ExactMatrix) -> Scalar:
    """Gaussian elimination over the field with row-swap sign tracking."""
    field = a.field
    rows = [list(row) for row in a.rows]
    n = len(rows)
    result = field.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return field.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            result = -result
        pivot_row = rows[col]
        result *= pivot_row[col]
        inverse = field.one / pivot_row[col]
        for r in range(col + 1, n):
            factor = rows[r][col] * inverse
            if not factor:
                continue
            row = rows[r]
            for c in range(col + 1, n):
                if pivot_row[c]:
                    row[c] -= factor * pivot_row[c]
    return result


def char_poly(g: ExactMatrix) -> UPolynomial:
    """Characteristic polynomial det(λI − G) by the Faddeev–LeVerrier recurrence.

    The recurrence divides by 1..n, so GF(p) is only accepted for p > n.
    """
    field = g.field
    n = g.order
    if not field.supports_division_by(n):
        raise UnsupportedFieldError(f"Faddeev-LeVerrier needs characteristic 0 or > {n}, got {field.name}")
    coefficients = [field.zero] * (n + 1)
    coefficients[n] = field.one
    identity = ExactMatrix.identity(n, field)
    adjugate_step = ExactMatrix.zeros(n, field)
    for k in range(1, n + 1):
        adjugate_step = g @ adjugate_step + identity.scale(coefficients[n - k + 1])
        coefficients[n - k] = -(g @ adjugate_step).trace() / field.from_int(k)
    return UPolynomial(tuple(coefficients), field)


def evaluate_polynomial_at(polynomial: UPolynomial, g: ExactMatrix) -> ExactMatrix:
    """P(G) by Horner's scheme."""
    if polynomial.field != g.field:
        raise ArithmeticDomainError(f"polynomial over {polynomial.field.name}, matrix over {g.field.name}")
    identity = ExactMatrix.identity(g.order, g.field)
    result = ExactMatrix.zeros(g.order, g.field)
    for c in reversed(polynomial.coefficients):
        result = result @ g + identity.scale(c)
    return result


def unimodular_conjugate(g: ExactMatrix, steps: Iterable[tuple[int, int, int]]) -> ExactMatrix:
    """Apply elementary similarity steps (i, j, c) in order; integrality and spectrum are preserved."""
    for i, j, c in steps:
        g = g.conjugate_elementary(i, j, c)
    return g
