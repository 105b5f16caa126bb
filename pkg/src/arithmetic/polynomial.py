"""Univariate polynomials over an exact field for TraceHankel project."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Optional

from src.arithmetic.fields import RATIONALS, Field, Scalar
from src.common.exceptions import ArithmeticDomainError, UnsupportedFieldError


def _strip(coefficients: Sequence[Scalar]) -> tuple:
    end = len(coefficients)
    while end and not coefficients[end - 1]:
        end -= 1
    return tuple(coefficients[:end])


@dataclass(frozen=True)
class UPolynomial:
    """Polynomial in λ with coefficients listed from the constant term upward.

    The zero polynomial has an empty coefficient tuple and ``degree is None``;
    every other polynomial has a nonzero leading coefficient.
    """

    coefficients: tuple = ()
    field: Field = RATIONALS

    def __post_init__(self):
        coerced = [self.field.coerce(c) for c in self.coefficients]
        object.__setattr__(self, "coefficients", _strip(coerced))

    @classmethod
    def zero(cls, field: Field = RATIONALS) -> UPolynomial:
        return cls((), field)

    @classmethod
    def constant(cls, value, field: Field = RATIONALS) -> UPolynomial:
        return cls((value,), field)

    @classmethod
    def monomial(cls, coefficient, power: int, field: Field = RATIONALS) -> UPolynomial:
        return cls((0,) * power + (coefficient,), field)

    @classmethod
    def from_roots(cls, roots: Iterable, field: Field = RATIONALS) -> UPolynomial:
        """Monic ∏(λ − r) over the given roots (repeats allowed)."""
        result = cls.constant(1, field)
        for root in roots:
            result = result * cls((-field.coerce(root), 1), field)
        return result

    @property
    def degree(self) -> Optional[int]:
        return len(self.coefficients) - 1 if self.coefficients else None

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> Scalar:
        return self.coefficients[-1] if self.coefficients else self.field.zero

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.leading == self.field.one

    def coefficient(self, power: int) -> Scalar:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return self.field.zero

    def _check_field(self, other: UPolynomial) -> None:
        if other.field != self.field:
            raise ArithmeticDomainError(f"polynomials over {self.field.name} and {other.field.name}")

    def __add__(self, other: UPolynomial) -> UPolynomial:
        self._check_field(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return UPolynomial(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)), self.field)

    def __sub__(self, other: UPolynomial) -> UPolynomial:
        return self + (-other)

    def __neg__(self) -> UPolynomial:
        return UPolynomial(tuple(-c for c in self.coefficients), self.field)

    def __mul__(self, other) -> UPolynomial:
        if not isinstance(other, UPolynomial):
            return self.scale(other)
        self._check_field(other)
        if self.is_zero or other.is_zero:
            return UPolynomial.zero(self.field)
        product = [self.field.zero] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return UPolynomial(tuple(product), self.field)

    def __rmul__(self, other) -> UPolynomial:
        return self.scale(other)

    def scale(self, value) -> UPolynomial:
        value = self.field.coerce(value)
        return UPolynomial(tuple(c * value for c in self.coefficients), self.field)

    def derivative(self) -> UPolynomial:
        return UPolynomial(
            tuple(self.field.from_int(k) * c for k, c in enumerate(self.coefficients) if k),
            self.field,
        )

    def monic(self) -> UPolynomial:
        if self.is_zero:
            raise ArithmeticDomainError("the zero polynomial has no monic associate")
        return self.scale(self.field.one / self.leading)

    def evaluate(self, value) -> Scalar:
        """Horner evaluation at a scalar."""
        value = self.field.coerce(value)
        result = self.field.zero
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def divrem(self, other: UPolynomial) -> tuple[UPolynomial, UPolynomial]:
        return poly_divrem(self, other)

    def exact_div(self, other: UPolynomial) -> UPolynomial:
        quotient, remainder = poly_divrem(self, other)
        if not remainder.is_zero:
            raise ArithmeticDomainError("polynomial division is not exact")
        return quotient

    def formatted_coefficients(self) -> list[str]:
        """Coefficient list, constant term first, in the textual scalar format."""
        return [self.field.format(c) for c in self.coefficients]


def poly_divrem(a: UPolynomial, b: UPolynomial) -> tuple[UPolynomial, UPolynomial]:
    """Long division: a = q·b + r with deg r < deg b."""
    a._check_field(b)
    if b.is_zero:
        raise ArithmeticDomainError("division by the zero polynomial")
    field = a.field
    remainder = list(a.coefficients)
    shift_max = len(remainder) - len(b.coefficients)
    if shift_max < 0:
        return UPolynomial.zero(field), a
    inverse_leading = field.one / b.leading
    quotient = [field.zero] * (shift_max + 1)
    for shift in range(shift_max, -1, -1):
        factor = remainder[shift + len(b.coefficients) - 1] * inverse_leading
        quotient[shift] = factor
        if not factor:
            continue
        for k, c in enumerate(b.coefficients):
            remainder[shift + k] -= factor * c
    return UPolynomial(tuple(quotient), field), UPolynomial(tuple(remainder[: len(b.coefficients) - 1]), field)


def poly_gcd(a: UPolynomial, b: UPolynomial) -> UPolynomial:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if a.is_zero and b.is_zero:
        raise ArithmeticDomainError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, poly_divrem(a, b)[1]
    return a.monic()


def squarefree_part(f: UPolynomial) -> UPolynomial:
    """Monic f / gcd(f, f′): same distinct roots as f, each simple.

    In characteristic p the derivative test is only sound for deg f < p.
    """
    if f.is_zero:
        raise ArithmeticDomainError("squarefree part of the zero polynomial")
    characteristic = f.field.characteristic
    if characteristic and f.degree >= characteristic:
        raise UnsupportedFieldError(
            f"squarefree part needs degree < p in {f.field.name}; got degree {f.degree}",
        )
    if f.degree == 0:
        return UPolynomial.constant(1, f.field)
    return poly_divrem(f, poly_gcd(f, f.derivative()))[0].monic()
