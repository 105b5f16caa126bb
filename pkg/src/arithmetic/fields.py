"""Exact scalar fields for TraceHankel project.

Two concrete fields are supported: the rationals, whose elements are plain
``fractions.Fraction`` values (always reduced, positive denominator), and the
prime fields GF(p), whose elements are :class:`GFElement` residues in ``[0, p)``.
Field objects carry the constants and conversions; the elements themselves
carry the arithmetic operators, so matrix and polynomial code is written once
against ``+ - * /``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from src.common.constants import PRIME_FIELD_PREFIX, RATIONAL_FIELD_NAME
from src.common.exceptions import ArithmeticDomainError, InputValidationError, UnsupportedFieldError


_MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, strong probable prime test beyond."""
    if n < 2:
        return False
    for p in _MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MILLER_RABIN_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


class GFElement:
    """Residue modulo a prime, kept in canonical range [0, p)."""

    __slots__ = ("modulus", "residue")

    def __init__(self, residue: int, modulus: int):
        self.modulus = modulus
        self.residue = residue % modulus

    def _coerce(self, other) -> GFElement | None:
        if isinstance(other, GFElement):
            if other.modulus != self.modulus:
                raise ArithmeticDomainError(f"mixed moduli {self.modulus} and {other.modulus}")
            return other
        if isinstance(other, int):
            return GFElement(other, self.modulus)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GFElement(self.residue + other.residue, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GFElement(self.residue - other.residue, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GFElement(other.residue - self.residue, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GFElement(self.residue * other.residue, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return GFElement(-self.residue, self.modulus)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return GFElement(pow(self.residue, exponent, self.modulus), self.modulus)

    def __bool__(self) -> bool:
        return self.residue != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, GFElement):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.residue, self.modulus))

    def __repr__(self) -> str:
        return f"GFElement({self.residue} mod {self.modulus})"

    def __str__(self) -> str:
        return str(self.residue)

    def inverse(self) -> GFElement:
        if self.residue == 0:
            raise ZeroDivisionError(f"zero has no inverse modulo {self.modulus}")
        return GFElement(pow(self.residue, -1, self.modulus), self.modulus)


Scalar = Union[Fraction, GFElement]


class BaseField:
    """Shared helpers; subclasses provide `name`, `characteristic`, `from_int`, `coerce`, `parse`."""

    name: str
    characteristic: int

    @property
    def zero(self) -> Scalar:
        return self.from_int(0)

    @property
    def one(self) -> Scalar:
        return self.from_int(1)

    def from_int(self, value: int) -> Scalar:
        raise NotImplementedError

    def coerce(self, value) -> Scalar:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError

    def format(self, value: Scalar) -> str:
        return str(value)

    def is_zero(self, value: Scalar) -> bool:
        return not value

    def supports_division_by(self, k: int) -> bool:
        """True when the integers 1..k are all invertible in the field."""
        return self.characteristic == 0 or k < self.characteristic


@dataclass(frozen=True)
class RationalField(BaseField):
    name: str = RATIONAL_FIELD_NAME
    characteristic: int = 0

    def from_int(self, value: int) -> Fraction:
        return Fraction(value)

    def coerce(self, value) -> Fraction:
        if isinstance(value, GFElement):
            raise ArithmeticDomainError("prime-field element used where a rational is expected")
        return Fraction(value)

    def parse(self, text: str) -> Fraction:
        """Parse "a" or "a/b"; raises ValueError on malformed text or zero denominator."""
        try:
            return Fraction(text.strip())
        except ZeroDivisionError as e:
            raise ValueError(f"zero denominator in {text!r}") from e


@dataclass(frozen=True)
class PrimeField(BaseField):
    modulus: int

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise InputValidationError(f"modulus {self.modulus} is not prime")

    @property
    def name(self) -> str:
        return f"{PRIME_FIELD_PREFIX}{self.modulus}"

    @property
    def characteristic(self) -> int:
        return self.modulus

    def from_int(self, value: int) -> GFElement:
        return GFElement(value, self.modulus)

    def coerce(self, value) -> GFElement:
        if isinstance(value, GFElement):
            if value.modulus != self.modulus:
                raise ArithmeticDomainError(f"element mod {value.modulus} used in GF({self.modulus})")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.modulus == 0:
                raise ArithmeticDomainError(f"denominator of {value} is not invertible mod {self.modulus}")
            return GFElement(value.numerator, self.modulus) / GFElement(value.denominator, self.modulus)
        return GFElement(int(value), self.modulus)

    def parse(self, text: str) -> GFElement:
        """Decimal residues; a rational "a/b" is reduced when b is invertible."""
        try:
            return self.coerce(Fraction(text.strip()))
        except (ZeroDivisionError, ArithmeticDomainError) as e:
            raise ValueError(str(e)) from e


Field = Union[RationalField, PrimeField]

RATIONALS = RationalField()


def parse_field_spec(text: str) -> Field:
    """Resolve the `--field` value: "rational" or "gf:<prime>"."""
    spec = text.strip().lower()
    if spec == RATIONAL_FIELD_NAME:
        return RATIONALS
    if spec.startswith(PRIME_FIELD_PREFIX):
        digits = spec[len(PRIME_FIELD_PREFIX) :]
        if not digits.isdigit():
            raise InputValidationError(f"malformed prime-field modulus in {text!r}")
        return PrimeField(int(digits))
    raise UnsupportedFieldError(f"unsupported field {text!r}; expected 'rational' or 'gf:<prime>'")
