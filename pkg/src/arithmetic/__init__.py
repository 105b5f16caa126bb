"""Exact arithmetic package."""

from .fields import RATIONALS, Field, GFElement, PrimeField, RationalField, Scalar, is_prime, parse_field_spec
from .polynomial import UPolynomial, poly_divrem, poly_gcd, squarefree_part


__all__ = [
    "RATIONALS",
    "Field",
    "GFElement",
    "PrimeField",
    "RationalField",
    "Scalar",
    "UPolynomial",
    "is_prime",
    "parse_field_spec",
    "poly_divrem",
    "poly_gcd",
    "squarefree_part",
]
