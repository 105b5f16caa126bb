from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis.strategies import fractions, integers

from src.arithmetic.fields import RATIONALS, GFElement, PrimeField, is_prime, parse_field_spec
from src.common.exceptions import ArithmeticDomainError, InputValidationError, UnsupportedFieldError


GF7 = PrimeField(7)
GF101 = PrimeField(101)


@pytest.mark.parametrize("n", [2, 3, 5, 7, 101, 7919, 2**61 - 1])
def test_is_prime_accepts_primes(n):
    assert is_prime(n)


@pytest.mark.parametrize("n", [-7, 0, 1, 4, 9, 91, 561, 7917, 2**61 + 1])
def test_is_prime_rejects_non_primes(n):
    assert not is_prime(n)


def test_gf_element_arithmetic_stays_in_range():
    a, b = GF7.from_int(3), GF7.from_int(5)
    assert a * b == 1
    assert a + b == 1
    assert a - b == 5
    assert b / a == 4
    assert -a == 4
    assert a**-1 == 5
    assert 2 - a == 6
    assert str(a * b * 2) == "2"


def test_gf_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        GF7.zero.inverse()


def test_mixed_moduli_are_rejected():
    with pytest.raises(ArithmeticDomainError):
        _ = GFElement(1, 7) + GFElement(1, 11)


def test_prime_field_requires_prime_modulus():
    with pytest.raises(InputValidationError):
        PrimeField(4)


def test_rational_field_parses_fractions():
    assert RATIONALS.parse(" 3/4 ") == Fraction(3, 4)
    assert RATIONALS.parse("-2") == -2
    with pytest.raises(ValueError):
        RATIONALS.parse("1/0")
    with pytest.raises(ValueError):
        RATIONALS.parse("x")


def test_prime_field_parses_residues():
    assert GF7.parse("9") == 2
    assert GF7.parse("1/2") == 4
    with pytest.raises(ValueError):
        GF7.parse("1/7")


def test_rational_field_refuses_gf_elements():
    with pytest.raises(ArithmeticDomainError):
        RATIONALS.coerce(GF7.one)


def test_supports_division_by():
    assert RATIONALS.supports_division_by(1000)
    assert GF7.supports_division_by(6)
    assert not GF7.supports_division_by(7)


def test_parse_field_spec():
    assert parse_field_spec("rational") is RATIONALS
    assert parse_field_spec("GF:7") == GF7
    assert parse_field_spec("gf:7").name == "gf:7"


@pytest.mark.parametrize(
    ("text", "error", "exit_code"),
    [
        ("gf:x", InputValidationError, 3),
        ("gf:9", InputValidationError, 3),
        ("real", UnsupportedFieldError, 4),
    ],
)
def test_parse_field_spec_errors(text, error, exit_code):
    with pytest.raises(error) as info:
        parse_field_spec(text)
    assert info.value.exit_code == exit_code


@given(fractions(max_denominator=50), fractions(max_denominator=50))
def test_reduction_mod_p_is_a_ring_homomorphism(a, b):
    assume(a.denominator % 101 and b.denominator % 101)
    assert GF101.coerce(a + b) == GF101.coerce(a) + GF101.coerce(b)
    assert GF101.coerce(a * b) == GF101.coerce(a) * GF101.coerce(b)


@given(integers(min_value=1, max_value=100))
def test_every_nonzero_residue_is_invertible(n):
    x = GF101.from_int(n)
    assert x * x.inverse() == GF101.one
