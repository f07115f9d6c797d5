from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lambda_stirling.rational import Rational, format_rational, parse_rational


def test_parse_simple():
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational("7") == Fraction(7)
    assert parse_rational("  5/10 ") == Fraction(1, 2)


def test_parse_canonicalizes():
    assert parse_rational("2/4") == parse_rational("1/2")
    value = parse_rational("-6/8")
    assert (value.numerator, value.denominator) == (-3, 4)


def test_format_canonical():
    assert format_rational(Fraction(1, 2)) == "1/2"
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(5)) == "5"
    assert format_rational(Fraction(0)) == "0"


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_garbage_rejected():
    with pytest.raises(ValueError):
        parse_rational("not-a-number")


def test_rational_alias_is_exact_type():
    assert Rational is Fraction


@given(st.fractions())
def test_roundtrip(q):
    assert parse_rational(format_rational(q)) == q
