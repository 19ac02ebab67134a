from fractions import Fraction

import pytest
from hypothesis import given

from frolicher.scalar import I, ONE, ZERO, Scalar, format_scalar, parse_scalar

from conftest import nonzero_scalars, rich_scalars, scalars


@pytest.mark.parametrize("text, re, im", [
    ("1", 1, 0), ("-i", 0, -1), ("1/2+3*i", Fraction(1, 2), 3), ("i", 0, 1),
    ("-2/3-1/4*i", Fraction(-2, 3), Fraction(-1, 4)), ("0", 0, 0), ("7*i", 0, 7),
])
def test_parse_examples(text, re, im):
    s = parse_scalar(text)
    assert s == Scalar(re, im)
    assert format_scalar(s) == text


@pytest.mark.parametrize("bad", ["", "+", "1i", "i2", "1+2", "1/0", "1.5", "2**i", "1/2/3"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_units():
    assert I * I == -ONE
    assert (ONE + I).conjugate() == ONE - I
    assert Scalar(3, 4) * Scalar(3, 4).conjugate() == Scalar(25)
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_floats_refused():
    with pytest.raises(TypeError):
        Scalar(0.5)


@given(rich_scalars)
def test_format_round_trip(s):
    assert parse_scalar(format_scalar(s)) == s


@given(scalars, scalars, scalars)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


@given(nonzero_scalars, scalars)
def test_division_inverts_multiplication(a, b):
    assert (b * a) / a == b
    assert a * a.inverse() == ONE


@given(rich_scalars)
def test_hash_consistent_with_eq(s):
    t = parse_scalar(format_scalar(s))
    assert hash(s) == hash(t)
