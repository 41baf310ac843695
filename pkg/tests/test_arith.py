from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, strategies as st

from youngsum.arith import (
    Gaussian,
    factorial,
    format_scalar,
    norm_sq,
    parse_rational,
    parse_scalar,
    pochhammer,
    to_float,
)
from youngsum.errors import ParseError

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(Gaussian, rationals, rationals)


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (5, 120)])
def test_factorial_examples(n, expected):
    assert factorial(n) == expected


def test_pochhammer_examples():
    assert pochhammer(F(7, 3), 0) == 1
    assert pochhammer(Gaussian(1, 1), 0) == 1
    assert pochhammer(F(1, 2), 3) == F(15, 8)
    assert pochhammer(3, 4) == 360


def test_norm_sq_examples():
    assert norm_sq(Gaussian(0, 0)) == 0
    assert norm_sq(Gaussian(0, 1)) == 1
    assert norm_sq(Gaussian(F(3, 2), F(1, 2))) == F(5, 2)


def test_to_float_examples():
    assert to_float(F(1, 2)) == 0.5
    assert to_float(F(1, 3)) == 1 / 3
    assert to_float(F(15, 8)) == 1.875


def test_to_float_extended_precision():
    with mpmath.workprec(200):
        third = to_float(F(1, 3), 200)
        assert abs(third - mpmath.mpf(1) / 3) < mpmath.mpf(2) ** -190
    with pytest.raises(ValueError):
        to_float(F(1, 3), 24)


def test_gaussian_basics():
    z = Gaussian(F(3, 2), F(1, 2))
    assert z.conjugate() == Gaussian(F(3, 2), F(-1, 2))
    assert z * z.conjugate() == F(5, 2)
    assert (z * z.conjugate()).is_real()
    assert Gaussian(0, 1) ** 2 == -1
    assert hash(Gaussian(F(1, 2), 0)) == hash(F(1, 2))
    assert complex(z) == complex(1.5, 0.5)


@given(rationals, st.integers(0, 20), st.integers(0, 20))
def test_pochhammer_splits(x, m, n):
    assert pochhammer(x, m + n) == pochhammer(x, m) * pochhammer(x + m, n)


@given(gaussians, st.integers(0, 12), st.integers(0, 12))
def test_pochhammer_splits_gaussian(z, m, n):
    assert pochhammer(z, m + n) == pochhammer(z, m) * pochhammer(z + m, n)


@pytest.mark.parametrize("n", range(51))
def test_pochhammer_one_is_factorial(n):
    assert pochhammer(1, n) == factorial(n)


@given(gaussians, st.integers(0, 20))
def test_conjugate_pochhammer_product_is_real(z, n):
    assert norm_sq(z) == norm_sq(z.conjugate())
    assert norm_sq(z) >= 0
    assert (pochhammer(z, n) * pochhammer(z.conjugate(), n)).im == 0


@given(gaussians, gaussians)
def test_field_operations(a, b):
    assert a + b - b == a
    if b != 0:
        assert a * b / b == a


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1/2", F(1, 2)),
        ("-3", F(-3)),
        ("3/2+1/2i", Gaussian(F(3, 2), F(1, 2))),
        ("i", Gaussian(0, 1)),
        ("-i", Gaussian(0, -1)),
        ("2i", Gaussian(0, 2)),
        ("1/3-i", Gaussian(F(1, 3), -1)),
    ],
)
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


def test_parse_scalar_kinds():
    assert isinstance(parse_scalar("1/2"), F)
    assert isinstance(parse_scalar("3/2+1/2i"), Gaussian)


@pytest.mark.parametrize("text", ["", "1/0", "1//2", "abc", "1/2+", "3/2+1/2", "1.5", "2ii"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ParseError) as err:
        parse_scalar(text)
    assert "position" in str(err.value)


def test_parse_rational_rejects_complex():
    with pytest.raises(ParseError):
        parse_rational("1+i")


@given(rationals)
def test_rational_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(gaussians)
def test_gaussian_round_trip(z):
    assert parse_scalar(format_scalar(z)) == z
