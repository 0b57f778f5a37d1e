"""Ring axioms and string formats for the exact scalar types."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffkit.scalars import (
    GAUSSIAN,
    QUATERNION,
    RATIONAL,
    GaussianRational,
    Quaternion,
    TAU1,
    TAU2,
    TAU3,
    format_gaussian,
    format_quaternion,
    format_rational,
    format_scalar,
    parse_gaussian,
    parse_quaternion,
    parse_rational,
    parse_scalar,
    ring_conjugate,
)

rationals = st.builds(
    Fraction,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=12),
)
gaussians = st.builds(GaussianRational, rationals, rationals)
quaternions = st.builds(Quaternion, rationals, rationals, rationals, rationals)


@settings(deadline=None, max_examples=60)
@given(gaussians, gaussians, gaussians)
def test_gaussian_ring_axioms(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + GaussianRational(0) == x
    assert x * GaussianRational(1) == x
    assert x + (-x) == GaussianRational(0)


@settings(deadline=None, max_examples=60)
@given(quaternions, quaternions, quaternions)
def test_quaternion_ring_axioms(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (y + z) * x == y * x + z * x
    assert x * Quaternion(1) == x and Quaternion(1) * x == x


@settings(deadline=None, max_examples=60)
@given(gaussians)
def test_gaussian_inverse(x):
    if x:
        assert x * (GaussianRational(1) / x) == GaussianRational(1)


@settings(deadline=None, max_examples=60)
@given(quaternions)
def test_quaternion_inverse(x):
    if x:
        assert x * x.inverse() == Quaternion(1)
        assert x.inverse() * x == Quaternion(1)


@settings(deadline=None, max_examples=60)
@given(quaternions, quaternions)
def test_quaternion_conjugate_antihomomorphism(x, y):
    assert (x * y).conjugate() == y.conjugate() * x.conjugate()
    assert x.norm() == (x * x.conjugate()).a


def test_quaternion_unit_relations():
    minus_one = Quaternion(-1)
    assert TAU1 * TAU1 == minus_one
    assert TAU2 * TAU2 == minus_one
    assert TAU3 * TAU3 == minus_one
    assert TAU1 * TAU2 == TAU3
    assert TAU2 * TAU1 == -TAU3
    assert TAU2 * TAU3 == TAU1
    assert TAU3 * TAU1 == TAU2


def test_scalars_mix_with_ints_and_fractions():
    assert GaussianRational(1, 2) * 3 == GaussianRational(3, 6)
    assert 2 + GaussianRational(0, 1) == GaussianRational(2, 1)
    assert Quaternion(1, 1, 0, 0) * Fraction(1, 2) == Quaternion(Fraction(1, 2), Fraction(1, 2))
    assert Fraction(1, 3) * Quaternion(3) == Quaternion(1)


def test_immutability():
    with pytest.raises(AttributeError):
        GaussianRational(1).re = Fraction(2)
    with pytest.raises(AttributeError):
        Quaternion(1).a = Fraction(2)


@settings(deadline=None, max_examples=60)
@given(rationals)
def test_rational_format_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


@settings(deadline=None, max_examples=60)
@given(gaussians)
def test_gaussian_format_roundtrip(z):
    assert parse_gaussian(format_gaussian(z)) == z


@settings(deadline=None, max_examples=60)
@given(quaternions)
def test_quaternion_format_roundtrip(q):
    assert parse_quaternion(format_quaternion(q)) == q


def test_gaussian_parse_examples():
    assert parse_gaussian("3/5") == GaussianRational(Fraction(3, 5))
    assert parse_gaussian("1/2+1/3i") == GaussianRational(Fraction(1, 2), Fraction(1, 3))
    assert parse_gaussian("-i") == GaussianRational(0, -1)
    assert parse_gaussian("i") == GaussianRational(0, 1)
    assert parse_gaussian("-2/7i") == GaussianRational(0, Fraction(-2, 7))
    with pytest.raises(ValueError):
        parse_gaussian("")
    with pytest.raises(ValueError):
        parse_gaussian("1+i2")


def test_scalar_dispatch():
    assert parse_scalar(RATIONAL, format_scalar(RATIONAL, Fraction(-7, 3))) == Fraction(-7, 3)
    z = GaussianRational(2, -3)
    assert parse_scalar(GAUSSIAN, format_scalar(GAUSSIAN, z)) == z
    q = Quaternion(1, -2, Fraction(1, 5), 0)
    assert parse_scalar(QUATERNION, format_scalar(QUATERNION, q)) == q


def test_ring_conjugate():
    assert ring_conjugate(RATIONAL, Fraction(2, 3)) == Fraction(2, 3)
    assert ring_conjugate(GAUSSIAN, GaussianRational(1, 2)) == GaussianRational(1, -2)
    assert ring_conjugate(QUATERNION, Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4)
