from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from filtersums.coefficients import I, J, K, Quaternion, add, as_scalar, format_scalar, inv, mul

fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6))
quats = st.builds(Quaternion, fractions, fractions, fractions, fractions)


def test_hamilton_units():
    assert I * J == K and J * K == I and K * I == J
    assert J * I == -K
    assert I * I == J * J == K * K == I * J * K == -1


def test_noncommutative_product():
    x, y = Quaternion(1, 2, 0, 0), Quaternion(0, 0, 1, 3)
    assert x * y != y * x
    assert x * y == Quaternion(0, 0, -5, 5)
    assert y * x == Quaternion(0, 0, 7, 1)


def test_inverse_frozen_value():
    q = Quaternion(1, 1, 1, 1)
    assert q.inverse() == Quaternion(Fraction(1, 4), Fraction(-1, 4), Fraction(-1, 4), Fraction(-1, 4))
    with pytest.raises(ZeroDivisionError):
        Quaternion().inverse()
    with pytest.raises(ZeroDivisionError):
        inv(Fraction(0))


def test_immutable_and_hash():
    q = Quaternion(2)
    with pytest.raises(AttributeError):
        q.a = 1
    assert q == 2 and hash(q) == hash(Fraction(2))


def test_variant_mismatch_and_parsing():
    with pytest.raises(TypeError):
        add(Fraction(1), I)
    with pytest.raises(TypeError):
        mul(I, Fraction(1))
    with pytest.raises(TypeError):
        as_scalar(True)
    assert as_scalar("3/4") == Fraction(3, 4)
    assert format_scalar(Fraction(-3, 4)) == "-3/4"
    assert format_scalar(Quaternion(1, 0, Fraction(1, 2), -2)) == "q(1,0,1/2,-2)"


@given(quats, quats, quats)
def test_quaternion_ring_laws(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z


@given(quats)
def test_quaternion_division(x):
    if x != 0:
        assert x * x.inverse() == 1 == x.inverse() * x
    assert (x * x.conjugate()) == x.norm()


@given(quats, quats)
def test_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
