import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supermtc.errors import FieldOrderError
from supermtc.scalar import FloatScalar, Scalar, is_positive, positive_sqrt, root_of_unity, sqrt2


def test_root_of_unity_reduces_fraction():
    assert root_of_unity(2, 16) == root_of_unity(1, 8)
    assert root_of_unity(8, 16) == -1
    assert root_of_unity(16, 16) == 1
    assert root_of_unity(-1, 16) == root_of_unity(15, 16)


def test_small_identities():
    z8 = Scalar.zeta(8)
    assert (z8 + z8 ** 7) ** 2 == 2
    assert sqrt2() * sqrt2() == 2
    z16 = Scalar.zeta(16)
    assert z16.conj() * z16 == 1
    z3 = Scalar.zeta(3)
    assert z3 + z3 ** 2 + 1 == 0
    assert abs(z16.to_complex() - cmath.exp(2j * math.pi / 16)) < 1e-15


def test_equality_across_orders():
    assert Scalar.zeta(4) == Scalar.zeta(16, 4)
    assert Scalar.rational(Fraction(1, 3)) == Scalar(12, [Fraction(1, 3)])
    assert Scalar.zeta(16) != Scalar.zeta(16, 3)


def test_inverse_and_division():
    x = Scalar.zeta(16) + 2 * Scalar.zeta(16, 3) - Fraction(1, 2)
    assert x * x.inverse() == 1
    assert (x / x) == 1
    with pytest.raises(ZeroDivisionError):
        Scalar.rational(0).inverse()
    with pytest.raises(ZeroDivisionError):
        x / Scalar.rational(0)


def test_mixing_exact_and_float_raises():
    with pytest.raises(TypeError):
        Scalar.zeta(8) + FloatScalar(1.0)
    with pytest.raises(TypeError):
        FloatScalar(1.0) * Scalar.zeta(8)


def test_order_cap():
    with pytest.raises(FieldOrderError):
        Scalar.zeta(2048)


def test_str_is_readable():
    assert str(2 * Scalar.zeta(16)) == "2*z16"
    assert str(Scalar.rational(0)) == "0"


def test_positive_sqrt():
    assert positive_sqrt(Scalar.rational(4)) == 2
    r = positive_sqrt(Scalar.rational(2))
    assert r == sqrt2()
    assert is_positive(r)
    assert not is_positive(-r)
    assert positive_sqrt(Scalar.rational(Fraction(9, 2))) == 3 * sqrt2() / 2


def test_positive_sqrt_from_gauss_hint():
    # |2 z16|^2 = 4 and |1 + z3|^2 = 1; D = 1 + sqrt3 needs the hint
    s3 = Scalar.zeta(12) + Scalar.zeta(12, 11)
    x = (1 + s3) ** 2
    hint = (1 + s3) * Scalar.zeta(24, 5)
    assert positive_sqrt(x, hint) == 1 + s3
    with pytest.raises(ArithmeticError):
        positive_sqrt(x)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 12, 16, 24, 48, 64])
def test_roots_of_unity_have_the_right_order(n):
    for k in range(n):
        z = root_of_unity(k, n)
        assert z ** n == 1
        assert abs(z.to_complex() - cmath.exp(2j * math.pi * k / n)) < 1e-12


ORDERS = [1, 3, 4, 8, 12, 16]


@st.composite
def scalars(draw):
    n = draw(st.sampled_from(ORDERS))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=n, max_size=n))
    return Scalar(n, coeffs)


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars())
def test_complex_embedding_is_a_homomorphism(a, b):
    assert abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-12
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-12
    assert abs(a.conj().to_complex() - a.to_complex().conjugate()) < 1e-12


@settings(max_examples=40, deadline=None)
@given(scalars())
def test_inverse_property(a):
    if a.is_zero():
        return
    assert a * a.inverse() == 1
