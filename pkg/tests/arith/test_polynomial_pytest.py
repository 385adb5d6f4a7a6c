import numpy as np
import pytest
from hypothesis import given, strategies as st

from nmbu.maxclass.arith.field import FpContext
from nmbu.maxclass.arith.polynomial import NEGATIVE_INFINITY, Polynomial, TPoly, tpoly_arith
from nmbu.maxclass.common import ContextMismatchError
from nmbu.maxclass.polycheck.xpoly import XPoly

coefficient_lists = st.lists(st.integers(0, 4), max_size=8)


def test_normalized_form():
    f = TPoly([1, 2, 0, 0], 5)
    assert f.coefficient_list() == [1, 2]
    assert f.degree() == 1
    assert TPoly([0, 0], 5).is_zero()
    assert TPoly.zero(FpContext.of(5)).degree() == NEGATIVE_INFINITY


def test_reduction_mod_p():
    assert TPoly([7, -1], 5).coefficient_list() == [2, 4]


def test_repr():
    one_plus_t = TPoly([1, 1], 3)
    assert repr(one_plus_t * one_plus_t) == 't^2 + 2*t + 1'
    assert repr(XPoly([0, 0, 1], 5)) == 'X^2'
    assert repr(TPoly([], 5)) == '0'


def test_coeff_outside_support():
    f = TPoly([1, 2], 5)
    assert f.coeff(5) == 0
    assert f.coeff(-1) == 0
    assert f.coeff(1) == 2


def test_frobenius_in_characteristic_p():
    ctx = FpContext.of(5)
    x_plus_one = TPoly([1, 1], ctx)
    assert x_plus_one ** 5 == TPoly.monomial(5, ctx) + TPoly.one(ctx)


def test_scalar_multiplication():
    ctx = FpContext.of(7)
    f = TPoly([1, 2, 3], ctx)
    assert 3 * f == f.scale(3)
    assert f * ctx(2) == TPoly([2, 4, 6], ctx)
    assert f * 7 == TPoly.zero(ctx)


def test_shift_and_truncate():
    f = TPoly([1, 2, 3], 5)
    assert f.shift(2).coefficient_list() == [0, 0, 1, 2, 3]
    assert f.shift(-1).coefficient_list() == [2, 3]
    assert f.truncate(1).coefficient_list() == [1, 2]
    assert f.truncate(-1).is_zero()


def test_evaluate():
    assert TPoly([1, 1, 1], 5).evaluate(2) == 2


def test_divmod_monic():
    ctx = FpContext.of(5)
    divisor = TPoly([4, 1], ctx)  # t - 1
    f = divisor * TPoly([1, 2, 1], ctx) + TPoly([3], ctx)
    quotient, remainder = f.divmod_monic(divisor)
    assert quotient == TPoly([1, 2, 1], ctx)
    assert remainder == TPoly([3], ctx)
    assert divisor.divides(divisor * divisor)
    assert not divisor.divides(TPoly([1, 1], ctx))


def test_divmod_requires_monic():
    with pytest.raises(ValueError):
        TPoly([1, 1], 5).divmod_monic(TPoly([1, 2], 5))


def test_mixing_variables_raises():
    with pytest.raises(ContextMismatchError):
        TPoly([1], 5) + XPoly([1], 5)


def test_mixing_moduli_raises():
    with pytest.raises(ContextMismatchError):
        TPoly([1], 5) * TPoly([1], 3)


def test_tpoly_arith():
    x = TPoly([1, 1], 3)
    y = TPoly([2], 3)
    assert tpoly_arith("add", x, y) == TPoly([0, 1], 3)
    assert tpoly_arith("sub", x, y) == TPoly([2, 1], 3)
    assert tpoly_arith("mul", x, y) == TPoly([2, 2], 3)
    assert tpoly_arith("scale", x, 2) == TPoly([2, 2], 3)
    with pytest.raises(ValueError):
        tpoly_arith("div", x, y)
    with pytest.raises(ContextMismatchError):
        tpoly_arith("add", x, TPoly([1], 5))


def test_immutable_coefficients():
    f = TPoly([1, 2], 5)
    with pytest.raises(ValueError):
        f.coefficients[0] = 3


@given(coefficient_lists, coefficient_lists, coefficient_lists)
def test_ring_axioms(a, b, c):
    ctx = FpContext.of(5)
    f, g, h = (TPoly(x, ctx) for x in (a, b, c))
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == TPoly.zero(ctx)
    assert f * TPoly.one(ctx) == f


@given(coefficient_lists, st.integers(0, 6))
def test_power_matches_repeated_product(a, e):
    f = TPoly(a, 5)
    expected = TPoly.one(FpContext.of(5))
    for _ in range(e):
        expected = expected * f
    assert f ** e == expected


@given(coefficient_lists, st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_division_identity(a, b):
    ctx = FpContext.of(5)
    f = TPoly(a, ctx)
    divisor = TPoly(b + [1], ctx)
    quotient, remainder = f.divmod_monic(divisor)
    assert quotient * divisor + remainder == f
    assert remainder.is_zero() or remainder.degree() < divisor.degree()


def test_polynomial_hash_consistent_with_equality():
    assert hash(TPoly([1, 2, 0], 5)) == hash(TPoly(np.array([6, 2]), 5))
    assert isinstance(TPoly([1], 5), Polynomial)
