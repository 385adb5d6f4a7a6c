import numpy as np
import pytest

from nmbu.maxclass.common import ContextMismatchError, MathematicalAssertionError
from nmbu.maxclass.divided_powers.algebra import (DividedPowerAlgebra, dp_mul, random_endo,
                                                  random_module_element)


def test_algebra_parameters():
    algebra = DividedPowerAlgebra(3, 2)
    assert algebra.q == 9
    assert algebra.mult_table.shape == (9, 9)
    with pytest.raises(ValueError):
        algebra.mult_table[0, 0] = 2


@pytest.mark.parametrize("p, c, cap", [(4, 1, 3), (3, 0, 3), (3, 1, 0)])
def test_algebra_rejects_bad_parameters(p, c, cap):
    with pytest.raises(ValueError):
        DividedPowerAlgebra(p, c, cap)


def test_dp_mul_examples():
    assert dp_mul(1, 1, 9, 3) == (2, 2)
    coefficient, exponent = dp_mul(4, 5, 9, 3)
    assert coefficient == 0 and exponent == 9
    assert dp_mul(0, 8, 9, 3) == (1, 8)


def test_dp_mul_rejects_exponents_out_of_range():
    with pytest.raises(ValueError):
        dp_mul(9, 0, 9, 3)
    with pytest.raises(ValueError):
        dp_mul(-1, 2, 9, 3)


@pytest.mark.parametrize("q, p", [(3, 3), (9, 3), (5, 5), (25, 5), (27, 3)])
def test_dp_mul_associative_exhaustive(q, p):
    def triple(first, second, third):
        a, ab = dp_mul(first, second, q, p)
        if ab >= q:
            return 0
        b, _ = dp_mul(ab, third, q, p)
        return (a * b).value

    for i in range(q):
        for j in range(q):
            for k in range(q):
                assert triple(i, j, k) == triple(j, k, i)


def test_dp_mul_is_commutative():
    for i in range(25):
        for j in range(25):
            assert dp_mul(i, j, 25, 5) == dp_mul(j, i, 25, 5)


def test_element_product():
    algebra = DividedPowerAlgebra(5, 1)
    assert algebra.monomial(1, t_power=1) * algebra.monomial(2) == algebra.monomial(3, t_power=1, coefficient=3)
    assert (algebra.monomial(3) * algebra.monomial(2)).is_zero()
    assert algebra.monomial(5).is_zero()


def test_product_overflowing_t_cap_raises():
    algebra = DividedPowerAlgebra(3, 1, t_degree_cap=2)
    with pytest.raises(ValueError):
        algebra.monomial(0, t_power=1) * algebra.monomial(0, t_power=1)
    with pytest.raises(ValueError):
        algebra.monomial(0, t_power=2)


def test_mixing_algebras_raises():
    with pytest.raises(ContextMismatchError):
        DividedPowerAlgebra(3, 1).monomial(0) + DividedPowerAlgebra(3, 2).monomial(0)


def test_coefficient_and_support():
    algebra = DividedPowerAlgebra(5, 1)
    f = algebra.monomial(2, t_power=1, coefficient=3) + algebra.monomial(4)
    assert f.support() == [(2, 1), (4, 0)]
    assert f.coefficient(2).coefficient_list() == [0, 3]
    assert f.coefficient(7).is_zero()
    assert repr(f) == "3*t*x^(2) + x^(4)"


def test_derivation_and_z_operator():
    algebra = DividedPowerAlgebra(3, 2)
    d = algebra.derivation()
    assert d.apply(algebra.monomial(4)) == algebra.monomial(3)
    assert d.apply(algebra.monomial(0)).is_zero()
    z = algebra.z_operator()
    assert z.apply(algebra.monomial(3)) == -algebra.monomial(2)
    assert z.apply(algebra.monomial(0)) == -algebra.monomial(8, t_power=1)


def test_z_operator_needs_t():
    with pytest.raises(ValueError):
        DividedPowerAlgebra(3, 1, t_degree_cap=1).z_operator()


def test_derivation_is_a_derivation():
    algebra = DividedPowerAlgebra(5, 1)
    rng = np.random.default_rng(17)
    d = algebra.derivation()
    for _ in range(30):
        f = random_module_element(algebra, rng)
        g = random_module_element(algebra, rng)
        assert d.apply(f * g) == d.apply(f) * g + f * d.apply(g)


def test_multiplication_operator_matches_product():
    algebra = DividedPowerAlgebra(3, 2)
    rng = np.random.default_rng(5)
    for _ in range(20):
        f = random_module_element(algebra, rng)
        g = random_module_element(algebra, rng)
        assert algebra.multiplication(f).apply(g) == g * f


def test_endo_composition():
    algebra = DividedPowerAlgebra(3, 2)
    rng = np.random.default_rng(11)
    a, b, c = (random_endo(algebra, rng) for _ in range(3))
    assert a.compose(b.compose(c)) == a.compose(b).compose(c)
    assert a.compose(algebra.identity()) == a
    assert a.bracket(b) == -b.bracket(a)
    assert a.bracket(a).is_zero()


def test_dp_mul_truncation_is_asserted():
    # 2 is not a power of 3, so C(2, 1) survives the truncation
    with pytest.raises(MathematicalAssertionError):
        dp_mul(1, 1, 2, 3)
