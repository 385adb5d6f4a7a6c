import numpy as np
import pytest

from nmbu.maxclass.common import ContextMismatchError, MathematicalAssertionError
from nmbu.maxclass.divided_powers.algebra import DividedPowerAlgebra
from nmbu.maxclass.divided_powers.semidirect import (SemidirectElement, graded_degree, iterated_bracket, jacobi_sum,
                                                     lie_closure, make_generators, metabelian_check,
                                                     monomial_of_degree, proportionality, random_semidirect_element,
                                                     semidirect_bracket)


def test_make_generators():
    z, e_2 = make_generators(3, 2, 1, 2)
    assert e_2.f.support() == [(8, 0)]
    assert z.f.is_zero()
    assert z.A == z.algebra.z_operator()
    assert e_2.A == e_2.algebra.multiplication(e_2.algebra.monomial(7, t_power=1))


@pytest.mark.parametrize("m, n", [(0, 2), (2, 2), (3, 2), (1, 10)])
def test_make_generators_rejects(m, n):
    with pytest.raises(ValueError):
        make_generators(3, 2, m, n)


@pytest.mark.parametrize("p, c", [(3, 1), (3, 2), (5, 1)])
def test_jacobi_on_random_triples(p, c):
    algebra = DividedPowerAlgebra(p, c)
    rng = np.random.default_rng(2023)
    for _ in range(200):
        u, v, w = (random_semidirect_element(algebra, rng) for _ in range(3))
        assert jacobi_sum(u, v, w).is_zero()


def test_bracket_is_alternating():
    algebra = DividedPowerAlgebra(5, 1)
    rng = np.random.default_rng(3)
    u = random_semidirect_element(algebra, rng)
    v = random_semidirect_element(algebra, rng)
    assert semidirect_bracket(u, v) == -semidirect_bracket(v, u)
    assert semidirect_bracket(u, u).is_zero()
    assert u.bracket(v) == semidirect_bracket(u, v)


def test_bracket_of_different_algebras_raises():
    z, _ = make_generators(3, 1, 1, 2)
    w, _ = make_generators(3, 2, 1, 2)
    with pytest.raises(ContextMismatchError):
        semidirect_bracket(z, w)


def test_first_brackets_with_z():
    # e_3 = [e_2, z] = (x^(q+m-3), t x^(q-3) I)
    z, e_2 = make_generators(5, 1, 1, 2)
    algebra = z.algebra
    e_3 = iterated_bracket(e_2, z, 1)
    assert e_3.f == algebra.monomial(3)
    assert e_3.A == algebra.multiplication(algebra.monomial(2, t_power=1))
    assert iterated_bracket(e_2, z, 0) == e_2


def test_proportionality():
    _, e_2 = make_generators(5, 1, 1, 2)
    assert proportionality(e_2.scale(3), e_2) == 3
    assert proportionality(e_2.scale(5), e_2) == 0
    zero = SemidirectElement(e_2.algebra.zero(), e_2.algebra.zero_endo())
    assert proportionality(zero, zero) == 0


def test_proportionality_rejects_independent_elements():
    z, e_2 = make_generators(5, 1, 1, 2)
    with pytest.raises(MathematicalAssertionError):
        proportionality(z, e_2)
    zero = SemidirectElement(e_2.algebra.zero(), e_2.algebra.zero_endo())
    with pytest.raises(MathematicalAssertionError):
        proportionality(e_2, zero)


def test_graded_degree():
    algebra = DividedPowerAlgebra(5, 2)
    assert graded_degree(algebra.monomial(0), 1) == 26
    assert graded_degree(algebra.monomial(24, t_power=1), 1) == 27
    with pytest.raises(ValueError):
        graded_degree(algebra.monomial(0) + algebra.monomial(1), 1)
    _, e_2 = make_generators(5, 2, 1, 2)
    with pytest.raises(ValueError):
        graded_degree(e_2, 1)


def test_monomial_of_degree_inverts_graded_degree():
    algebra = DividedPowerAlgebra(5, 1)
    m = 1
    for degree in range(m + 1, 3 * algebra.q + m + 1):
        assert graded_degree(monomial_of_degree(algebra, degree, m), m) == degree
    with pytest.raises(ValueError):
        monomial_of_degree(algebra, m, m)


def test_metabelian_check_on_derivation_and_module():
    algebra = DividedPowerAlgebra(3, 1)
    d = SemidirectElement(algebra.zero(), algebra.derivation())
    top = SemidirectElement(algebra.monomial(2), algebra.zero_endo())
    assert len(lie_closure([d, top])) == 4
    assert metabelian_check([d, top]) == (4, True)


@pytest.mark.parametrize("p, c, n", [(3, 1, 2), (3, 2, 2), (3, 2, 5), (5, 1, 3), (5, 2, 3)])
def test_operator_part_generates_metabelian_subalgebra(p, c, n):
    algebra = DividedPowerAlgebra(p, c)
    q = algebra.q
    shifted = SemidirectElement(algebra.zero(), algebra.multiplication(algebra.monomial(q - n, t_power=1)))
    z = SemidirectElement(algebra.zero(), algebra.z_operator())
    basis = lie_closure([shifted, z])
    assert len(basis) == q - n + 2
    assert all(element.f.is_zero() for element in basis)
    assert metabelian_check([shifted, z]) == (q - n + 2, True)


def test_lie_closure_dimension_limit():
    algebra = DividedPowerAlgebra(3, 2)
    d = SemidirectElement(algebra.zero(), algebra.derivation())
    top = SemidirectElement(algebra.monomial(8), algebra.zero_endo())
    assert len(lie_closure([d, top])) == 10
    with pytest.raises(ValueError):
        lie_closure([d, top], max_dimension=5)
    assert lie_closure([]) == []
