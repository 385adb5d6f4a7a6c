#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import logging
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from nmbu.maxclass.arith.field import FpScalar, rank_mod_p
from nmbu.maxclass.common import MathematicalAssertionError
from nmbu.maxclass.divided_powers.algebra import (DEFAULT_T_DEGREE_CAP, DividedPowerAlgebra, DividedPowerElement, Endo,
                                                  random_endo, random_module_element)

LOG = logging.getLogger(__name__)


class SemidirectElement:
    """
    Pair (f, A) of the semidirect sum of the divided-power module and its endomorphisms,
    with bracket [(f, A), (f', A')] = (A f' - A' f, [A, A']).
    """

    def __init__(self, f: DividedPowerElement, A: Endo):
        f.algebra.check_same(A.algebra)
        self.f = f
        self.A = A

    @property
    def algebra(self) -> DividedPowerAlgebra:
        return self.f.algebra

    def bracket(self, other: "SemidirectElement") -> "SemidirectElement":
        return semidirect_bracket(self, other)

    def is_zero(self) -> bool:
        return self.f.is_zero() and self.A.is_zero()

    def __add__(self, other):
        return SemidirectElement(self.f + other.f, self.A + other.A)

    def __sub__(self, other):
        return SemidirectElement(self.f - other.f, self.A - other.A)

    def __neg__(self):
        return SemidirectElement(-self.f, -self.A)

    def scale(self, factor: Union[int, FpScalar]) -> "SemidirectElement":
        return SemidirectElement(self.f.scale(factor), self.A.scale(factor))

    def flat(self) -> np.ndarray:
        """
        All coordinates as one vector, module part first.
        """
        return np.concatenate([self.f.data.ravel(), self.A.data.ravel()])

    def __eq__(self, other):
        if not isinstance(other, SemidirectElement):
            return NotImplemented
        return self.f == other.f and self.A == other.A

    def __repr__(self):
        return "({f!r}, {a!r})".format(f=self.f, a=self.A)


def semidirect_bracket(u: SemidirectElement, v: SemidirectElement) -> SemidirectElement:
    """
    [(f, A), (f', A')] = (A f' - A' f, A A' - A' A).
    Raises ContextMismatchError for elements over different divided-power algebras.
    """
    u.algebra.check_same(v.algebra)
    return SemidirectElement(u.A.apply(v.f) - v.A.apply(u.f), u.A.bracket(v.A))


def iterated_bracket(u: SemidirectElement, v: SemidirectElement, times: int) -> SemidirectElement:
    """
    Left-normed [u, v, ..., v] with ``times`` copies of v.
    """
    for _ in range(times):
        u = semidirect_bracket(u, v)
    return u


def proportionality(u: SemidirectElement, v: SemidirectElement) -> FpScalar:
    """
    The scalar b with u = b v, read off the first nonzero coordinate of v.
    Raises MathematicalAssertionError when u is not an F_p-multiple of v.
    """
    ctx = u.algebra.ctx
    vector_u = u.flat()
    vector_v = v.flat()
    nonzero = np.nonzero(vector_v)[0]
    if len(nonzero) == 0:
        if vector_u.any():
            raise MathematicalAssertionError("Nonzero element is not a multiple of zero")
        return ctx.zero()
    index = nonzero[0]
    factor = int(vector_u[index]) * ctx.inverse(int(vector_v[index])) % ctx.p
    if not np.array_equal(vector_u, vector_v * factor % ctx.p):
        raise MathematicalAssertionError("Elements are not proportional",
                                         {"coordinate": int(index), "factor": factor})
    return FpScalar(factor, ctx)


def make_generators(p: int, c: int, m: int, n: int,
                    t_degree_cap: int = DEFAULT_T_DEGREE_CAP) -> Tuple[SemidirectElement, SemidirectElement]:
    """
    The generators z = (0, Z) and e_n = (x^(q+m-n), t x^(q-n) I) for 0 < m < n <= q,
    where x^(k) I stands for multiplication by x^(k).

    Examples
    --------

    >>> z, e_2 = make_generators(3, 2, 1, 2)
    >>> e_2.f.support()
    [(8, 0)]

    :param p: prime
    :param c: q = p^c
    :param m: 0 < m < n
    :param n: type of the generated subalgebra, n <= q
    :param t_degree_cap: bound on the t-degree of all coefficients, at least 2
    :return: (z, e_n)
    """
    algebra = DividedPowerAlgebra(p, c, t_degree_cap)
    q = algebra.q
    if not 0 < m < n <= q:
        raise ValueError("Expected 0 < m < n <= q, got m={m:d}, n={n:d}, q={q:d}".format(m=m, n=n, q=q))
    z = SemidirectElement(algebra.zero(), algebra.z_operator())
    e_n = SemidirectElement(algebra.monomial(q + m - n),
                            algebra.multiplication(algebra.monomial(q - n, t_power=1)))
    return z, e_n


def graded_degree(el: Union[SemidirectElement, DividedPowerElement], m: int) -> int:
    """
    Degree rq + m + j of the module monomial t^r x^(q-j), 0 < j <= q.

    Examples
    --------

    >>> algebra = DividedPowerAlgebra(5, 2)
    >>> graded_degree(algebra.monomial(0), 1)  # e_{q+m} = (1, 0)
    26
    """
    if isinstance(el, SemidirectElement):
        if not el.A.is_zero():
            raise ValueError("Only elements of the module part are graded monomials")
        el = el.f
    support = el.support()
    if len(support) != 1:
        raise ValueError("Expected a monomial, got {el!r}".format(el=el))
    i, r = support[0]
    q = el.algebra.q
    return r * q + m + (q - i)


def monomial_of_degree(algebra: DividedPowerAlgebra, degree: int, m: int) -> SemidirectElement:
    """
    (t^r x^(q-j), 0) with rq + m + j = degree and 0 < j <= q.
    """
    r, j = divmod(degree - m - 1, algebra.q)
    j += 1
    if r < 0:
        raise ValueError("Degree {d:d} is below the module part".format(d=degree))
    return SemidirectElement(algebra.monomial(algebra.q - j, t_power=r), algebra.zero_endo())


def _independent(vectors: List[np.ndarray], candidate: np.ndarray, p: int) -> bool:
    if not candidate.any():
        return False
    return rank_mod_p(np.array(vectors + [candidate]), p) > len(vectors)


def lie_closure(generators: Sequence[SemidirectElement], max_dimension: int = 500,
                verbose: bool = False) -> List[SemidirectElement]:
    """
    Basis of the F_p-Lie algebra generated by the given elements, obtained by bracketing until the span stabilises.
    """
    if not generators:
        return []
    p = generators[0].algebra.p
    basis: List[SemidirectElement] = []
    vectors: List[np.ndarray] = []
    queue = list(generators)
    while queue:
        element = queue.pop(0)
        vector = element.flat()
        if not _independent(vectors, vector, p):
            continue
        basis.append(element)
        vectors.append(vector)
        if len(basis) > max_dimension:
            raise ValueError("Lie closure exceeds dimension {d:d}".format(d=max_dimension))
        queue.extend(semidirect_bracket(other, element) for other in basis[:-1])
        if verbose:
            LOG.info("Lie closure: dimension %d, %d elements queued", len(basis), len(queue))
    return basis


def derived_subalgebra(basis: Sequence[SemidirectElement]) -> List[SemidirectElement]:
    """
    Basis of the span of all brackets of pairs of basis elements.
    """
    if not basis:
        return []
    p = basis[0].algebra.p
    spanning: List[SemidirectElement] = []
    vectors: List[np.ndarray] = []
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            element = semidirect_bracket(basis[a], basis[b])
            vector = element.flat()
            if _independent(vectors, vector, p):
                spanning.append(element)
                vectors.append(vector)
    return spanning


def metabelian_check(generators: Sequence[SemidirectElement]) -> Tuple[int, bool]:
    """
    Dimension of the Lie algebra generated by ``generators`` and whether its second derived algebra vanishes.
    """
    basis = lie_closure(generators)
    derived = derived_subalgebra(basis)
    return len(basis), len(derived_subalgebra(derived)) == 0


def random_semidirect_element(algebra: DividedPowerAlgebra, rng: np.random.Generator,
                              t_degree: Optional[int] = None) -> SemidirectElement:
    return SemidirectElement(random_module_element(algebra, rng, t_degree), random_endo(algebra, rng, t_degree))


def jacobi_sum(u: SemidirectElement, v: SemidirectElement, w: SemidirectElement) -> SemidirectElement:
    """
    [[u,v],w] + [[v,w],u] + [[w,u],v]; zero in any Lie algebra.
    """
    return semidirect_bracket(semidirect_bracket(u, v), w) + semidirect_bracket(semidirect_bracket(v, w), u) + \
        semidirect_bracket(semidirect_bracket(w, u), v)
