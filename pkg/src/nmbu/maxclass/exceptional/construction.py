#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import logging
from typing import Any, Dict, List, Optional

from sympy import isprime

from nmbu.maxclass.common import HypothesisViolationError, MathematicalAssertionError
from nmbu.maxclass.divided_powers.algebra import DividedPowerAlgebra
from nmbu.maxclass.divided_powers.semidirect import (SemidirectElement, graded_degree, make_generators,
                                                     monomial_of_degree, proportionality, semidirect_bracket)
from nmbu.maxclass.sequence.beta import BetaSequence

LOG = logging.getLogger(__name__)

THEOREM_MODE = "theorem"
CONSTRUCTION_MODE = "construction"


class ExceptionalParams:
    """
    Parameters (p, c, m, n) of the algebra generated by z = (0, Z) and e_n = (x^(q+m-n), t x^(q-n) I).

    - construction mode: p odd prime, c >= 1, 0 < m < p, m < n <= q
    - theorem mode additionally: 1 < n < p and q > p

    Examples
    --------

    >>> params = ExceptionalParams(5, 2, 1, 2, mode="theorem")
    >>> params.q, params.default_depth
    (25, 79)
    """

    def __init__(self, p: int, c: int, m: int, n: int, mode: str = CONSTRUCTION_MODE):
        if not isprime(p) or p == 2:
            raise ValueError("p={p} is not an odd prime".format(p=p))
        if c < 1:
            raise ValueError("Exponent c must be positive, got {c}".format(c=c))
        if mode not in (THEOREM_MODE, CONSTRUCTION_MODE):
            raise ValueError("Unknown mode '{m}'".format(m=mode))
        q = p ** c
        if not 0 < m < p:
            raise ValueError("Expected 0 < m < p={p:d}, got m={m:d}".format(p=p, m=m))
        if not m < n <= q:
            raise ValueError("Expected m < n <= q, got m={m:d}, n={n:d}, q={q:d}".format(m=m, n=n, q=q))
        if mode == THEOREM_MODE and not (1 < n < p and q > p):
            raise HypothesisViolationError(
                "Theorem mode needs 1 < n < p and q > p, got p={p:d}, q={q:d}, n={n:d}".format(p=p, q=q, n=n))
        self.p = p
        self.c = c
        self.q = q
        self.m = m
        self.n = n
        self.mode = mode

    @property
    def default_depth(self) -> int:
        return 3 * self.q + 2 * self.n

    @property
    def genfunc_applicable(self) -> bool:
        return 2 * self.n <= self.q + self.m

    def parent(self) -> "ExceptionalParams":
        """
        The type-(m+1) algebra whose subalgebra generated by z and e_n this algebra is.
        """
        return ExceptionalParams(self.p, self.c, self.m, self.m + 1)

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "c": self.c, "q": self.q, "m": self.m, "n": self.n, "mode": self.mode}

    def __repr__(self):
        return "ExceptionalParams(p={p:d}, c={c:d}, m={m:d}, n={n:d}, mode={mode})".format(
            p=self.p, c=self.c, m=self.m, n=self.n, mode=self.mode)


class ConstructedAlgebra:
    """
    Result of construct: z, the basis elements e_j for n <= j <= depth + n, and the extracted sequence.
    """

    def __init__(self, params: ExceptionalParams, depth: int, z: SemidirectElement,
                 elements: Dict[int, SemidirectElement], sequence: BetaSequence):
        self.params = params
        self.depth = depth
        self.z = z
        self.elements = elements
        self.sequence = sequence

    @property
    def algebra(self) -> DividedPowerAlgebra:
        return self.z.algebra

    def e(self, j: int) -> SemidirectElement:
        if j not in self.elements:
            raise ValueError("e_{j:d} was not constructed (range {lo:d}..{hi:d})".format(
                j=j, lo=self.params.n, hi=self.depth + self.params.n))
        return self.elements[j]


def t_degree_cap_for(params: ExceptionalParams, depth: int) -> int:
    return max(3, (depth + params.n) // params.q + 3)


def expected_element(algebra: DividedPowerAlgebra, j: int, m: int) -> SemidirectElement:
    """
    e_j = (x^(q+m-j), t x^(q-j) I) for m < j <= q + m, the second entry read as zero for j > q,
    and e_{rq+m+j} = (t^r x^(q-j), 0) for r > 0, 0 < j <= q.
    """
    q = algebra.q
    if j <= m:
        raise ValueError("e_{j:d} is not defined for j <= m={m:d}".format(j=j, m=m))
    if j > q + m:
        return monomial_of_degree(algebra, j, m)
    A = algebra.multiplication(algebra.monomial(q - j, t_power=1)) if j <= q else algebra.zero_endo()
    return SemidirectElement(algebra.monomial(q + m - j), A)


def construct(params: ExceptionalParams, depth: Optional[int] = None, verbose: bool = False) -> ConstructedAlgebra:
    """
    Builds e_j = [e_{j-1}, z] from e_n up to index depth + n, checks every e_j against its closed form
    and reads off beta_i from [e_i, e_n] = beta_i e_{i+n} for n < i <= depth.

    Examples
    --------

    >>> algebra = construct(ExceptionalParams(5, 2, 1, 2), 30)
    >>> algebra.sequence.beta(25), algebra.sequence.beta(26)
    (2 (mod 5), 4 (mod 5))

    :param params: ExceptionalParams
    :param depth: highest index of the sequence, defaults to 3q + 2n
    :param verbose: log progress at INFO level
    :return: ConstructedAlgebra
    """
    depth = params.default_depth if depth is None else depth
    n, m = params.n, params.m
    if depth <= n:
        raise ValueError("Depth must exceed n={n:d}, got {d:d}".format(n=n, d=depth))
    z, e_n = make_generators(params.p, params.c, m, n, t_degree_cap_for(params, depth))
    algebra = z.algebra

    elements = {n: e_n}
    for j in range(n, depth + n + 1):
        if j > n:
            elements[j] = semidirect_bracket(elements[j - 1], z)
        expected = expected_element(algebra, j, m)
        if elements[j] != expected:
            raise MathematicalAssertionError("e_{j:d} differs from its closed form".format(j=j),
                                             {"j": j, "got": repr(elements[j]), "expected": repr(expected)})
        if verbose and j % params.q == 0:
            LOG.info("Constructed e_%d of %d", j, depth + n)

    betas: List[int] = []
    for i in range(n + 1, depth + 1):
        bracket = semidirect_bracket(elements[i], e_n)
        try:
            betas.append(proportionality(bracket, elements[i + n]).value)
        except MathematicalAssertionError as exc:
            raise MathematicalAssertionError("[e_{i:d}, e_{n:d}] is not a multiple of e_{k:d}".format(
                i=i, n=n, k=i + n), {"i": i, "n": n, **exc.witness}) from exc
    sequence = BetaSequence(params.p, n, betas)
    LOG.debug("Constructed %r to depth %d", params, depth)
    return ConstructedAlgebra(params, depth, z, elements, sequence)


def derivation_degree_check(constructed: ConstructedAlgebra) -> bool:
    """
    On the module part (indices past q + m), bracketing with z raises the degree by 1
    and a nonzero bracket with e_n raises it by n.
    """
    params = constructed.params
    m, n = params.m, params.n
    top = constructed.depth + n
    for j in range(params.q + m + 1, top + 1):
        element = constructed.e(j)
        if graded_degree(element, m) != j:
            return False
        if j < top and graded_degree(semidirect_bracket(element, constructed.z), m) != j + 1:
            return False
        if j + n <= top:
            bracket = semidirect_bracket(element, constructed.e(n))
            if not bracket.is_zero() and graded_degree(bracket, m) != j + n:
                return False
    return True
