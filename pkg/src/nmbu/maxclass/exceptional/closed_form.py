#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from typing import Dict, List

from nmbu.maxclass.arith.field import lucas_binom
from nmbu.maxclass.common import HypothesisViolationError
from nmbu.maxclass.exceptional.construction import ExceptionalParams
from nmbu.maxclass.polycheck.xpoly import XPoly, x_minus_one_power
from nmbu.maxclass.sequence.beta import BetaSequence
from nmbu.maxclass.sequence.genfunc import RationalSeries


def _binom(a: int, b: int, p: int) -> int:
    return lucas_binom(a, b, p) if 0 <= b <= a else 0


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def first_constituent_closed_form(params: ExceptionalParams) -> List[int]:
    """
    Entry j holds beta_{q+m-j} = (-1)^j ((-1)^m C(n-1-m, j-m) - C(n-1, j)), 0 <= j < n.

    Examples
    --------

    >>> first_constituent_closed_form(ExceptionalParams(5, 2, 1, 2))
    [4, 2]
    """
    p, m, n = params.p, params.m, params.n
    return [_sign(j) * (_sign(m) * _binom(n - 1 - m, j - m, p) - _binom(n - 1, j, p)) % p for j in range(n)]


def later_constituents_closed_form(params: ExceptionalParams, r: int) -> Dict[int, int]:
    """
    beta_i keyed by i for rq + m < i <= rq + q + m, r >= 1:
    beta_{rq+q+m-j} = (-1)^(j+1) C(n-1, j) for 0 <= j < n and zero below.

    Examples
    --------

    >>> entries = later_constituents_closed_form(ExceptionalParams(5, 2, 1, 2), 2)
    >>> min(entries), max(entries), entries[75], entries[76]
    (52, 76, 1, 4)
    """
    if r < 1:
        raise ValueError("Expected r >= 1, got {r:d}".format(r=r))
    p, q, m, n = params.p, params.q, params.m, params.n
    top = r * q + q + m
    entries = {i: 0 for i in range(r * q + m + 1, top + 1)}
    for j in range(n):
        entries[top - j] = _sign(j + 1) * _binom(n - 1, j, p) % p
    return entries


def closed_form_sequence(params: ExceptionalParams, depth: int) -> BetaSequence:
    """
    Sequence to the given depth assembled from both closed forms; zero on n < i <= q - n + m.
    """
    q, m, n = params.q, params.m, params.n
    values = {}
    for j, value in enumerate(first_constituent_closed_form(params)):
        values[q + m - j] = value
    r = 1
    while r * q + m < depth:
        values.update(later_constituents_closed_form(params, r))
        r += 1
    return BetaSequence(params.p, n, [values.get(i, 0) for i in range(n + 1, depth + 1)])


def genfunc_closed_form(params: ExceptionalParams) -> RationalSeries:
    """
    sum_{i>n} beta_i X^i = X^(q+m+1-n) (X-1)^(n-m-1) - X^(q+m+1-n) (X-1)^(n-1) / (1 - X^q),
    valid for 0 < m < p and m < n <= (q+m)/2.

    Examples
    --------

    >>> series = genfunc_closed_form(ExceptionalParams(5, 2, 1, 2))
    >>> [series.expand(51).coeff(i).value for i in (25, 26, 50, 51)]
    [2, 4, 1, 4]
    """
    if not params.genfunc_applicable:
        raise HypothesisViolationError("The generating function needs m < n <= (q+m)/2, got q={q:d}, m={m:d}, "
                                       "n={n:d}".format(q=params.q, m=params.m, n=params.n))
    p, q, m, n = params.p, params.q, params.m, params.n
    lead = XPoly.monomial(q + m + 1 - n, p)
    one_minus_xq = XPoly.one(p) - XPoly.monomial(q, p)
    numerator = lead * x_minus_one_power(n - m - 1, p) * one_minus_xq - lead * x_minus_one_power(n - 1, p)
    return RationalSeries(numerator, one_minus_xq)


def binomial_rewrite_check(params: ExceptionalParams) -> bool:
    """
    C(q-n+j, j-m) = (-1)^(j-m) C(n-1-m, j-m) and C(q-n+j, q-n) = (-1)^j C(n-1, n-1-j) mod p for 0 <= j < n.
    """
    p, q, m, n = params.p, params.q, params.m, params.n
    for j in range(n):
        if (_binom(q - n + j, j - m, p) - _sign(j - m) * _binom(n - 1 - m, j - m, p)) % p:
            return False
        if (_binom(q - n + j, q - n, p) - _sign(j) * _binom(n - 1, n - 1 - j, p)) % p:
            return False
    return True
