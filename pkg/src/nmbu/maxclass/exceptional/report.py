#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import logging
from functools import lru_cache
from typing import Any, Dict, Optional, Tuple

from nmbu.maxclass.common import MathematicalAssertionError
from nmbu.maxclass.divided_powers.semidirect import semidirect_bracket
from nmbu.maxclass.exceptional.closed_form import binomial_rewrite_check, closed_form_sequence, genfunc_closed_form
from nmbu.maxclass.exceptional.construction import (THEOREM_MODE, ConstructedAlgebra, ExceptionalParams, construct,
                                                    derivation_degree_check)
from nmbu.maxclass.polycheck.xpoly import XPoly, x_minus_one_power
from nmbu.maxclass.sequence.beta import BetaSequence
from nmbu.maxclass.sequence.constituents import ConstituentReport, constituents
from nmbu.maxclass.sequence.genfunc import adjoint_series
from nmbu.maxclass.sequence.jacobi import jacobi_verify

LOG = logging.getLogger(__name__)


def _first_difference(first: BetaSequence, second: BetaSequence) -> Optional[int]:
    for i in range(first.n + 1, min(first.depth, second.depth) + 1):
        if first.value(i) != second.value(i):
            return i
    return None


def abelian_ideal_check(params: ExceptionalParams, depth: Optional[int] = None) -> Dict[str, Any]:
    """
    In the type-(m+1) parent algebra, by direct brackets up to the depth:
    [e_i, e_{q+1}] = 0 and [e_i, e_q] = -e_{i+q} for i > q, [e_i, e_j] = 0 for q < i, j <= depth - q;
    and on the sequence: the adjoint series of e_{q+1} is X^m (X-1)^(q-m) + X^m, that of e_q is -1 past X^q.
    """
    parent = params.parent()
    depth = params.default_depth if depth is None else depth
    constructed = construct(parent, depth)
    q, m = parent.q, parent.m
    top = depth + parent.n

    e_q1 = constructed.e(q + 1)
    e_q = constructed.e(q)
    commutes = all(semidirect_bracket(constructed.e(i), e_q1).is_zero() for i in range(q + 1, top + 1))
    minus_shift = all(semidirect_bracket(constructed.e(i), e_q) == -constructed.e(i + q)
                      for i in range(q + 1, top - q + 1))
    abelian = all(semidirect_bracket(constructed.e(i), constructed.e(j)).is_zero()
                  for i in range(q + 1, depth - q + 1) for j in range(i, depth - q + 1))

    seq = constructed.sequence
    expected = XPoly.monomial(m, parent.p) * x_minus_one_power(q - m, parent.p) + XPoly.monomial(m, parent.p)
    series = adjoint_series(seq, q + 1)
    known = depth - (q + 1 - parent.n)
    series_q1 = all(series.coeff(i) == expected.coeff(i) for i in range(parent.n, known + 1))
    series = adjoint_series(seq, q)
    known = depth - (q - parent.n)
    series_q = all(series.coeff(i).value == parent.p - 1 for i in range(q + 1, known + 1))

    result = {"parent": parent.to_dict(), "depth": depth, "ideal_commutes": commutes,
              "e_q_acts_as_minus_shift": minus_shift, "abelian_past_q": abelian,
              "series_e_q_plus_1": series_q1, "series_e_q": series_q}
    result["passed"] = all(result[key] for key in ("ideal_commutes", "e_q_acts_as_minus_shift", "abelian_past_q",
                                                   "series_e_q_plus_1", "series_e_q"))
    return result


def _length_claims(params: ExceptionalParams, report: ConstituentReport) -> Optional[Dict[str, Any]]:
    """
    The first failing length claim, or None: ell = q+m for m odd and q+m+1 for m even,
    later lengths q with the second one q-1 for m even, later constituents ordinary ending in -1.
    """
    q, m, p = params.q, params.m, params.p
    expected_ell = q + m if m % 2 else q + m + 1
    if report.ell != expected_ell:
        return {"claim": "ell", "expected": expected_ell, "got": report.ell}
    for position, constituent in enumerate(report.constituents[1:], start=2):
        if not constituent.complete:
            continue
        expected = q - 1 if (position == 2 and m % 2 == 0) else q
        if constituent.length != expected:
            return {"claim": "length", "constituent": position, "expected": expected, "got": constituent.length}
        if not constituent.ordinary or constituent.entries[-1] != p - 1:
            return {"claim": "ordinary ending in -1", "constituent": position, "start": constituent.start,
                    "entries": constituent.entries}
    return None


def theorem_exceptional_report(params: ExceptionalParams, depth: Optional[int] = None,
                               verbose: bool = False) -> Dict[str, Any]:
    """
    Constructs the algebra and checks it against the closed forms, the generating function,
    the Jacobi identity and the abelian ideal facts; in theorem mode also the constituent lengths
    and the coverage of the even values in (q, q+n] by the first lengths over 0 < m < n.

    Examples
    --------

    >>> report = theorem_exceptional_report(ExceptionalParams(5, 2, 1, 2, mode="theorem"))
    >>> report["ell"], report["constituent_lengths"][:3]
    (26, [26, 25, 25])

    :param params: ExceptionalParams
    :param depth: sequence depth, defaults to 3q + 2n
    :param verbose: log progress at INFO level
    :return: report dict {params, depth, ell, constituent_lengths, genfunc, sequence, even_length_coverage, checks}
    :raises MathematicalAssertionError: any check failed; the witness names the failing checks
    """
    depth = params.default_depth if depth is None else depth
    constructed: ConstructedAlgebra = construct(params, depth, verbose)
    seq = constructed.sequence
    report = constituents(seq)
    if verbose:
        LOG.info("Constituents of %r: %s", params, report)

    witness: Dict[str, Any] = {}
    closed = closed_form_sequence(params, depth)
    mismatch = _first_difference(seq, closed)
    if mismatch is not None:
        witness["closed_form"] = {"index": mismatch, "constructed": seq.value(mismatch),
                                  "closed_form": closed.value(mismatch)}

    genfunc = None
    if params.genfunc_applicable:
        series = genfunc_closed_form(params)
        genfunc = series.to_dict()
        expanded = series.expand(depth)
        expansion = BetaSequence(params.p, params.n, [expanded.coeff(i).value for i in range(params.n + 1, depth + 1)])
        mismatch = _first_difference(seq, expansion)
        if mismatch is not None:
            witness["genfunc"] = {"index": mismatch, "constructed": seq.value(mismatch),
                                  "series": expansion.value(mismatch)}

    jacobi = jacobi_verify(seq, verbose=verbose)
    if not jacobi.passed:
        witness["jacobi"] = jacobi.first_violation
    ideal = abelian_ideal_check(params, depth)
    if not ideal["passed"]:
        witness["ideal"] = ideal
    if not derivation_degree_check(constructed):
        witness["derivation_degrees"] = True
    if not binomial_rewrite_check(params):
        witness["binomial_rewrite"] = True
    lengths = None
    coverage = None
    if params.mode == THEOREM_MODE:
        failure = _length_claims(params, report)
        lengths = failure is None
        if failure is not None:
            witness["lengths"] = failure
        coverage = even_length_coverage(params.p, params.c, params.n)
        if not coverage["covered"]:
            witness["even_length_coverage"] = coverage

    if witness:
        LOG.debug("Failed checks for %r: %s", params, witness)
        raise MathematicalAssertionError("Checks failed for {p!r}: {k}".format(p=params, k=sorted(witness)), witness)

    return {
        "params": params.to_dict(),
        "depth": depth,
        "ell": report.ell,
        "constituent_lengths": report.lengths(),
        "genfunc": genfunc,
        "sequence": seq.values(),
        "even_length_coverage": coverage,
        "checks": {"two_path": True, "jacobi": True, "ideal": True, "derivation_degrees": True,
                   "binomial_rewrite": True, "lengths": lengths,
                   "even_length_coverage": None if coverage is None else True},
    }


@lru_cache(maxsize=None)
def _first_lengths(p: int, c: int, n: int) -> Tuple[Tuple[int, Optional[int]], ...]:
    q = p ** c
    ells = []
    for m in range(1, n):
        params = ExceptionalParams(p, c, m, n, mode=THEOREM_MODE)
        ells.append((m, constituents(construct(params, q + n + 1).sequence).ell))
    return tuple(ells)


def even_length_coverage(p: int, c: int, n: int) -> Dict[str, Any]:
    """
    First constituent lengths of the algebras for 0 < m < n, and whether they cover every even value in (q, q+n].
    """
    q = p ** c
    ells = dict(_first_lengths(p, c, n))
    even = [value for value in range(q + 1, q + n + 1) if value % 2 == 0]
    return {"q": q, "n": n, "ells": ells, "even_values": even, "covered": set(even) <= set(ells.values())}
