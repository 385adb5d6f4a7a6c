#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import logging
from typing import Any, Dict, Optional, Tuple

import numpy as np

from nmbu.maxclass.arith.field import FpScalar, lucas_binom
from nmbu.maxclass.common import DepthExceededError
from nmbu.maxclass.sequence.beta import BetaSequence, bracket_coeff, gamma_table

LOG = logging.getLogger(__name__)


class JacobiReport:
    """
    Outcome of jacobi_verify.

    - passed: bool
    - depth: highest index whose constraints were checked
    - pairs: number of antisymmetry checks
    - triples: number of Jacobi triples checked
    - first_violation: None, or a dict with kind ('antisymmetry' | 'jacobi'), the indices, the residual
      and the depth at which the constraint first becomes checkable
    """

    def __init__(self, depth: int):
        self.depth = depth
        self.pairs = 0
        self.triples = 0
        self.first_violation: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.first_violation is None

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "depth": self.depth, "pairs": self.pairs, "triples": self.triples,
                "first_violation": self.first_violation}

    def __str__(self):
        if self.passed:
            return "Jacobi: passed to depth {d:d} ({p:d} pairs, {t:d} triples)".format(
                d=self.depth, p=self.pairs, t=self.triples)
        return "Jacobi: failed at {w}".format(w=self.first_violation)


def violation_at_depth(table: np.ndarray, n: int, p: int, d: int) -> Tuple[Optional[Dict[str, Any]], int, int]:
    """
    Checks the constraints whose highest sequence index is d: antisymmetry gamma_{a,b} = -gamma_{b,a}
    for a + b = d + n, and the Jacobi identity on e_a, e_b, e_c for a <= b <= c, a + b + c = d + n.

    ``table`` is a structure-constant table covering depth d (see gamma_table).
    Returns (first violation or None, pairs checked, triples checked).
    """
    s = d + n
    g = table
    a = np.arange(n, s // 2 + 1)
    b = s - a
    residual = (g[a - n, b - n] + g[b - n, a - n]) % p
    pairs = len(a)
    bad = np.nonzero(residual)[0]
    if len(bad):
        k = bad[0]
        return {"kind": "antisymmetry", "a": int(a[k]), "b": int(b[k]), "residual": int(residual[k]),
                "depth": d}, pairs, 0

    triples = 0
    for a in range(n, s // 3 + 1):
        b = np.arange(a, (s - a) // 2 + 1)
        if len(b) == 0:
            continue
        c = s - a - b
        # [e_a,[e_b,e_c]] = [[e_a,e_b],e_c] - [[e_a,e_c],e_b]
        residual = (g[b - n, c - n] * g[a - n, b + c - n]
                    - g[a - n, b - n] * g[a + b - n, c - n]
                    + g[a - n, c - n] * g[a + c - n, b - n]) % p
        triples += len(b)
        bad = np.nonzero(residual)[0]
        if len(bad):
            k = bad[0]
            return {"kind": "jacobi", "a": a, "b": int(b[k]), "c": int(c[k]), "residual": int(residual[k]),
                    "depth": d}, pairs, triples
    return None, pairs, triples


def jacobi_verify(seq: BetaSequence, depth: Optional[int] = None, verbose: bool = False) -> JacobiReport:
    """
    Checks antisymmetry and the Jacobi identity on all basis triples e_a, e_b, e_c (a, b, c >= n)
    whose structure constants are known up to ``depth``, scanning by increasing depth and stopping
    at the first violation.

    Examples
    --------

    >>> jacobi_verify(BetaSequence(3, 2, [1] * 20)).passed
    True

    :param seq: BetaSequence
    :param depth: highest index to check, defaults to the depth of the sequence
    :param verbose: log progress at INFO level
    :return: JacobiReport
    """
    depth = seq.depth if depth is None else depth
    if depth > seq.depth:
        raise DepthExceededError("Sequence is known to depth {k:d}, {d:d} requested".format(k=seq.depth, d=depth))
    table = gamma_table(seq.prefix(depth))
    report = JacobiReport(depth)
    for d in range(seq.n + 1, depth + 1):
        violation, pairs, triples = violation_at_depth(table, seq.n, seq.p, d)
        report.pairs += pairs
        report.triples += triples
        if violation is not None:
            report.first_violation = violation
            LOG.debug("Jacobi violation %s", violation)
            break
    if verbose:
        LOG.info("%s", report)
    return report


def eih_terms(values: np.ndarray, n: int, p: int, i: int, h: int) -> Tuple[int, int]:
    """
    E(i,h) as c * beta_{i+h+n} + e with c and e depending only on entries below index i+h+n.
    ``values[k]`` holds beta_{n+k}, values[0] = 0, known at least to index i+h+n-1.
    """
    first = 0
    rest = 0
    for g in range(h + 1):
        sign = 1 if g % 2 == 0 else -1
        binom = lucas_binom(h, g, p)
        first += sign * binom * int(values[i + g - n])
        if g < h:
            rest += sign * binom * int(values[i + n + g - n])
    beta_i = int(values[i - n])
    top_sign = 1 if h % 2 == 0 else -1
    return (first - top_sign * beta_i) % p, (-beta_i * rest) % p


def eih_residual(seq: BetaSequence, i: int, h: int) -> Optional[FpScalar]:
    """
    E(i,h) = beta_{i+h+n} * sum_g (-1)^g C(h,g) beta_{i+g} - beta_i * sum_g (-1)^g C(h,g) beta_{i+n+g},
    the coefficient of [e_i, [e_{n+h}, e_n]], which vanishes when beta_{n+h} = 0.

    Examples
    --------

    >>> eih_residual(BetaSequence(5, 2, [0, 0, 1, 0, 0, 1]), 5, 1)
    2 (mod 5)

    :return: the residual, or None when i+h+n exceeds the depth
    """
    n = seq.n
    if i <= n or h < 1:
        raise ValueError("Expected i > n and h > 0, got i={i:d}, h={h:d}".format(i=i, h=h))
    if i + h + n > seq.depth:
        return None
    if seq.value(n + h) != 0:
        raise ValueError("E({i:d},{h:d}) is a constraint only when beta_{k:d} = 0".format(i=i, h=h, k=n + h))
    coefficient, constant = eih_terms(seq.extended_values(), n, seq.p, i, h)
    return FpScalar(coefficient * seq.value(i + h + n) + constant, seq.ctx)


def z_jacobi_residual(seq: BetaSequence, a: int, b: int) -> Optional[FpScalar]:
    """
    gamma_{a,b} - gamma_{a+1,b} - gamma_{a,b+1}: the Jacobi identity on e_a, e_b, z.
    Zero by the Pascal recurrence of the binomial coefficients; None when not known to depth.
    """
    terms = [bracket_coeff(seq, a, b), bracket_coeff(seq, a + 1, b), bracket_coeff(seq, a, b + 1)]
    if any(t is None for t in terms):
        return None
    return terms[0] - terms[1] - terms[2]
