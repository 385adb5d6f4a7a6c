#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from typing import Any, Dict, List, Optional

import numpy as np

from nmbu.maxclass.arith.field import lucas_binom
from nmbu.maxclass.common import DepthExceededError, HypothesisViolationError, MathematicalAssertionError
from nmbu.maxclass.polycheck.xpoly import XPoly, x_minus_one_power
from nmbu.maxclass.sequence.beta import AlphaSequence, BetaSequence, gamma_table

ELL_EVEN = "ell_even"
UPPER_BOUND = "upper_bound"
CONSTITUENT_BOUND = "constituent_bound"


class Constituent:
    """
    A block (beta_start, ..., beta_end) of the sequence.

    - start, end: indices of the first and last entry
    - length: number of entries, increased by n for the first constituent; None while the
      leading term lies past the known depth
    - entries: the known entries as residues
    - leading, trailing: indices of the first and last nonzero entry
    - ordinary: entries follow beta_{end-i} = (-1)^i C(n-1, i) beta_end
    - complete: every entry is within the known depth
    """

    def __init__(self, start: int, end: Optional[int], length: Optional[int], entries: List[int],
                 leading: Optional[int], trailing: Optional[int], ordinary: Optional[bool], complete: bool):
        self.start = start
        self.end = end
        self.length = length
        self.entries = entries
        self.leading = leading
        self.trailing = trailing
        self.ordinary = ordinary
        self.complete = complete

    def to_dict(self) -> Dict[str, Any]:
        return {"start": self.start, "end": self.end, "length": self.length, "entries": self.entries,
                "leading": self.leading, "trailing": self.trailing, "ordinary": self.ordinary,
                "complete": self.complete}

    def __repr__(self):
        return "Constituent(start={s}, length={l}, leading={lt}, trailing={tt}, ordinary={o}, complete={c})".format(
            s=self.start, l=self.length, lt=self.leading, tt=self.trailing, o=self.ordinary, c=self.complete)


class ConstituentReport:
    """
    Partition of a sequence into constituents, with the first length ell and flags for
    the general length facts (ell even; no run of more than ell-n zeros and every l_r <= ell;
    every l_r >= ell/2) that a genuine non-metabelian algebra must satisfy.
    """

    def __init__(self, n: int, depth: int, constituents: List[Constituent]):
        self.n = n
        self.depth = depth
        self.constituents = constituents
        self.violations: List[Dict[str, Any]] = []

    @property
    def metabelian_within_depth(self) -> bool:
        return not self.constituents

    @property
    def ell(self) -> Optional[int]:
        return self.constituents[0].length if self.constituents else None

    def lengths(self, complete_only: bool = True) -> List[int]:
        return [c.length for c in self.constituents if c.length is not None and (c.complete or not complete_only)]

    def later(self) -> List[Constituent]:
        return [c for c in self.constituents[1:] if c.complete]

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "depth": self.depth, "ell": self.ell,
                "metabelian_within_depth": self.metabelian_within_depth,
                "constituent_lengths": self.lengths(),
                "constituents": [c.to_dict() for c in self.constituents],
                "violations": self.violations}

    def __str__(self):
        if self.metabelian_within_depth:
            return "metabelian within depth {d:d}".format(d=self.depth)
        return "ell={e:d}, lengths={l}".format(e=self.ell, l=self.lengths())


def _is_ordinary(entries: List[int], n: int, p: int) -> bool:
    last = entries[-1]
    if last == 0:
        return False
    for i in range(len(entries)):
        expected = (-1) ** i * lucas_binom(n - 1, i, p) * last % p
        if entries[-1 - i] != expected:
            return False
    return True


def _nonzero_bounds(entries: List[int], start: int):
    positions = [start + k for k, v in enumerate(entries) if v]
    return (positions[0], positions[-1]) if positions else (None, None)


def constituents(seq: BetaSequence) -> ConstituentReport:
    """
    Splits (beta_i)_{n<i<=depth} into constituents.

    The first constituent is (beta_{n+1}, ..., beta_ell) where beta_{ell-n+1} is the first nonzero entry.
    After a constituent ending at beta_j, the next one is (beta_{j+1}, ..., beta_{j+m}) where
    beta_{j+m-n+1} is the first nonzero entry past beta_j. A constituent running past the depth is kept
    and marked incomplete.

    Examples
    --------

    >>> constituents(BetaSequence(5, 2, [1] * 10)).ell
    4

    :param seq: BetaSequence, or AlphaSequence for type 1
    :return: ConstituentReport; an all-zero window gives an empty report, metabelian within depth
    """
    n, p, depth = seq.n, seq.p, seq.depth
    first = seq.first_nonzero()
    report = ConstituentReport(n, depth, [])
    if first is None:
        return report

    values = seq.values()

    def entries_between(lo: int, hi: int) -> List[int]:
        return values[lo - n - 1:min(hi, depth) - n]

    start = n + 1
    end = first + n - 1
    length = end
    while True:
        entries = entries_between(start, end)
        leading, trailing = _nonzero_bounds(entries, start)
        complete = end <= depth
        report.constituents.append(Constituent(start, end, length, entries, leading, trailing,
                                               _is_ordinary(entries, n, p) if complete else None, complete))
        if not complete:
            break
        nonzero = np.nonzero(seq.array[end - n:])[0]
        if len(nonzero) == 0:
            if end < depth:
                entries = entries_between(end + 1, depth)
                report.constituents.append(Constituent(end + 1, None, None, entries, None, None, None, False))
            break
        leading_index = end + 1 + int(nonzero[0])
        start, length = end + 1, leading_index - end + n - 1
        end = end + length

    _flag_violations(seq, report)
    return report


def _flag_violations(seq: BetaSequence, report: ConstituentReport) -> None:
    n = seq.n
    ell = report.ell
    if ell % 2 != 0:
        report.violations.append({"lemma": ELL_EVEN, "ell": ell})
    longest, run = 0, 0
    for v in seq.values():
        run = 0 if v else run + 1
        longest = max(longest, run)
    if longest > ell - n:
        report.violations.append({"lemma": UPPER_BOUND, "zero_run": longest, "ell": ell})
    for r, c in enumerate(report.later(), start=2):
        if c.length > ell:
            report.violations.append({"lemma": UPPER_BOUND, "r": r, "length": c.length, "ell": ell})
        if 2 * c.length < ell:
            report.violations.append({"lemma": CONSTITUENT_BOUND, "r": r, "length": c.length, "ell": ell})


class LcsLengths:
    """
    Constituent lengths read off the powers of L^2: starts[r-1] is the lowest degree in (L^2)^r.
    ``ell`` is None when (L^2)^2 has no element of degree within reach ("no second power within depth").
    """

    def __init__(self, starts: List[int], reach: int, n: int):
        self.starts = starts
        self.reach = reach
        self.n = n

    @property
    def ell(self) -> Optional[int]:
        return self.starts[1] - 1 if len(self.starts) > 1 else None

    def lengths(self) -> List[int]:
        if len(self.starts) < 2:
            return []
        return [self.ell] + [b - a for a, b in zip(self.starts[1:], self.starts[2:])]

    def to_dict(self) -> Dict[str, Any]:
        return {"ell": self.ell, "lengths": self.lengths(), "starts": self.starts, "reach": self.reach}


def constituents_via_lcs(seq: BetaSequence, depth: Optional[int] = None) -> LcsLengths:
    """
    Constituent lengths from the powers of L^2: ell = dim(L^2/(L^2)^2) + n and l_r = dim((L^2)^r/(L^2)^(r+1)).

    Each (L^2)^r is an ideal, hence spanned by all e_i from its lowest degree s_r on; s_1 = n+1 and
    s_{r+1} is the least a + b with a >= s_r, b > n and gamma_{a,b} != 0. Degrees up to depth + n are decided.

    Requires beta_{n+1} = 0: without it the dimension formula fails, as the all-ones sequence shows.
    """
    n = seq.n
    depth = seq.depth if depth is None else depth
    if depth > seq.depth:
        raise DepthExceededError("Sequence is known to depth {k:d}, {d:d} requested".format(k=seq.depth, d=depth))
    if depth > n and seq.value(n + 1) != 0:
        raise HypothesisViolationError(
            "beta_{i:d} != 0: [L^2, L_n] is not contained in L^(n+3), which the length formula needs".format(i=n + 1))
    table = gamma_table(seq.prefix(depth))
    reach = depth + n
    starts = [n + 1]
    while True:
        s = starts[-1]
        found = None
        for d in range(s + n + 1, reach + 1):
            a = np.arange(s, d - n)
            if len(a) and table[a - n, d - a - n].any():
                found = d
                break
        if found is None:
            break
        starts.append(found)
    return LcsLengths(starts, reach, n)


def lcs_agrees(seq: BetaSequence, report: Optional[ConstituentReport] = None) -> bool:
    """
    Compares constituents() and constituents_via_lcs() on the lengths both decide.
    """
    report = constituents(seq) if report is None else report
    lcs = constituents_via_lcs(seq)
    by_sequence = report.lengths()
    by_lcs = lcs.lengths()
    common = min(len(by_sequence), len(by_lcs))
    if report.metabelian_within_depth:
        return lcs.ell is None or lcs.ell > seq.depth
    return by_sequence[:common] == by_lcs[:common]


def bridge_polynomial(seq: BetaSequence, report: ConstituentReport) -> XPoly:
    """
    g(X) = beta_{ell-n+1} X^(n-1) + ... + beta_ell, the last n entries of the first constituent.
    """
    ell, n = report.ell, seq.n
    return XPoly([seq.value(ell - i) for i in range(n)], seq.ctx)


def bridge_check(seq: BetaSequence, report: Optional[ConstituentReport] = None) -> Optional[bool]:
    """
    Checks [X^j](X-1)^(ell-n+1) g(X) = 0 for ell - l_2 < j <= ell - n, with g from bridge_polynomial.
    None when the first two constituents are not both complete.
    """
    report = constituents(seq) if report is None else report
    lengths = report.lengths()
    if len(lengths) < 2:
        return None
    ell, ell_2, n = lengths[0], lengths[1], seq.n
    product = x_minus_one_power(ell - n + 1, seq.ctx) * bridge_polynomial(seq, report)
    return all(product.coeff(j).value == 0 for j in range(ell - ell_2 + 1, ell - n + 1))


def project_type1(alpha: AlphaSequence, n: int, check_ordinary: bool = True) -> BetaSequence:
    """
    Sequence of the type-n subalgebra generated by z and e_n of an uncovered type-1 algebra:
    beta_i = sum_{k<n} (-1)^k C(n-1, k) alpha_{i+k}.

    When every constituent of alpha has length at least n, each beta_i gets a contribution from a single
    alpha_j and all complete constituents of the result are ordinary; ``check_ordinary`` asserts this.

    Examples
    --------

    >>> alpha = AlphaSequence(5, [0, 0, 0, 1, 0, 0])  # alpha_5 = 1
    >>> project_type1(alpha, 2).values()
    [0, 4, 1, 0]

    :return: BetaSequence of type n, known to depth alpha.depth - n + 1
    """
    if n < 2:
        raise ValueError("Projection needs n >= 2, got {n:d}".format(n=n))
    p = alpha.p
    depth = alpha.depth - n + 1
    if depth <= n:
        raise DepthExceededError("alpha known to depth {d:d} is too short for type {n:d}".format(d=alpha.depth, n=n))
    values = alpha.values()
    weights = np.array([(-1) ** k * lucas_binom(n - 1, k, p) for k in range(n)], dtype=np.int64)
    # values[k] holds alpha_{k+2}
    betas = [int(np.dot(weights, values[i - 2:i - 2 + n])) % p for i in range(n + 1, depth + 1)]
    result = BetaSequence(alpha.ctx, n, betas)

    if check_ordinary:
        alpha_report = constituents(alpha)
        if alpha_report.constituents and all(c.length >= n for c in alpha_report.constituents[1:] if c.complete) \
                and alpha_report.ell >= n:
            for c in constituents(result).later():
                if not c.ordinary:
                    raise MathematicalAssertionError(
                        "Projected constituent starting at {s:d} is not ordinary".format(s=c.start),
                        {"start": c.start, "entries": c.entries})
    return result
