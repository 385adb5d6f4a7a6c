#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import logging
from typing import Any, Dict, List, Optional

import numpy as np

from nmbu.maxclass.arith.field import FpContext, is_power_of
from nmbu.maxclass.common import MathematicalAssertionError
from nmbu.maxclass.sequence.beta import BetaSequence, gamma_table_from_values
from nmbu.maxclass.sequence.constituents import ConstituentReport, constituents
from nmbu.maxclass.sequence.jacobi import eih_terms, jacobi_verify, violation_at_depth

LOG = logging.getLogger(__name__)

DEFAULT_SEARCH_DEPTH = 20
DEFAULT_SEARCH_BUDGET = 20000


class SearchReport:
    """
    Outcome of search_sequences.

    - prefixes: feasible prefixes reaching the requested depth, in lexicographic order
    - reports: ConstituentReport of each prefix
    - nodes: number of entries tried
    - dead_ends: number of prefixes below the depth that admit no value for the next entry.
      Only the count is kept; the dead-end prefixes themselves are not stored
    - partial: the budget ran out before the search tree was exhausted
    - menu_evidence: the prefixes with ell > 4p and 2 ell + n <= depth, whose ell was checked to be 2q or
      an even value in (q, q+n] for a power q of p; a prefix failing the check raises MathematicalAssertionError
    """

    def __init__(self, p: int, n: int, depth: int, budget: int):
        self.p = p
        self.n = n
        self.depth = depth
        self.budget = budget
        self.prefixes: List[BetaSequence] = []
        self.reports: List[ConstituentReport] = []
        self.nodes = 0
        self.dead_ends = 0
        self.partial = False
        self.menu_evidence: List[Dict[str, Any]] = []

    def ells(self) -> List[Optional[int]]:
        return [report.ell for report in self.reports]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p, "n": self.n, "depth": self.depth, "budget": self.budget,
            "nodes": self.nodes, "dead_ends": self.dead_ends, "partial": self.partial,
            "prefixes": [{"betas": seq.values(), "constituents": report.to_dict()}
                         for seq, report in zip(self.prefixes, self.reports)],
            "menu_evidence": self.menu_evidence,
        }

    def __str__(self):
        return "{c:d} feasible prefixes to depth {d:d}, {nodes:d} nodes, {dead:d} dead ends{partial}".format(
            c=len(self.prefixes), d=self.depth, nodes=self.nodes, dead=self.dead_ends,
            partial=" (partial)" if self.partial else "")


def in_first_length_menu(ell: int, p: int, n: int) -> bool:
    """
    ell = 2q, or ell even with q < ell <= q + n, for some power q of p.
    """
    if ell % 2:
        return False
    if is_power_of(ell // 2, p):
        return True
    return any(is_power_of(q, p) for q in range(max(ell - n, 2), ell))


def _forced_values(values: np.ndarray, n: int, p: int, d: int) -> Optional[List[int]]:
    """
    Values of beta_d allowed by the linear constraints E(i, h) with beta_{n+h} = 0 and i + h + n = d.
    Returns None when no constraint applies, [] when they are contradictory.
    """
    ctx = FpContext.of(p)
    forced: Optional[int] = None
    for h in range(1, d - 2 * n):
        if values[h]:
            continue
        i = d - h - n
        coefficient, constant = eih_terms(values, n, p, i, h)
        if coefficient == 0:
            if constant != 0:
                return []
            continue
        value = -constant * ctx.inverse(coefficient) % p
        if forced is not None and forced != value:
            return []
        forced = value
    return None if forced is None else [forced]


class _Search:

    def __init__(self, p: int, n: int, depth: int, budget: int, normalize: bool, verbose: bool):
        self.p = p
        self.n = n
        self.depth = depth
        self.normalize = normalize
        self.verbose = verbose
        self.report = SearchReport(p, n, depth, budget)
        self.values = np.zeros(depth - n + 1, dtype=np.int64)

    def run(self, start: int, all_zero: bool) -> SearchReport:
        if start > self.depth:
            self._emit()
        else:
            self._extend(start, all_zero)
        return self.report

    def _candidates(self, d: int, all_zero: bool) -> List[int]:
        forced = _forced_values(self.values, self.n, self.p, d)
        if forced is not None:
            return forced
        if self.normalize and all_zero:
            return [0, 1]
        return list(range(self.p))

    def _extend(self, d: int, all_zero: bool) -> bool:
        """
        Tries every value of beta_d; returns False once the budget is spent.
        """
        report = self.report
        extended = False
        for value in self._candidates(d, all_zero):
            if report.nodes >= report.budget:
                report.partial = True
                return False
            report.nodes += 1
            self.values[d - self.n] = value
            table = gamma_table_from_values(self.values[:d - self.n + 1], self.n, self.p)
            violation, _, _ = violation_at_depth(table, self.n, self.p, d)
            if violation is not None:
                continue
            extended = True
            if d == self.depth:
                self._emit()
            elif not self._extend(d + 1, all_zero and value == 0):
                self.values[d - self.n] = 0
                return False
        self.values[d - self.n] = 0
        if not extended:
            report.dead_ends += 1
        if self.verbose and report.nodes and report.nodes % 1000 == 0:
            LOG.info("Search: %d nodes, %d prefixes", report.nodes, len(report.prefixes))
        return True

    def _emit(self) -> None:
        seq = BetaSequence(self.p, self.n, self.values[1:])
        report = constituents(seq)
        ell = report.ell
        if ell is not None:
            if ell % 2:
                raise MathematicalAssertionError("Feasible prefix with odd first constituent length",
                                                 {"ell": ell, "betas": seq.values()})
            if ell > 4 * self.p and 2 * ell + self.n <= self.depth:
                if not in_first_length_menu(ell, self.p, self.n):
                    raise MathematicalAssertionError("Feasible prefix with first constituent length {l:d} outside "
                                                     "2q and the even values in (q, q+n]".format(l=ell),
                                                     {"ell": ell, "betas": seq.values()})
                self.report.menu_evidence.append({"ell": ell, "in_menu": True})
        self.report.prefixes.append(seq)
        self.report.reports.append(report)


def search_sequences(p: int, n: int, depth: int = DEFAULT_SEARCH_DEPTH, budget: int = DEFAULT_SEARCH_BUDGET, *,
                     seed: Optional[BetaSequence] = None, normalize: bool = True,
                     verbose: bool = False) -> SearchReport:
    """
    Depth-first enumeration of the prefixes (beta_{n+1}, ..., beta_depth) over F_p passing every
    antisymmetry and Jacobi constraint up to the depth.

    Values are tried in the order 0, 1, ..., p-1. Before branching, the linear constraints E(i, h)
    force beta_d whenever their coefficient is nonzero. With ``normalize`` the first nonzero entry is 1.

    Examples
    --------

    >>> ells = search_sequences(3, 2, 8).ells()
    >>> None in ells and 4 in ells
    True

    :param p: odd prime
    :param n: type, at least 2
    :param depth: highest index of the prefixes
    :param budget: maximum number of entries tried; on exhaustion the report is flagged partial
    :param seed: known prefix to extend, checked with jacobi_verify first
    :param normalize: quotient by rescaling of e_n
    :param verbose: log progress at INFO level
    :return: SearchReport
    :raises MathematicalAssertionError: a feasible prefix has an odd ell, or an ell > 4p outside the first-length menu
    """
    ctx = FpContext.of(p)
    if p == 2:
        raise ValueError("Expected an odd prime, got 2")
    if n < 2:
        raise ValueError("Expected type n >= 2, got {n:d}".format(n=n))
    if depth <= n:
        raise ValueError("Depth must exceed n={n:d}, got {d:d}".format(n=n, d=depth))
    if budget < 1:
        raise ValueError("Budget must be positive, got {b:d}".format(b=budget))

    search = _Search(ctx.p, n, depth, budget, normalize, verbose)
    start = n + 1
    all_zero = True
    if seed is not None:
        if seed.p != p or seed.n != n:
            raise ValueError("Seed of type {sn:d} over F_{sp:d} does not match type {n:d} over F_{p:d}".format(
                sn=seed.n, sp=seed.p, n=n, p=p))
        if seed.depth > depth:
            raise ValueError("Seed depth {s:d} exceeds the search depth {d:d}".format(s=seed.depth, d=depth))
        verdict = jacobi_verify(seed)
        if not verdict.passed:
            raise MathematicalAssertionError("Seed prefix violates the Jacobi identity", verdict.first_violation)
        if normalize:
            seed = seed.normalized()
        search.values[1:len(seed) + 1] = seed.array
        start = seed.depth + 1
        all_zero = seed.is_zero()

    report = search.run(start, all_zero)
    LOG.debug("%s", report)
    if verbose:
        LOG.info("%s", report)
    return report
