#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import itertools
import logging
import re
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, IO, Iterable, List, Optional, Set, Tuple

import numpy as np
from sympy import isprime

from nmbu.maxclass.arith.field import FpContext, is_power_of
from nmbu.maxclass.common import BudgetExceededError, MathematicalAssertionError, str2int, worker_count_from_env
from nmbu.maxclass.polycheck.xpoly import XPoly, x_minus_one_coefficients, x_minus_one_power

LOG = logging.getLogger(__name__)

DEFAULT_CLASSIFY_BUDGET = 50_000_000

ClassifyResult = List[Tuple[int, List[XPoly]]]

FIXTURE_LINE = re.compile(r"^\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*:\s*(\[.*\])\s*$")


class RangeCondition:
    """
    The condition [X^j](X-1)^k g(X) = 0 on the integer window j_lo <= j < j_hi,
    with j_lo = ceil((k+n)/2) and j_hi = k.

    When k + n is odd, which is the case for k = l - n + 1 coming from an algebra,
    the ceiling agrees with the real bound (k+n)/2 <= j. The ceiling is applied for every k.
    """

    def __init__(self, k: int, n: int, p: int):
        if not isprime(p):
            raise ValueError("p={p:d} is not a prime".format(p=p))
        if not 1 < n < p:
            raise ValueError("Expected 1 < n < p, got n={n:d}, p={p:d}".format(n=n, p=p))
        if k <= n + 1:
            raise ValueError("Expected k > n+1, got k={k:d}, n={n:d}".format(k=k, n=n))
        self.k = k
        self.n = n
        self.p = p
        self.j_lo = (k + n + 1) // 2
        self.j_hi = k

    def window(self) -> range:
        return range(self.j_lo, self.j_hi)

    def __repr__(self):
        return "RangeCondition(k={k:d}, n={n:d}, p={p:d}, window=[{lo:d}, {hi:d}))".format(
            k=self.k, n=self.n, p=self.p, lo=self.j_lo, hi=self.j_hi)


def range_condition_holds(g: XPoly, cond: RangeCondition) -> bool:
    """
    Checks the range condition for a monic g of degree n-1.

    Examples
    --------

    >>> g = XPoly([1, 3, 1], 5)  # (X-1)^2
    >>> range_condition_holds(g, RangeCondition(48, 3, 5))
    True

    :param g: XPoly over F_p, monic of degree cond.n - 1
    :param cond: RangeCondition
    :return: True iff all window coefficients of (X-1)^k g vanish
    """
    if g.p != cond.p:
        raise ValueError("g is over F_{a:d}, condition over F_{b:d}".format(a=g.p, b=cond.p))
    if g.degree() != cond.n - 1 or not g.is_monic():
        raise ValueError("g must be monic of degree {d:d}, got {g!r}".format(d=cond.n - 1, g=g))
    product = x_minus_one_power(cond.k, g.ctx) * g
    return all(product.coeff(j).value == 0 for j in cond.window())


def _window_matrix(k: int, n: int, p: int) -> np.ndarray:
    # row r, column i holds [X^(j_lo+r-i)](X-1)^k, so that candidates @ W.T gives the window of (X-1)^k g
    coefficients = x_minus_one_coefficients(k, p)
    j_lo = (k + n + 1) // 2
    rows = np.arange(j_lo, k)[:, None] - np.arange(n)[None, :]
    valid = (rows >= 0) & (rows <= k)
    return np.where(valid, coefficients[np.clip(rows, 0, k)], 0)


def monic_candidates(p: int, n: int) -> np.ndarray:
    """
    All monic polynomials of degree n-1 over F_p as coefficient rows (g_0, ..., g_{n-2}, 1),
    lexicographic with the low-degree coefficient most significant.
    """
    lower = np.array(list(itertools.product(range(p), repeat=n - 1)), dtype=np.int64).reshape(-1, n - 1)
    return np.hstack([lower, np.ones((lower.shape[0], 1), dtype=np.int64)])


def _admissible_rows(k: int, p: int, n: int) -> Tuple[int, List[List[int]]]:
    candidates = monic_candidates(p, n)
    window = _window_matrix(k, n, p)
    values = candidates @ window.T % p
    passing = ~np.any(values, axis=1)
    return k, candidates[passing].tolist()


def classification_cost(p: int, n: int, k_max: int) -> int:
    """
    Number of candidate windows evaluated by classify_admissible_k: p^(n-1) * k_max.
    """
    return p ** (n - 1) * k_max


def classify_admissible_k(p: int, n: int, k_max: int, *,
                          budget: int = DEFAULT_CLASSIFY_BUDGET,
                          workers: Optional[int] = None,
                          check: bool = True,
                          verbose: bool = False) -> ClassifyResult:
    """
    Enumerates, for every n+1 < k <= k_max, the monic g of degree n-1 over F_p that satisfy the range condition.

    With ``check`` set, asserts the conclusions of the classification of such k:
    every admissible k >= 4p is 2q-n+1 or lies in (q-n, q+n) for a power q > p of p,
    smaller admissible k lie in the listed small intervals or in the same families taken at q = p,
    and the divisibility claims hold for every surviving g, at q = p too for the k accepted through those families.
    A failure raises MathematicalAssertionError with the offending (k, g).

    Examples
    --------

    >>> result = dict(classify_admissible_k(5, 3, 30))
    >>> result[27]
    [X^2]

    :param p: odd prime
    :param n: 1 < n < p
    :param k_max: largest k examined
    :param budget: refuse when p^(n-1) * k_max exceeds this
    :param workers: process count; None reads MAXCLASS_WORKERS
    :param check: assert the conclusions on the result
    :param verbose: log per-k progress at INFO level
    :return: list of (k, admissible g) ordered by k, empty lists included
    """
    if not isprime(p):
        raise ValueError("p={p:d} is not a prime".format(p=p))
    if not 1 < n < p:
        raise ValueError("Expected 1 < n < p, got n={n:d}, p={p:d}".format(n=n, p=p))
    cost = classification_cost(p, n, k_max)
    if cost > budget:
        raise BudgetExceededError(
            "Classification of p={p:d}, n={n:d}, k_max={k:d} needs {c:d} candidate windows, budget is {b:d}".format(
                p=p, n=n, k=k_max, c=cost, b=budget), cost, budget)

    workers = worker_count_from_env() if workers is None else workers
    ks = list(range(n + 2, k_max + 1))
    if workers > 1 and len(ks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_admissible_rows, ks, itertools.repeat(p), itertools.repeat(n)))
    else:
        rows = []
        for k in ks:
            rows.append(_admissible_rows(k, p, n))
            if verbose:
                LOG.info("k=%d: %d admissible polynomials", k, len(rows[-1][1]))

    ctx = FpContext.of(p)
    result = [(k, [XPoly(g, ctx) for g in gs]) for k, gs in sorted(rows)]
    if check:
        check_classification(p, n, result)
    return result


def _powers_of(p: int, up_to: int, start: int = 1) -> List[int]:
    powers = []
    q = p ** start
    while q <= up_to:
        powers.append(q)
        q *= p
    return powers


def allowed_large_k(k: int, p: int, n: int, min_power: int = 2) -> bool:
    """
    k = 2q-n+1 or q-n < k < q+n for some power q >= p^min_power of p.
    """
    for q in _powers_of(p, 2 * k + 2 * n, start=min_power):
        if k == 2 * q - n + 1 or q - n < k < q + n:
            return True
    return False


def allowed_small_k(k: int, p: int, n: int) -> bool:
    """
    n+1 < k < p, 2p-n < k < 2p, 3p-n < k < 3p or k = 4p-n+1.
    """
    return n + 1 < k < p or 2 * p - n < k < 2 * p or 3 * p - n < k < 3 * p or k == 4 * p - n + 1


def _assert_divisibility(k: int, g: XPoly, p: int, n: int, min_power: int = 2) -> None:
    ctx = g.ctx
    for q in _powers_of(p, k + p, start=min_power):
        if k == 2 * q - n + 1 and g != x_minus_one_power(n - 1, ctx):
            raise MathematicalAssertionError(
                "k=2q-n+1={k:d} admits g={g!r} other than (X-1)^{e:d}".format(k=k, g=g, e=n - 1),
                {"k": k, "q": q, "g": g.coefficient_list()})
        k_0 = k - q + p
        if p - n < k_0 < p and not x_minus_one_power(p - k_0, ctx).divides(g):
            raise MathematicalAssertionError(
                "k=q-p+{k0:d}={k:d}: (X-1)^{e:d} does not divide g={g!r}".format(k0=k_0, k=k, e=p - k_0, g=g),
                {"k": k, "q": q, "g": g.coefficient_list()})
        k_0 = k - q
        # only while (X-1)^k0 g has degree below q
        if 0 < k_0 < n and k_0 + n - 1 < q and not XPoly.monomial(k_0, ctx).divides(g):
            raise MathematicalAssertionError(
                "k=q+{k0:d}={k:d}: X^{k0:d} does not divide g={g!r}".format(k0=k_0, k=k, g=g),
                {"k": k, "q": q, "g": g.coefficient_list()})


def check_classification(p: int, n: int, result: ClassifyResult) -> None:
    """
    Asserts the classification conclusions on a computed result. See classify_admissible_k.
    """
    for k, gs in result:
        if not gs:
            continue
        if k >= 4 * p:
            if not allowed_large_k(k, p, n):
                raise MathematicalAssertionError(
                    "Admissible k={k:d} >= 4p is neither 2q-n+1 nor in (q-n, q+n)".format(k=k),
                    {"k": k, "g": gs[0].coefficient_list()})
        elif not (allowed_small_k(k, p, n) or allowed_large_k(k, p, n, min_power=1)):
            raise MathematicalAssertionError(
                "Admissible k={k:d} < 4p lies outside the small intervals and the q = p families".format(k=k),
                {"k": k, "g": gs[0].coefficient_list()})
        min_power = 1 if k < 4 * p and not allowed_small_k(k, p, n) else 2
        for g in gs:
            _assert_divisibility(k, g, p, n, min_power)


def realized_small_intervals(p: int, n: int, result: ClassifyResult) -> Dict[str, List[int]]:
    """
    Reports which of the small-k intervals actually admit a polynomial.
    Realization is recorded, not asserted.
    """
    intervals = {
        "(n+1, p)": lambda k: n + 1 < k < p,
        "(2p-n, 2p)": lambda k: 2 * p - n < k < 2 * p,
        "(3p-n, 3p)": lambda k: 3 * p - n < k < 3 * p,
        "4p-n+1": lambda k: k == 4 * p - n + 1,
    }
    return {name: [k for k, gs in result if gs and contains(k)] for name, contains in intervals.items()}


def _lemma_window_zero(k: int, a: int, p: int, lo: int) -> bool:
    product = x_minus_one_power(k, p) * XPoly([-a, 1], p)
    return all(product.coeff(j).value == 0 for j in range(lo, k + 1))


def lemma_pairs(p: int, k_max: int, strengthened: bool = False) -> List[Tuple[int, int]]:
    """
    All (k, a), 1 < k <= k_max and a in F_p, with [X^j](X-1)^k (X-a) = 0 for k/2+1 <= j <= k,
    or for (k+1)/2 <= j <= k when ``strengthened``. The j = k coefficient forces a = -k, so only that a is tested.
    """
    pairs = []
    for k in range(2, k_max + 1):
        lo = (k + 2) // 2 if strengthened else (k + 3) // 2
        a = -k % p
        if _lemma_window_zero(k, a, p, lo):
            pairs.append((k, a))
    return pairs


def allowed_lemma_pairs(p: int, k_max: int, strengthened: bool = False) -> Set[Tuple[int, int]]:
    """
    (2,-2), (3,-3), (q-1,1), (q,0), (2q-1,1) for powers q >= p, as residues, restricted to k <= k_max.
    The strengthened window drops (3,-3) and (2q-1,1).
    """
    allowed = {(2, -2 % p)}
    if not strengthened:
        allowed.add((3, -3 % p))
    for q in _powers_of(p, k_max + 1):
        allowed.add((q - 1, 1))
        allowed.add((q, 0))
        if not strengthened:
            allowed.add((2 * q - 1, 1))
    return {(k, a) for k, a in allowed if 1 < k <= k_max}


def lemma_pairs_check(p: int, k_max: int) -> List[Tuple[int, int]]:
    """
    Enumerates the pairs of the linear-factor lemma and asserts that they lie in the allowed list,
    for both the plain and the strengthened window.

    Examples
    --------

    >>> lemma_pairs_check(5, 30)
    [(2, 3), (3, 2), (4, 1), (5, 0), (9, 1), (24, 1), (25, 0)]

    :return: pairs (k, a) with a as a residue in [0, p)
    """
    if not isprime(p):
        raise ValueError("p={p:d} is not a prime".format(p=p))
    pairs = lemma_pairs(p, k_max)
    extra = sorted(set(pairs) - allowed_lemma_pairs(p, k_max))
    if extra:
        raise MathematicalAssertionError("Unexpected pairs {e}".format(e=extra), {"pairs": extra})
    strengthened = lemma_pairs(p, k_max, strengthened=True)
    extra = sorted(set(strengthened) - allowed_lemma_pairs(p, k_max, strengthened=True))
    if extra:
        raise MathematicalAssertionError("Unexpected pairs under the strengthened window {e}".format(e=extra),
                                         {"pairs": extra})
    return pairs


def format_fixture_line(p: int, n: int, k: int, gs: Iterable[XPoly]) -> str:
    vectors = ", ".join("[" + ",".join(str(c) for c in g.coefficient_list()) + "]" for g in gs)
    return "({p:d}, {n:d}, {k:d}): [{v:s}]".format(p=p, n=n, k=k, v=vectors)


def write_fixture(file: IO, p: int, n: int, result: ClassifyResult, comment: Optional[str] = None) -> None:
    if comment:
        file.write("# " + comment + "\n")
    for k, gs in result:
        file.write(format_fixture_line(p, n, k, gs) + "\n")


def read_fixture(file: IO) -> Dict[Tuple[int, int, int], List[List[int]]]:
    """
    Reads lines "(p, n, k): [[g0,g1,...], ...]". Lines starting with '#' and blank lines are skipped.
    """
    fixture = {}
    for line_no, line in enumerate(file, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        match = FIXTURE_LINE.match(line)
        assert match is not None, "Malformed fixture line {no:d}: '{line:s}'".format(no=line_no, line=line)
        p, n, k = (str2int(match.group(i), "Invalid number in fixture line %d" % line_no) for i in (1, 2, 3))
        vectors = re.findall(r"\[([^\[\]]*)\]", match.group(4))
        fixture[(p, n, k)] = [
            [str2int(c.strip(), "Invalid coefficient in fixture line %d" % line_no) for c in v.split(",")]
            for v in vectors if v.strip()
        ]
    return fixture


def compare_with_fixture(p: int, n: int, result: ClassifyResult,
                         fixture: Dict[Tuple[int, int, int], List[List[int]]]) -> List[int]:
    """
    Returns the k values where the computed result differs from the fixture.
    Only k values present in both are compared.
    """
    computed = {k: [g.coefficient_list() for g in gs] for k, gs in result}
    return sorted(k for (fp, fn, k), gs in fixture.items()
                  if fp == p and fn == n and k in computed and computed[k] != gs)
