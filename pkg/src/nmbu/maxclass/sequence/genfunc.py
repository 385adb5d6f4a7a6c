#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from typing import Dict, Optional

import numpy as np

from nmbu.maxclass.common import MathematicalAssertionError
from nmbu.maxclass.polycheck.xpoly import XPoly
from nmbu.maxclass.sequence.beta import BetaSequence


class RationalSeries:
    """
    Power series numerator / denominator over F_p, the denominator having a nonzero constant term.

    Examples
    --------

    >>> series = RationalSeries(XPoly([0, 1], 3), XPoly([1, 2], 3))  # X / (1 - X)
    >>> series.expand(4).coefficient_list()
    [0, 1, 1, 1, 1]
    """

    def __init__(self, numerator: XPoly, denominator: XPoly):
        numerator.ctx.check_same(denominator.ctx)
        if denominator.coeff(0).value == 0:
            raise ValueError("Denominator must have a nonzero constant term, got {d!r}".format(d=denominator))
        self.numerator = numerator
        self.denominator = denominator
        self.ctx = numerator.ctx

    def expand(self, depth: int) -> XPoly:
        """
        Series coefficients of X^0, ..., X^depth.
        """
        p = self.ctx.p
        num = np.zeros(depth + 1, dtype=np.int64)
        top = min(len(self.numerator.coefficients), depth + 1)
        num[:top] = self.numerator.coefficients[:top]
        den = self.denominator.coefficients
        inverse = self.ctx.inverse(int(den[0]))
        result = np.zeros(depth + 1, dtype=np.int64)
        for k in range(depth + 1):
            span = min(k, len(den) - 1)
            acc = int(num[k]) - int(np.dot(den[1:span + 1], result[k - 1::-1][:span])) if span else int(num[k])
            result[k] = acc * inverse % p
        return XPoly(result, self.ctx)

    def to_dict(self) -> Dict[str, object]:
        return {"num": self.numerator.coefficient_list(), "den": self.denominator.coefficient_list()}

    def __repr__(self):
        return "({n!r}) / ({d!r})".format(n=self.numerator, d=self.denominator)


def genfunc(seq: BetaSequence) -> XPoly:
    """
    sum_{n<i<=depth} beta_i X^i, the generating function truncated at the depth.
    """
    coefficients = np.zeros(seq.depth + 1, dtype=np.int64)
    coefficients[seq.n + 1:] = seq.array
    return XPoly(coefficients, seq.ctx)


def subalgebra_transform(series: XPoly, n: int, depth: Optional[int] = None) -> XPoly:
    """
    (1 - 1/X) S + beta_{n+1} X^n for S = sum_{i>n} beta_i X^i.

    A series truncated at ``depth`` gives a result known through depth - 1, and is truncated there.
    Without a depth the series is treated as exact.
    """
    shifted = series - series.shift(-1)
    result = shifted + XPoly.monomial(n, series.ctx, series.coeff(n + 1).value)
    return result if depth is None else result.truncate(depth - 1)


def subalgebra_sequence(seq: BetaSequence) -> BetaSequence:
    """
    Sequence of the type-(n+1) subalgebra generated by z and e_{n+1}: entries beta_i - beta_{i+1}.
    The coefficient of X^(n+1) is gamma_{n+1,n+1} and must vanish.
    """
    n = seq.n
    transformed = subalgebra_transform(genfunc(seq), n, seq.depth)
    if transformed.coeff(n + 1).value != 0:
        raise MathematicalAssertionError("[e_{k:d}, e_{k:d}] != 0 in the given sequence".format(k=n + 1),
                                         {"index": n + 1, "value": transformed.coeff(n + 1).value})
    return BetaSequence(seq.ctx, n + 1, [transformed.coeff(i).value for i in range(n + 2, seq.depth)])


def adjoint_series(seq: BetaSequence, j: int) -> XPoly:
    """
    (1 - 1/X)^(j-n) sum_{i>n} beta_i X^i: the coefficient of X^i is the scalar of [e_i, e_j] = c e_{i+j}, i >= n.
    Terms below X^n are dropped; the result is known through degree depth - (j - n) and truncated there.
    """
    n = seq.n
    if j < n:
        raise ValueError("Expected j >= n={n:d}, got {j:d}".format(n=n, j=j))
    series = genfunc(seq)
    for _ in range(j - n):
        series = series - series.shift(-1)
    coefficients = series.truncate(seq.depth - (j - n)).coefficients.copy()
    coefficients[:min(n, len(coefficients))] = 0
    return XPoly(coefficients, seq.ctx)
