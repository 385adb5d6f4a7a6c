#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from typing import Dict, Iterable, List, Optional, Union

import numpy as np

from nmbu.maxclass.arith.field import FpContext, FpScalar, binom_mod_p_array
from nmbu.maxclass.common import DepthExceededError

UNKNOWN = -1


class BetaSequence:
    """
    Structure constants (beta_i) for n < i <= depth of an algebra of type n over F_p,
    defined by [e_i, e_n] = beta_i e_{i+n}.

    beta_n itself is left undefined: reading it, or anything past the depth, raises DepthExceededError.
    Computations that may run past the known window return None ("unknown") instead of zero.

    Examples
    --------

    >>> seq = BetaSequence(5, 2, [0, 0, 1, 4])
    >>> seq.depth
    6
    >>> seq.beta(5)
    1 (mod 5)
    >>> seq.normalized().values()
    [0, 0, 1, 4]
    """
    kind = "beta"

    def __init__(self, p: Union[int, FpContext], n: int, betas: Iterable[int]):
        self.ctx = p if isinstance(p, FpContext) else FpContext.of(p)
        if n < 1:
            raise ValueError("Type n must be positive, got {n:d}".format(n=n))
        self.p = self.ctx.p
        self.n = n
        array = np.array([int(b) for b in betas], dtype=np.int64) % self.p
        array.setflags(write=False)
        self._betas = array

    @property
    def depth(self) -> int:
        """
        Highest index with a known entry.
        """
        return self.n + len(self._betas)

    @property
    def array(self) -> np.ndarray:
        """
        Entries as residues; position k holds beta_{n+1+k}.
        """
        return self._betas

    def values(self) -> List[int]:
        return [int(b) for b in self._betas]

    def known(self, i: int) -> bool:
        return self.n < i <= self.depth

    def value(self, i: int) -> int:
        if not self.known(i):
            raise DepthExceededError("beta_{i:d} is outside the known window ({n:d}, {d:d}]".format(
                i=i, n=self.n, d=self.depth))
        return int(self._betas[i - self.n - 1])

    def beta(self, i: int) -> FpScalar:
        return FpScalar(self.value(i), self.ctx)

    def __getitem__(self, i: int) -> FpScalar:
        return self.beta(i)

    def __len__(self):
        return len(self._betas)

    def extended_values(self) -> np.ndarray:
        """
        Residues from index n on, with beta_n := 0 in front. Used for bracket expansions,
        where [e_n, e_n] = 0 makes the convention exact.
        """
        return np.concatenate([np.zeros(1, dtype=np.int64), self._betas])

    def first_nonzero(self) -> Optional[int]:
        """
        Index of the first nonzero entry, None if the known window is all zero.
        """
        nonzero = np.nonzero(self._betas)[0]
        return None if len(nonzero) == 0 else self.n + 1 + int(nonzero[0])

    def is_zero(self) -> bool:
        return not self._betas.any()

    def is_normalized(self) -> bool:
        first = self.first_nonzero()
        return first is None or self.value(first) == 1

    def normalized(self) -> "BetaSequence":
        """
        Rescaled so that the first nonzero entry is 1. Rescaling e_n rescales the whole sequence.
        """
        first = self.first_nonzero()
        if first is None:
            return self
        factor = self.ctx.inverse(self.value(first))
        return self._like(self._betas * factor)

    def prefix(self, depth: int) -> "BetaSequence":
        if depth > self.depth:
            raise DepthExceededError("Requested depth {d:d} exceeds the known depth {k:d}".format(
                d=depth, k=self.depth))
        return self._like(self._betas[:max(depth - self.n, 0)])

    def _like(self, betas: Iterable[int]) -> "BetaSequence":
        return BetaSequence(self.ctx, self.n, betas)

    def to_dict(self) -> Dict[str, object]:
        return {"kind": self.kind, "p": self.p, "n": self.n, "depth": self.depth, "betas": self.values()}

    def __eq__(self, other):
        if not isinstance(other, BetaSequence):
            return NotImplemented
        return type(self) is type(other) and self.p == other.p and self.n == other.n and \
            np.array_equal(self._betas, other._betas)

    def __repr__(self):
        return "BetaSequence(p={p:d}, n={n:d}, depth={d:d})".format(p=self.p, n=self.n, d=self.depth)


class AlphaSequence(BetaSequence):
    """
    Sequence (alpha_i)_{i>1} of an uncovered algebra of type 1: the case n = 1 of BetaSequence.
    Nonzero entries are isolated, which is checked on construction.
    """
    kind = "alpha"

    def __init__(self, p: Union[int, FpContext], alphas: Iterable[int]):
        super().__init__(p, 1, alphas)
        both = (self._betas[:-1] != 0) & (self._betas[1:] != 0)
        if both.any():
            position = int(np.nonzero(both)[0][0]) + 2
            raise ValueError("Consecutive nonzero entries alpha_{a:d}, alpha_{b:d}".format(a=position, b=position + 1))

    def _like(self, betas: Iterable[int]) -> "AlphaSequence":
        return AlphaSequence(self.ctx, betas)

    def __repr__(self):
        return "AlphaSequence(p={p:d}, depth={d:d})".format(p=self.p, d=self.depth)


def alternating_binomials(N: int, p: int) -> np.ndarray:
    """
    (-1)^i C(N, i) mod p for 0 <= i <= N.
    """
    i = np.arange(N + 1, dtype=np.int64)
    return binom_mod_p_array(N, i, p) * np.where(i % 2 == 0, 1, p - 1) % p


def bracket_coeff(seq: BetaSequence, a: int, b: int) -> Optional[FpScalar]:
    """
    gamma_{a,b} with [e_a, e_b] = gamma_{a,b} e_{a+b}:
    gamma_{a,b} = sum_i (-1)^i C(b-n, i) beta_{a+i}, with beta_n := 0.

    The top term i = b-n always has binomial coefficient 1, so the full window up to a+b-n is needed.
    Returns None when a+b-n exceeds the depth.

    Examples
    --------

    >>> ones = BetaSequence(3, 2, [1] * 10)
    >>> bracket_coeff(ones, 5, 2)
    1 (mod 3)
    >>> bracket_coeff(ones, 5, 4)
    0 (mod 3)
    >>> bracket_coeff(ones, 5, 10) is None
    True
    """
    n = seq.n
    if a < n or b < n:
        raise ValueError("Indices must be at least n={n:d}, got ({a:d}, {b:d})".format(n=n, a=a, b=b))
    if a + b - n > seq.depth:
        return None
    window = seq.extended_values()[a - n:a + b - 2 * n + 1]
    value = int(np.dot(window, alternating_binomials(b - n, seq.p)) % seq.p)
    return FpScalar(value, seq.ctx)


def gamma_table_from_values(values: np.ndarray, n: int, p: int) -> np.ndarray:
    """
    Table of structure constants from residues values[k] = beta_{n+k}, values[0] = 0.

    Entry [a-n, b-n] holds gamma_{a,b} for n <= a, b <= depth with a+b-n <= depth, UNKNOWN elsewhere.
    """
    size = len(values)
    table = np.full((size, size), UNKNOWN, dtype=np.int64)
    for N in range(size):
        column = np.correlate(values, alternating_binomials(N, p), mode="valid") % p
        table[:len(column), N] = column
    return table


def gamma_table(seq: BetaSequence) -> np.ndarray:
    return gamma_table_from_values(seq.extended_values(), seq.n, seq.p)


def is_isomorphic(first: BetaSequence, second: BetaSequence) -> bool:
    """
    Algebras of type n > 1 are isomorphic iff their normalized sequences coincide.
    Compares on the common known window.
    """
    if first.p != second.p or first.n != second.n:
        return False
    depth = min(first.depth, second.depth)
    return first.prefix(depth).normalized() == second.prefix(depth).normalized()
