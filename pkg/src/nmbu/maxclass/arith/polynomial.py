#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from typing import Iterable, List, Tuple, Union

import numpy as np

from nmbu.maxclass.arith.field import FpContext, FpScalar
from nmbu.maxclass.common import ContextMismatchError

NEGATIVE_INFINITY = float("-inf")


def trim(coefficients: np.ndarray) -> np.ndarray:
    """
    Drops trailing zero coefficients. The zero polynomial becomes an empty array.
    """
    nonzero = np.nonzero(coefficients)[0]
    if len(nonzero) == 0:
        return coefficients[:0]
    return coefficients[:nonzero[-1] + 1]


class Polynomial:
    """
    Immutable univariate polynomial over F_p in normalized form:
    ``coefficients[i]`` is the coefficient of the i-th power, the last one is nonzero.

    Subclasses only fix the name of the indeterminate; values of different subclasses
    never mix, even over the same field.
    """
    variable = "X"

    __slots__ = ("ctx", "_coefficients")

    def __init__(self, coefficients: Union[Iterable[int], np.ndarray], ctx: Union[FpContext, int]):
        if not isinstance(ctx, FpContext):
            ctx = FpContext.of(ctx)
        self.ctx = ctx
        array = np.array([int(c) for c in coefficients] if not isinstance(coefficients, np.ndarray) else coefficients,
                         dtype=np.int64) % ctx.p
        array = trim(array)
        array.setflags(write=False)
        self._coefficients = array

    @classmethod
    def zero(cls, ctx: FpContext):
        return cls([], ctx)

    @classmethod
    def one(cls, ctx: FpContext):
        return cls([1], ctx)

    @classmethod
    def monomial(cls, exponent: int, ctx: FpContext, coefficient: int = 1):
        if exponent < 0:
            raise ValueError("Negative exponent {e:d}".format(e=exponent))
        coefficients = np.zeros(exponent + 1, dtype=np.int64)
        coefficients[exponent] = coefficient
        return cls(coefficients, ctx)

    @property
    def coefficients(self) -> np.ndarray:
        return self._coefficients

    @property
    def p(self) -> int:
        return self.ctx.p

    def degree(self) -> Union[int, float]:
        """
        Degree, with NEGATIVE_INFINITY for the zero polynomial.
        """
        return len(self._coefficients) - 1 if len(self._coefficients) else NEGATIVE_INFINITY

    def is_zero(self) -> bool:
        return len(self._coefficients) == 0

    def is_monic(self) -> bool:
        return not self.is_zero() and self._coefficients[-1] == 1

    def coeff(self, j: int) -> FpScalar:
        """
        Coefficient of the j-th power. Zero outside the support, negative j included.
        """
        if 0 <= j < len(self._coefficients):
            return FpScalar(int(self._coefficients[j]), self.ctx)
        return self.ctx.zero()

    def coefficient_list(self) -> List[int]:
        return [int(c) for c in self._coefficients]

    def _check(self, other: "Polynomial") -> None:
        if type(other) is not type(self):
            raise ContextMismatchError("Cannot combine {a:s} with {b:s}".format(
                a=type(self).__name__, b=type(other).__name__))
        self.ctx.check_same(other.ctx)

    def _padded(self, other: "Polynomial") -> Tuple[np.ndarray, np.ndarray]:
        size = max(len(self._coefficients), len(other._coefficients))
        a = np.zeros(size, dtype=np.int64)
        b = np.zeros(size, dtype=np.int64)
        a[:len(self._coefficients)] = self._coefficients
        b[:len(other._coefficients)] = other._coefficients
        return a, b

    def __add__(self, other):
        self._check(other)
        a, b = self._padded(other)
        return type(self)(a + b, self.ctx)

    def __sub__(self, other):
        self._check(other)
        a, b = self._padded(other)
        return type(self)(a - b, self.ctx)

    def __neg__(self):
        return type(self)(-self._coefficients, self.ctx)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer, FpScalar)):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return type(self).zero(self.ctx)
        # inputs are reduced, so every partial sum stays below len * p^2
        return type(self)(np.convolve(self._coefficients, other._coefficients) % self.p, self.ctx)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer, FpScalar)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor: Union[int, FpScalar]) -> "Polynomial":
        if isinstance(factor, FpScalar):
            self.ctx.check_same(factor.ctx)
            factor = factor.value
        return type(self)(self._coefficients * (int(factor) % self.p), self.ctx)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Negative exponent {e:d}".format(e=exponent))
        result = type(self).one(self.ctx)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def shift(self, k: int) -> "Polynomial":
        """
        Multiplication by the k-th power of the indeterminate. Negative k drops the low terms.
        """
        if k >= 0:
            return type(self)(np.concatenate([np.zeros(k, dtype=np.int64), self._coefficients]), self.ctx)
        return type(self)(self._coefficients[-k:], self.ctx)

    def truncate(self, max_exponent: int) -> "Polynomial":
        """
        Keeps the terms of exponent <= max_exponent.
        """
        return type(self)(self._coefficients[:max(max_exponent + 1, 0)], self.ctx)

    def evaluate(self, value: int) -> FpScalar:
        acc = 0
        for c in reversed(self._coefficients):
            acc = (acc * value + int(c)) % self.p
        return FpScalar(acc, self.ctx)

    def divmod_monic(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """
        Long division by a monic divisor.
        """
        self._check(divisor)
        if not divisor.is_monic():
            raise ValueError("Divisor must be monic")
        remainder = self._coefficients.copy()
        d = len(divisor._coefficients) - 1
        if len(remainder) - 1 < d:
            return type(self).zero(self.ctx), self
        quotient = np.zeros(len(remainder) - d, dtype=np.int64)
        for i in range(len(remainder) - 1, d - 1, -1):
            c = remainder[i] % self.p
            if c:
                quotient[i - d] = c
                remainder[i - d:i + 1] = (remainder[i - d:i + 1] - c * divisor._coefficients) % self.p
        return type(self)(quotient, self.ctx), type(self)(remainder, self.ctx)

    def divides(self, other: "Polynomial") -> bool:
        """
        True if this monic polynomial divides ``other``.
        """
        return other.divmod_monic(self)[1].is_zero()

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return type(self) is type(other) and self.ctx == other.ctx and \
            np.array_equal(self._coefficients, other._coefficients)

    def __hash__(self):
        return hash((type(self).__name__, self.p, tuple(self.coefficient_list())))

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self._coefficients):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                power = self.variable if i == 1 else "{v:s}^{i:d}".format(v=self.variable, i=i)
                terms.append(power if c == 1 else "{c:d}*{x:s}".format(c=int(c), x=power))
        return " + ".join(reversed(terms))


class TPoly(Polynomial):
    """
    Polynomial in t over F_p, the coefficient ring of the divided-power construction.

    Examples
    --------

    >>> one_plus_t = TPoly([1, 1], 3)
    >>> one_plus_t * one_plus_t
    t^2 + 2*t + 1
    """
    variable = "t"


def tpoly_arith(operation: str, x: TPoly, y: Union[TPoly, int, FpScalar]) -> TPoly:
    """
    Named access to the ring operations of TPoly: 'add', 'sub', 'mul' or 'scale'.
    Mixing moduli raises ContextMismatchError.
    """
    if operation == "add":
        return x + y
    if operation == "sub":
        return x - y
    if operation == "mul":
        return x * y
    if operation == "scale":
        return x.scale(y)
    raise ValueError("Unknown operation '{op:s}'. Expected add|sub|mul|scale".format(op=operation))
