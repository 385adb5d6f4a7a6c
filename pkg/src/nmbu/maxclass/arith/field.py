#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from functools import lru_cache
from typing import Type, Union

import galois
import numpy as np
from sympy import isprime

from nmbu.maxclass.common import ContextMismatchError


def is_power_of(q: int, p: int) -> bool:
    """
    True if q = p^c for some c >= 0.
    """
    if q < 1:
        return False
    while q % p == 0:
        q //= p
    return q == 1


class FpContext:
    """
    Arithmetic context of the prime field F_p.
    Primality is checked once, here, and every value created through the context shares it.

    Examples
    --------

    >>> ctx = FpContext.of(5)
    >>> ctx(7)
    2 (mod 5)
    >>> ctx(3) / ctx(2)
    4 (mod 5)
    """

    def __init__(self, p: int):
        if not isinstance(p, (int, np.integer)) or not isprime(int(p)):
            raise ValueError("Modulus must be a prime, but got {p}".format(p=p))
        self.p = int(p)

    @staticmethod
    @lru_cache(maxsize=None)
    def of(p: int) -> "FpContext":
        """
        Shared context for the given prime.
        """
        return FpContext(p)

    def __call__(self, value: int) -> "FpScalar":
        return FpScalar(int(value) % self.p, self)

    def __eq__(self, other):
        return isinstance(other, FpContext) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return "F_{p:d}".format(p=self.p)

    def zero(self) -> "FpScalar":
        return FpScalar(0, self)

    def one(self) -> "FpScalar":
        return FpScalar(1, self)

    def inverse(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError("0 has no inverse in F_{p:d}".format(p=self.p))
        return pow(value, self.p - 2, self.p)

    def check_same(self, other: "FpContext") -> None:
        if self != other:
            raise ContextMismatchError("Cannot combine values over {a!r} and {b!r}".format(a=self, b=other))


class FpScalar:
    """
    Immutable residue of F_p. ``value`` is always in [0, p).
    """
    __slots__ = ("value", "ctx")

    def __init__(self, value: int, ctx: FpContext):
        object.__setattr__(self, "value", int(value) % ctx.p)
        object.__setattr__(self, "ctx", ctx)

    def __setattr__(self, key, value):
        raise AttributeError("FpScalar is immutable")

    def _coerce(self, other: Union["FpScalar", int]) -> int:
        if isinstance(other, FpScalar):
            self.ctx.check_same(other.ctx)
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpScalar(self.value + o, self.ctx)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpScalar(self.value - o, self.ctx)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpScalar(o - self.value, self.ctx)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpScalar(self.value * o, self.ctx)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpScalar(self.value * self.ctx.inverse(o), self.ctx)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpScalar(o * self.ctx.inverse(self.value), self.ctx)

    def __neg__(self):
        return FpScalar(-self.value, self.ctx)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return FpScalar(pow(self.ctx.inverse(self.value), -exponent, self.ctx.p), self.ctx)
        return FpScalar(pow(self.value, exponent, self.ctx.p), self.ctx)

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.ctx.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def signed(self) -> int:
        """
        Representative in (-p/2, p/2), handy for reading off signs such as "ending in -1".
        """
        return self.value - self.ctx.p if self.value > self.ctx.p // 2 else self.value

    def __repr__(self):
        return "{v:d} (mod {p:d})".format(v=self.value, p=self.ctx.p)


def _context(p: Union[int, FpContext]) -> FpContext:
    return p if isinstance(p, FpContext) else FpContext.of(p)


def lucas_binom(a: int, b: int, p: int) -> int:
    """
    C(a, b) mod p as a plain residue, digit by digit in base p.
    Zero when b > a or b < 0.
    """
    if b < 0 or a < 0 or b > a:
        return 0
    result = 1
    while b > 0:
        a_digit, b_digit = a % p, b % p
        if b_digit > a_digit:
            return 0
        # single-digit binomials are small enough for exact integer arithmetic
        result = result * _small_binom(a_digit, b_digit, p) % p
        a //= p
        b //= p
    return result


@lru_cache(maxsize=None)
def _small_binom(a: int, b: int, p: int) -> int:
    num = 1
    den = 1
    for i in range(b):
        num = num * (a - i) % p
        den = den * (i + 1) % p
    return num * pow(den, p - 2, p) % p


def binom_mod_p(a: int, b: int, p: Union[int, FpContext]) -> FpScalar:
    """
    C(a, b) mod p by Lucas' theorem: the product of the binomials of the base-p digits.

    Examples
    --------

    >>> binom_mod_p(26, 5, 5)
    0 (mod 5)
    >>> binom_mod_p(7, 0, 3)
    1 (mod 3)

    :param a: non-negative integer
    :param b: non-negative integer, C(a, b) = 0 when b > a
    :param p: prime modulus or an FpContext. Primality is checked when the context is created.
    :return: FpScalar
    """
    ctx = _context(p)
    if a < 0 or b < 0:
        raise ValueError("Binomial arguments must be non-negative, got ({a:d}, {b:d})".format(a=a, b=b))
    return FpScalar(lucas_binom(a, b, ctx.p), ctx)


def binom_mod_p_array(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """
    Vectorised Lucas' theorem. Entries with b > a or b < 0 give 0.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    a, b = np.broadcast_arrays(a, b)
    result = np.where((b < 0) | (b > a), 0, 1).astype(np.int64)
    a = np.where(a < 0, 0, a)
    b = np.where(b < 0, 0, b)
    small = np.array([[_small_binom(i, j, p) for j in range(p)] for i in range(p)], dtype=np.int64)
    while np.any(b > 0):
        result = result * small[a % p, b % p] % p
        a = a // p
        b = b // p
    return result


def lucas_symmetry_check(a: int, b: int, q: int, p: int) -> bool:
    """
    Checks C(a, q-1-b) = (-1)^(a+b) C(b, q-1-a) mod p for 0 <= a, b < q, q a power of p.
    Always true; exercised as a property.
    """
    if not is_power_of(q, p) or q < p:
        raise ValueError("q={q:d} is not a positive power of p={p:d}".format(q=q, p=p))
    if not (0 <= a < q and 0 <= b < q):
        raise ValueError("Arguments must lie in [0, q), got a={a:d}, b={b:d}, q={q:d}".format(a=a, b=b, q=q))
    left = lucas_binom(a, q - 1 - b, p)
    right = lucas_binom(b, q - 1 - a, p)
    if (a + b) % 2 == 1:
        right = -right % p
    return left == right


def vandermonde_check(u: int, v: int, w: int, p: int) -> bool:
    """
    Checks the Vandermonde convolution sum_g C(u,g) C(v,w-g) = C(u+v,w) mod p.
    """
    g = np.arange(0, w + 1, dtype=np.int64)
    left = int(np.sum(binom_mod_p_array(u, g, p) * binom_mod_p_array(v, w - g, p)) % p)
    return left == lucas_binom(u + v, w, p)


@lru_cache(maxsize=None)
def galois_field(p: int) -> Type[galois.FieldArray]:
    return galois.GF(p)


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """
    Rank of an integer matrix over F_p.
    """
    m = np.array(matrix, dtype=np.int64) % p
    if m.ndim != 2 or m.size == 0:
        return 0
    return int(np.linalg.matrix_rank(galois_field(p)(m)))
