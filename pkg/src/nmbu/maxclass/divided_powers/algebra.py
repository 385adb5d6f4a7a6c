#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from typing import Optional, Tuple, Union

import numpy as np
from sympy import isprime

from nmbu.maxclass.arith.field import FpContext, FpScalar, binom_mod_p_array, lucas_binom
from nmbu.maxclass.arith.polynomial import TPoly
from nmbu.maxclass.common import ContextMismatchError, MathematicalAssertionError

DEFAULT_T_DEGREE_CAP = 3


class DividedPowerAlgebra:
    """
    The truncated divided-power ring F_p[t][x; c] with basis x^(i), 0 <= i < q = p^c,
    and product x^(i) x^(j) = C(i+j, i) x^(i+j).

    Coefficients are polynomials in t of degree below ``t_degree_cap``. Every element of this
    algebra is stored as a numpy array whose last axis runs over powers of t;
    an operation whose result needs a higher power of t raises ValueError instead of truncating.

    Examples
    --------

    >>> algebra = DividedPowerAlgebra(3, 2)
    >>> algebra.q
    9
    >>> algebra.monomial(2).coefficient(2)
    1
    """

    def __init__(self, p: int, c: int, t_degree_cap: int = DEFAULT_T_DEGREE_CAP):
        if not isprime(p):
            raise ValueError("p={p} is not a prime".format(p=p))
        if c < 1:
            raise ValueError("Exponent c must be positive, got {c:d}".format(c=c))
        if t_degree_cap < 1:
            raise ValueError("t-degree cap must be positive, got {t:d}".format(t=t_degree_cap))
        self.p = p
        self.c = c
        self.q = p ** c
        self.ctx = FpContext.of(p)
        self.t_degree_cap = t_degree_cap
        exponents = np.arange(self.q)
        # mult_table[k, j] = C(k, j) mod p, the coefficient of x^(k) in x^(k-j) x^(j)
        self.mult_table = binom_mod_p_array(exponents[:, None], exponents[None, :], p)
        self.mult_table.setflags(write=False)

    def same_as(self, other: "DividedPowerAlgebra") -> bool:
        return self.p == other.p and self.c == other.c and self.t_degree_cap == other.t_degree_cap

    def check_same(self, other: "DividedPowerAlgebra") -> None:
        if not self.same_as(other):
            raise ContextMismatchError("Cannot combine elements of {a!r} and {b!r}".format(a=self, b=other))

    def __repr__(self):
        return "DividedPowerAlgebra(p={p:d}, c={c:d}, t_degree_cap={t:d})".format(
            p=self.p, c=self.c, t=self.t_degree_cap)

    def zero(self) -> "DividedPowerElement":
        return DividedPowerElement(self, np.zeros((self.q, self.t_degree_cap), dtype=np.int64))

    def monomial(self, exponent: int, t_power: int = 0, coefficient: int = 1) -> "DividedPowerElement":
        """
        coefficient * t^t_power * x^(exponent). Exponents outside [0, q) give zero.
        """
        data = np.zeros((self.q, self.t_degree_cap), dtype=np.int64)
        if 0 <= exponent < self.q:
            if not 0 <= t_power < self.t_degree_cap:
                raise ValueError("t-power {t:d} outside the cap {c:d}".format(t=t_power, c=self.t_degree_cap))
            data[exponent, t_power] = coefficient % self.p
        return DividedPowerElement(self, data)

    def zero_endo(self) -> "Endo":
        return Endo(self, np.zeros((self.q, self.q, self.t_degree_cap), dtype=np.int64))

    def identity(self) -> "Endo":
        data = np.zeros((self.q, self.q, self.t_degree_cap), dtype=np.int64)
        data[:, :, 0] = np.eye(self.q, dtype=np.int64)
        return Endo(self, data)

    def derivation(self) -> "Endo":
        """
        The standard derivation: x^(i) -> x^(i-1), 1 -> 0.
        """
        data = np.zeros((self.q, self.q, self.t_degree_cap), dtype=np.int64)
        data[np.arange(self.q - 1), np.arange(1, self.q), 0] = 1
        return Endo(self, data)

    def multiplication(self, f: "DividedPowerElement") -> "Endo":
        """
        The operator g -> f g. Column j holds f x^(j), so entry (k, j) is C(k, j) f_{k-j}.
        """
        self.check_same(f.algebra)
        k = np.arange(self.q)[:, None]
        j = np.arange(self.q)[None, :]
        shift = k - j
        taken = f.data[np.clip(shift, 0, self.q - 1), :]
        data = np.where((shift >= 0)[:, :, None], taken * self.mult_table[:, :, None], 0) % self.p
        return Endo(self, data)

    def z_operator(self) -> "Endo":
        """
        Z = -d - t x^(q-1) I. Z x^(i) = -x^(i-1) for 0 < i < q and Z 1 = -t x^(q-1).
        """
        if self.t_degree_cap < 2:
            raise ValueError("Z needs a t-degree cap of at least 2")
        return -(self.derivation() + self.multiplication(self.monomial(self.q - 1, t_power=1)))


def dp_mul(i: int, j: int, q: int, p: Union[int, FpContext]) -> Tuple[FpScalar, int]:
    """
    Product of divided-power monomials: x^(i) x^(j) = C(i+j, i) x^(i+j).

    When i + j >= q the product is zero in the truncated ring; the binomial coefficient
    then vanishes modulo p as well, and this is asserted.

    Examples
    --------

    >>> dp_mul(1, 1, 9, 3)
    (2 (mod 3), 2)
    >>> dp_mul(4, 5, 9, 3)
    (0 (mod 3), 9)

    :return: (coefficient, exponent i + j), the coefficient being zero when i + j >= q
    """
    ctx = p if isinstance(p, FpContext) else FpContext.of(p)
    if not (0 <= i < q and 0 <= j < q):
        raise ValueError("Exponents must lie in [0, {q:d}), got ({i:d}, {j:d})".format(q=q, i=i, j=j))
    value = lucas_binom(i + j, i, ctx.p)
    if i + j >= q:
        if value != 0:
            raise MathematicalAssertionError(
                "C({a:d}, {b:d}) is {v:d} mod {p:d}, expected 0 past the truncation".format(
                    a=i + j, b=i, v=value, p=ctx.p), {"i": i, "j": j, "q": q})
        return ctx.zero(), i + j
    return FpScalar(value, ctx), i + j


def _t_product(left: np.ndarray, right: np.ndarray, p: int, cap: int, subscripts: str) -> np.ndarray:
    # Cauchy product over the trailing t axis; terms of t-degree >= cap must vanish
    t_left = left.shape[-1]
    t_right = right.shape[-1]
    result = None
    overflow = False
    for d1 in range(t_left):
        a = left[..., d1]
        if not a.any():
            continue
        for d2 in range(t_right):
            b = right[..., d2]
            if not b.any():
                continue
            term = np.einsum(subscripts, a, b) % p
            if not term.any():
                continue
            if d1 + d2 >= cap:
                overflow = True
                continue
            if result is None:
                result = np.zeros(term.shape + (cap,), dtype=np.int64)
            result[..., d1 + d2] = (result[..., d1 + d2] + term) % p
    if overflow:
        raise ValueError("Product needs t-degree >= {c:d}; raise the t-degree cap".format(c=cap))
    return result


class DividedPowerElement:
    """
    Element sum_i f_i(t) x^(i). ``data[i, d]`` is the coefficient of t^d x^(i).
    """

    def __init__(self, algebra: DividedPowerAlgebra, data: np.ndarray):
        if data.shape != (algebra.q, algebra.t_degree_cap):
            raise ValueError("Expected shape {e}, got {g}".format(e=(algebra.q, algebra.t_degree_cap), g=data.shape))
        self.algebra = algebra
        self.data = np.asarray(data, dtype=np.int64) % algebra.p
        self.data.setflags(write=False)

    def coefficient(self, i: int) -> TPoly:
        """
        Coefficient of x^(i) as a polynomial in t. Zero for i outside [0, q).
        """
        if 0 <= i < self.algebra.q:
            return TPoly(self.data[i], self.algebra.ctx)
        return TPoly.zero(self.algebra.ctx)

    def is_zero(self) -> bool:
        return not self.data.any()

    def support(self):
        """
        (i, d) pairs with a nonzero coefficient of t^d x^(i), in increasing order.
        """
        return [tuple(int(v) for v in pair) for pair in np.argwhere(self.data)]

    def __add__(self, other):
        self.algebra.check_same(other.algebra)
        return DividedPowerElement(self.algebra, self.data + other.data)

    def __sub__(self, other):
        self.algebra.check_same(other.algebra)
        return DividedPowerElement(self.algebra, self.data - other.data)

    def __neg__(self):
        return DividedPowerElement(self.algebra, -self.data)

    def scale(self, factor: Union[int, FpScalar]) -> "DividedPowerElement":
        return DividedPowerElement(self.algebra, self.data * int(factor))

    def __mul__(self, other: "DividedPowerElement") -> "DividedPowerElement":
        """
        Divided-power product.
        """
        self.algebra.check_same(other.algebra)
        return self.algebra.multiplication(self).apply(other)

    def __eq__(self, other):
        if not isinstance(other, DividedPowerElement):
            return NotImplemented
        return self.algebra.same_as(other.algebra) and np.array_equal(self.data, other.data)

    def __repr__(self):
        terms = []
        for i, d in self.support():
            t_part = "" if d == 0 else ("t*" if d == 1 else "t^%d*" % d)
            c = int(self.data[i, d])
            terms.append("{c}{t}x^({i:d})".format(c="" if c == 1 else "%d*" % c, t=t_part, i=i))
        return " + ".join(terms) if terms else "0"


class Endo:
    """
    F_p[t]-linear endomorphism of the divided-power module.
    ``data[k, j, d]`` is the coefficient of t^d x^(k) in the image of x^(j), so column j is the image of x^(j).
    """

    def __init__(self, algebra: DividedPowerAlgebra, data: np.ndarray):
        expected = (algebra.q, algebra.q, algebra.t_degree_cap)
        if data.shape != expected:
            raise ValueError("Expected shape {e}, got {g}".format(e=expected, g=data.shape))
        self.algebra = algebra
        self.data = np.asarray(data, dtype=np.int64) % algebra.p
        self.data.setflags(write=False)

    def entry(self, k: int, j: int) -> TPoly:
        return TPoly(self.data[k, j], self.algebra.ctx)

    def is_zero(self) -> bool:
        return not self.data.any()

    def apply(self, f: DividedPowerElement) -> DividedPowerElement:
        self.algebra.check_same(f.algebra)
        product = _t_product(self.data, f.data, self.algebra.p, self.algebra.t_degree_cap, "kj,j->k")
        return self.algebra.zero() if product is None else DividedPowerElement(self.algebra, product)

    def compose(self, other: "Endo") -> "Endo":
        """
        self after other.
        """
        self.algebra.check_same(other.algebra)
        product = _t_product(self.data, other.data, self.algebra.p, self.algebra.t_degree_cap, "ik,kj->ij")
        return self.algebra.zero_endo() if product is None else Endo(self.algebra, product)

    def bracket(self, other: "Endo") -> "Endo":
        return self.compose(other) - other.compose(self)

    def __add__(self, other):
        self.algebra.check_same(other.algebra)
        return Endo(self.algebra, self.data + other.data)

    def __sub__(self, other):
        self.algebra.check_same(other.algebra)
        return Endo(self.algebra, self.data - other.data)

    def __neg__(self):
        return Endo(self.algebra, -self.data)

    def scale(self, factor: Union[int, FpScalar]) -> "Endo":
        return Endo(self.algebra, self.data * int(factor))

    def __eq__(self, other):
        if not isinstance(other, Endo):
            return NotImplemented
        return self.algebra.same_as(other.algebra) and np.array_equal(self.data, other.data)

    def __repr__(self):
        return "Endo({q:d}x{q:d}, nonzero entries: {n:d})".format(q=self.algebra.q, n=int(np.count_nonzero(
            self.data.any(axis=2))))


def random_module_element(algebra: DividedPowerAlgebra, rng: np.random.Generator,
                          t_degree: Optional[int] = None) -> DividedPowerElement:
    """
    Random element with coefficients of t-degree below ``t_degree`` (default 1, constants only).
    """
    t_degree = 1 if t_degree is None else t_degree
    data = np.zeros((algebra.q, algebra.t_degree_cap), dtype=np.int64)
    data[:, :t_degree] = rng.integers(0, algebra.p, size=(algebra.q, t_degree))
    return DividedPowerElement(algebra, data)


def random_endo(algebra: DividedPowerAlgebra, rng: np.random.Generator, t_degree: Optional[int] = None) -> Endo:
    t_degree = 1 if t_degree is None else t_degree
    data = np.zeros((algebra.q, algebra.q, algebra.t_degree_cap), dtype=np.int64)
    data[:, :, :t_degree] = rng.integers(0, algebra.p, size=(algebra.q, algebra.q, t_degree))
    return Endo(algebra, data)
