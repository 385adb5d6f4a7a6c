#  Copyright: (c) 2023, Liudmila Sherstnyakova
#  GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from typing import Tuple, Union

import numpy as np

from nmbu.maxclass.arith.field import FpContext, FpScalar, binom_mod_p_array, is_power_of
from nmbu.maxclass.arith.polynomial import Polynomial


class XPoly(Polynomial):
    """
    Polynomial in X over F_p. Used for the vanishing conditions on (X-1)^k g(X)
    and for the numerators and denominators of generating functions.

    Examples
    --------

    >>> g = XPoly([1, 3, 1], 5)  # (X-1)^2 over F_5
    >>> g.degree()
    2
    >>> coeff(x_minus_one_power(3, 5), 1)
    3 (mod 5)
    """
    variable = "X"


def _ctx(p: Union[int, FpContext]) -> FpContext:
    return p if isinstance(p, FpContext) else FpContext.of(p)


def coeff(f: Polynomial, j: int) -> FpScalar:
    """
    [X^j] f. Zero outside the support.
    """
    return f.coeff(j)


def x_minus_one_coefficients(k: int, p: int) -> np.ndarray:
    """
    Coefficients of (X-1)^k, low degree first: entry j is (-1)^(k-j) C(k, j) mod p.
    """
    if k < 0:
        raise ValueError("Exponent must be non-negative, got {k:d}".format(k=k))
    j = np.arange(k + 1, dtype=np.int64)
    signs = np.where((k - j) % 2 == 0, 1, p - 1)
    return binom_mod_p_array(k, j, p) * signs % p


def x_minus_one_power(k: int, p: Union[int, FpContext]) -> XPoly:
    """
    (X-1)^k with coefficients read off by Lucas' theorem.
    """
    ctx = _ctx(p)
    return XPoly(x_minus_one_coefficients(k, ctx.p), ctx)


def x_minus_one_power_by_squaring(k: int, p: Union[int, FpContext]) -> XPoly:
    ctx = _ctx(p)
    return XPoly([-1, 1], ctx) ** k


def frobenius_decomposition(k: int, p: Union[int, FpContext]) -> Tuple[int, int, XPoly]:
    """
    Writes k = k' p + k_0 with 0 <= k_0 < p and returns (k', k_0, (X^p-1)^k' (X-1)^k_0).
    In characteristic p the product equals (X-1)^k.
    """
    ctx = _ctx(p)
    k_prime, k_0 = divmod(k, ctx.p)
    x_p_minus_one = XPoly.monomial(ctx.p, ctx) - XPoly.one(ctx)
    return k_prime, k_0, (x_p_minus_one ** k_prime) * x_minus_one_power_by_squaring(k_0, ctx)


def upper_half_vanishes(k: int, p: int) -> bool:
    """
    Model case of the range condition with g = 1: [X^j](X-1)^k = 0 for (k+1)/2 <= j < k.
    For k > 2 this holds exactly when k is q or 2q for a power q of p.
    """
    if k < 1:
        raise ValueError("k must be positive, got {k:d}".format(k=k))
    window = x_minus_one_coefficients(k, p)[(k + 2) // 2:k]
    return not np.any(window)


def is_q_or_two_q(k: int, p: int) -> bool:
    return is_power_of(k, p) or (k % 2 == 0 and is_power_of(k // 2, p))
