from nmbu.maxclass.arith.field import (FpContext, FpScalar, binom_mod_p, binom_mod_p_array, is_power_of,
                                       lucas_binom, lucas_symmetry_check, rank_mod_p, vandermonde_check)
from nmbu.maxclass.arith.polynomial import NEGATIVE_INFINITY, Polynomial, TPoly, tpoly_arith
