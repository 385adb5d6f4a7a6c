from nmbu.maxclass.polycheck.theorem import (RangeCondition, classify_admissible_k, lemma_pairs_check,
                                             range_condition_holds)
from nmbu.maxclass.polycheck.xpoly import XPoly, coeff, frobenius_decomposition, x_minus_one_power
