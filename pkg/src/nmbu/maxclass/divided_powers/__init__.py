from nmbu.maxclass.divided_powers.algebra import DividedPowerAlgebra, DividedPowerElement, Endo, dp_mul
from nmbu.maxclass.divided_powers.semidirect import (SemidirectElement, make_generators, metabelian_check,
                                                     proportionality, semidirect_bracket)
