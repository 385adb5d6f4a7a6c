from nmbu.maxclass.exceptional.closed_form import (binomial_rewrite_check, closed_form_sequence,
                                                   first_constituent_closed_form, genfunc_closed_form,
                                                   later_constituents_closed_form)
from nmbu.maxclass.exceptional.construction import ConstructedAlgebra, ExceptionalParams, construct
from nmbu.maxclass.exceptional.report import abelian_ideal_check, even_length_coverage, theorem_exceptional_report
