from nmbu.maxclass.sequence.beta import AlphaSequence, BetaSequence, bracket_coeff, is_isomorphic
from nmbu.maxclass.sequence.constituents import ConstituentReport, constituents, constituents_via_lcs, project_type1
from nmbu.maxclass.sequence.genfunc import RationalSeries, adjoint_series, genfunc, subalgebra_transform
from nmbu.maxclass.sequence.jacobi import JacobiReport, eih_residual, jacobi_verify
from nmbu.maxclass.sequence.search import SearchReport, search_sequences
from nmbu.maxclass.sequence.sequence_file import read_sequence_file, write_sequence_file
