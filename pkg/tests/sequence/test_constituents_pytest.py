import pytest

from nmbu.maxclass.common import DepthExceededError, HypothesisViolationError
from nmbu.maxclass.sequence.beta import AlphaSequence, BetaSequence
from nmbu.maxclass.sequence.constituents import (CONSTITUENT_BOUND, ELL_EVEN, UPPER_BOUND, bridge_check,
                                                 bridge_polynomial, constituents, constituents_via_lcs, lcs_agrees,
                                                 project_type1)
from nmbu.maxclass.sequence.sequence_file import read_json_sequence, read_text_sequence
from tests import resources_path


def _json(name):
    with (resources_path / name).open() as f:
        return read_json_sequence(f)


def _text(name):
    with (resources_path / name).open() as f:
        return read_text_sequence(f)


def test_all_ones():
    seq = _json("all_ones_p5_n2.json")
    report = constituents(seq)
    assert report.ell == 4
    assert report.lengths() == [4] + [2] * 13
    assert report.constituents[0].entries == [1, 1]
    assert report.violations == []
    assert not report.later()[0].ordinary


def test_all_zero_is_metabelian_within_depth():
    seq = _text("all_zero_p3_n2.txt")
    report = constituents(seq)
    assert report.metabelian_within_depth
    assert report.ell is None
    assert report.lengths() == []
    assert str(report) == "metabelian within depth 12"


def test_exceptional_fixture():
    seq = _json("exceptional_p5_m1_n2.json")
    report = constituents(seq)
    assert report.ell == 26
    assert report.lengths() == [26, 25, 25]
    first, second, third = report.constituents[:3]
    assert (first.start, first.end, first.leading, first.trailing) == (3, 26, 25, 26)
    assert (second.start, second.end, second.leading, second.trailing) == (27, 51, 50, 51)
    assert second.ordinary and third.ordinary
    assert second.entries[-2:] == [1, 4]
    assert report.violations == []


def test_incomplete_tail():
    seq = _json("exceptional_p5_m1_n2.json")
    tail = constituents(seq).constituents[-1]
    assert (tail.start, tail.end, tail.length, tail.complete) == (77, None, None, False)
    assert tail.entries == [0, 0, 0, 0]

    unknown_length = constituents(seq.prefix(60)).constituents[-1]
    assert (unknown_length.start, unknown_length.end, unknown_length.length) == (52, None, None)
    assert len(unknown_length.entries) == 9

    cut = constituents(seq.prefix(75))
    assert cut.lengths() == [26, 25]
    assert cut.lengths(complete_only=False) == [26, 25, 25]
    last = cut.constituents[-1]
    assert (last.start, last.end, last.complete, last.ordinary) == (52, 76, False, None)
    assert len(last.entries) == 24


def test_corrupted_fixture_flags_odd_ell():
    report = constituents(_json("exceptional_p5_m1_n2_corrupted.json"))
    assert report.ell == 25
    assert {"lemma": ELL_EVEN, "ell": 25} in report.violations


def test_length_flags():
    # odd ell and a zero run past ell - n
    seq = BetaSequence(5, 2, [0, 1, 1] + [0] * 6 + [1])
    report = constituents(seq)
    assert report.ell == 5
    lemmas = [v["lemma"] for v in report.violations]
    assert ELL_EVEN in lemmas and UPPER_BOUND in lemmas
    short = BetaSequence(5, 2, [0] * 6 + [1, 1, 1, 1])
    assert CONSTITUENT_BOUND in [v["lemma"] for v in constituents(short).violations]


def test_lcs_on_exceptional_fixture():
    seq = _json("exceptional_p5_m1_n2.json")
    lcs = constituents_via_lcs(seq)
    assert lcs.starts == [3, 27, 52, 77]
    assert lcs.ell == 26
    assert lcs.lengths() == [26, 25, 25]
    assert lcs.reach == 82
    assert lcs_agrees(seq)


def test_lcs_refuses_when_beta_n_plus_one_is_nonzero():
    with pytest.raises(HypothesisViolationError):
        constituents_via_lcs(_json("all_ones_p5_n2.json"))


def test_lcs_on_all_zero():
    seq = _text("all_zero_p3_n2.txt")
    lcs = constituents_via_lcs(seq)
    assert lcs.ell is None and lcs.lengths() == []
    assert lcs_agrees(seq)
    with pytest.raises(DepthExceededError):
        constituents_via_lcs(seq, depth=13)


def test_bridge():
    seq = _json("exceptional_p5_m1_n2.json")
    report = constituents(seq)
    assert bridge_polynomial(seq, report).coefficient_list() == [4, 2]
    assert bridge_check(seq, report) is True
    assert bridge_check(_json("all_ones_p5_n2.json")) is True
    assert bridge_check(seq.prefix(40)) is None


def test_project_type1_example():
    alpha = AlphaSequence(5, [0, 0, 0, 1, 0, 0])
    assert project_type1(alpha, 2).values() == [0, 4, 1, 0]
    assert project_type1(alpha, 3).values() == [3, 1]


def test_project_type1_fixture():
    alpha = _text("type1_alpha_p3_q9.txt")
    assert isinstance(alpha, AlphaSequence)
    assert constituents(alpha).ell == 18
    beta = project_type1(alpha, 2)
    assert beta.n == 2 and beta.depth == 59
    assert (beta.value(17), beta.value(18), beta.value(26), beta.value(27)) == (1, 2, 1, 2)
    report = constituents(beta)
    assert report.ell == 18
    assert report.lengths() == [18, 9, 9, 9, 9]
    assert all(c.ordinary for c in report.later())


def test_project_type1_rejects():
    alpha = AlphaSequence(5, [0, 0, 0, 1, 0, 0])
    with pytest.raises(ValueError):
        project_type1(alpha, 1)
    with pytest.raises(DepthExceededError):
        project_type1(alpha, 4)


def test_report_to_dict():
    report = constituents(_json("exceptional_p5_m1_n2.json")).to_dict()
    assert report["ell"] == 26
    assert report["constituent_lengths"] == [26, 25, 25]
    assert report["metabelian_within_depth"] is False
    assert report["constituents"][1]["ordinary"] is True
