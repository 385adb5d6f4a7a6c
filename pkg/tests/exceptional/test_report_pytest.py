import pytest

from nmbu.maxclass.common import MathematicalAssertionError
from nmbu.maxclass.exceptional import report as report_module
from nmbu.maxclass.exceptional.construction import CONSTRUCTION_MODE, THEOREM_MODE, ExceptionalParams
from nmbu.maxclass.exceptional.report import abelian_ideal_check, even_length_coverage, theorem_exceptional_report
from nmbu.maxclass.sequence.beta import BetaSequence


def test_report_example():
    result = theorem_exceptional_report(ExceptionalParams(5, 2, 1, 2, mode=THEOREM_MODE))
    assert result["ell"] == 26
    assert result["constituent_lengths"][:3] == [26, 25, 25]
    assert result["depth"] == 79
    assert len(result["sequence"]) == 77
    assert result["genfunc"]["den"] == [1] + [0] * 24 + [4]
    assert result["checks"] == {"two_path": True, "jacobi": True, "ideal": True, "derivation_degrees": True,
                                "binomial_rewrite": True, "lengths": True, "even_length_coverage": True}
    assert result["even_length_coverage"] == {"q": 25, "n": 2, "ells": {1: 26}, "even_values": [26], "covered": True}


@pytest.mark.parametrize("m, n", [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)])
def test_theorem_holds_for_q_25(m, n):
    result = theorem_exceptional_report(ExceptionalParams(5, 2, m, n, mode=THEOREM_MODE))
    q = 25
    assert result["ell"] == (q + m if m % 2 else q + m + 1)
    lengths = result["constituent_lengths"]
    assert lengths[1] == (q if m % 2 else q - 1)
    assert all(length == q for length in lengths[2:])


@pytest.mark.parametrize("m, n", [(m, n) for n in range(2, 7) for m in range(1, n)])
def test_theorem_holds_for_q_49(m, n):
    result = theorem_exceptional_report(ExceptionalParams(7, 2, m, n, mode=THEOREM_MODE))
    q = 49
    assert result["ell"] == (q + m if m % 2 else q + m + 1)
    lengths = result["constituent_lengths"]
    assert lengths[1] == (q if m % 2 else q - 1)
    assert all(length == q for length in lengths[2:])
    assert result["even_length_coverage"]["covered"]
    assert all(result["checks"].values())


def test_m2_n4_lengths():
    result = theorem_exceptional_report(ExceptionalParams(5, 2, 2, 4, mode=THEOREM_MODE))
    assert result["constituent_lengths"] == [28, 24, 25]


@pytest.mark.parametrize("p, c, m, n", [(3, 2, 1, 2), (3, 3, 1, 2)])
def test_theorem_holds_for_p_3(p, c, m, n):
    result = theorem_exceptional_report(ExceptionalParams(p, c, m, n, mode=THEOREM_MODE))
    assert result["ell"] == p ** c + 1


def test_construction_mode_skips_length_claims():
    result = theorem_exceptional_report(ExceptionalParams(5, 1, 1, 3, mode=CONSTRUCTION_MODE))
    assert result["checks"]["lengths"] is None
    assert result["checks"]["even_length_coverage"] is None
    assert result["even_length_coverage"] is None
    assert result["checks"]["jacobi"]


def test_failed_check_raises_with_witness(monkeypatch):
    def shifted(params, depth):
        betas = [0] * (depth - params.n)
        return BetaSequence(params.p, params.n, betas)

    monkeypatch.setattr(report_module, "closed_form_sequence", shifted)
    with pytest.raises(MathematicalAssertionError) as e_info:
        theorem_exceptional_report(ExceptionalParams(5, 2, 1, 2, mode=THEOREM_MODE), 40)
    assert e_info.value.witness["closed_form"] == {"index": 25, "constructed": 2, "closed_form": 0}
    assert "closed_form" in str(e_info.value)


@pytest.mark.parametrize("m, n", [(1, 2), (2, 4)])
def test_abelian_ideal(m, n):
    result = abelian_ideal_check(ExceptionalParams(5, 2, m, n, mode=THEOREM_MODE))
    assert result["parent"]["n"] == m + 1
    assert result["passed"]
    assert result["ideal_commutes"] and result["e_q_acts_as_minus_shift"] and result["abelian_past_q"]
    assert result["series_e_q_plus_1"] and result["series_e_q"]


def test_even_length_coverage():
    coverage = even_length_coverage(5, 2, 4)
    assert coverage["ells"] == {1: 26, 2: 28, 3: 28}
    assert coverage["even_values"] == [26, 28]
    assert coverage["covered"]
    assert even_length_coverage(7, 2, 6)["covered"]


def test_uncovered_even_length_fails_the_report(monkeypatch):
    def uncovered(p, c, n):
        return {"q": p ** c, "n": n, "ells": {1: 26}, "even_values": [26], "covered": False}

    monkeypatch.setattr(report_module, "even_length_coverage", uncovered)
    with pytest.raises(MathematicalAssertionError) as e_info:
        theorem_exceptional_report(ExceptionalParams(5, 2, 1, 2, mode=THEOREM_MODE))
    assert e_info.value.witness["even_length_coverage"]["covered"] is False
    assert sorted(e_info.value.witness) == ["even_length_coverage"]
