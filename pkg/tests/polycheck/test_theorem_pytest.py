import io

import pytest

from nmbu.maxclass.common import BudgetExceededError, MathematicalAssertionError
from nmbu.maxclass.polycheck.theorem import (RangeCondition, allowed_large_k, allowed_small_k, check_classification,
                                             classification_cost, classify_admissible_k, compare_with_fixture,
                                             lemma_pairs, lemma_pairs_check, monic_candidates, range_condition_holds,
                                             read_fixture, realized_small_intervals, write_fixture)
from nmbu.maxclass.polycheck.xpoly import XPoly
from tests import resources_path


def test_range_condition_window():
    cond = RangeCondition(48, 3, 5)
    assert (cond.j_lo, cond.j_hi) == (26, 48)
    assert list(cond.window())[0] == 26


@pytest.mark.parametrize("k, n, p", [(48, 3, 4), (48, 5, 5), (4, 3, 5)])
def test_range_condition_rejects(k, n, p):
    with pytest.raises(ValueError):
        RangeCondition(k, n, p)


def test_range_condition_holds():
    assert range_condition_holds(XPoly([1, 3, 1], 5), RangeCondition(48, 3, 5))
    assert not range_condition_holds(XPoly([0, 0, 1], 5), RangeCondition(48, 3, 5))
    assert range_condition_holds(XPoly([0, 0, 1], 5), RangeCondition(27, 3, 5))


def test_range_condition_requires_monic_of_degree_n_minus_one():
    with pytest.raises(ValueError):
        range_condition_holds(XPoly([1, 2], 5), RangeCondition(27, 3, 5))
    with pytest.raises(ValueError):
        range_condition_holds(XPoly([1, 3, 2], 5), RangeCondition(27, 3, 5))
    with pytest.raises(ValueError):
        range_condition_holds(XPoly([1, 3, 1], 7), RangeCondition(27, 3, 5))


def test_monic_candidates():
    candidates = monic_candidates(5, 3)
    assert candidates.shape == (25, 3)
    assert candidates[0].tolist() == [0, 0, 1]
    assert candidates[7].tolist() == [1, 2, 1]


def test_classify_p5_n3_known_values():
    result = dict(classify_admissible_k(5, 3, 60))
    lists = {k: [g.coefficient_list() for g in gs] for k, gs in result.items()}
    assert min(result) == 5 and max(result) == 60
    assert len(lists[5]) == 25
    assert lists[6] == [[0, g1, 1] for g1 in range(5)]
    assert lists[7] == [[0, 0, 1]]
    assert lists[23] == [[1, 3, 1]]
    assert lists[24] == [[0, 4, 1], [1, 3, 1], [2, 2, 1], [3, 1, 1], [4, 0, 1]]
    assert len(lists[25]) == 25
    assert lists[26] == [[0, g1, 1] for g1 in range(5)]
    assert lists[27] == [[0, 0, 1]]
    assert lists[28] == []
    assert lists[48] == [[1, 3, 1]]
    assert all(lists[k] == [] for k in list(range(20, 23)) + list(range(29, 48)) + list(range(49, 61)))


def test_classify_matches_brute_force_condition():
    result = classify_admissible_k(5, 3, 40)
    for k, gs in result:
        cond = RangeCondition(k, 3, 5)
        expected = [XPoly(list(c), 5) for c in monic_candidates(5, 3)
                    if range_condition_holds(XPoly(list(c), 5), cond)]
        assert gs == expected


def test_classify_p5_n3_matches_fixture():
    result = classify_admissible_k(5, 3, 60)
    with (resources_path / "polyclassify_p5_n3.txt").open() as f:
        fixture = read_fixture(f)
    assert (5, 3, 48) in fixture
    assert compare_with_fixture(5, 3, result, fixture) == []


@pytest.mark.parametrize("p, n, k_max", [(5, 3, 130), (7, 3, 120), (7, 4, 120), (3, 2, 60)])
def test_classification_conclusions_hold(p, n, k_max):
    result = classify_admissible_k(p, n, k_max)
    for k, gs in result:
        if gs and k >= 4 * p:
            assert allowed_large_k(k, p, n)


def test_classify_p7_n5():
    result = classify_admissible_k(7, 5, 120)
    assert len(result) == 120 - 6


def test_classify_p3_admits_k_outside_small_intervals():
    result = dict(classify_admissible_k(3, 2, 20))
    assert result[9]
    assert not allowed_small_k(9, 3, 2)
    assert allowed_large_k(9, 3, 2)


def test_small_k_near_p_is_allowed():
    assert not allowed_small_k(5, 5, 3)
    assert allowed_large_k(5, 5, 3, min_power=1)
    assert not allowed_large_k(5, 5, 3)
    assert not allowed_large_k(11, 5, 3, min_power=1)
    check_classification(5, 3, [(5, [XPoly([1, 1, 1], 5)]), (7, [XPoly([0, 0, 1], 5)])])


def test_check_classification_detects_forbidden_small_k():
    with pytest.raises(MathematicalAssertionError) as e_info:
        check_classification(5, 3, [(11, [XPoly([0, 0, 1], 5)])])
    assert e_info.value.witness["k"] == 11


def test_divisibility_is_checked_at_q_equal_p():
    admissible = dict(classify_admissible_k(5, 3, 8))[6]
    assert admissible and all(g.coeff(0) == 0 for g in admissible)
    check_classification(5, 3, [(6, admissible)])
    with pytest.raises(MathematicalAssertionError) as e_info:
        check_classification(5, 3, [(6, [XPoly([1, 1, 1], 5)])])
    assert e_info.value.witness == {"k": 6, "q": 5, "g": [1, 1, 1]}


def test_realized_small_intervals():
    result = classify_admissible_k(5, 3, 30)
    realized = realized_small_intervals(5, 3, result)
    assert set(realized) == {"(n+1, p)", "(2p-n, 2p)", "(3p-n, 3p)", "4p-n+1"}
    assert all(isinstance(ks, list) for ks in realized.values())


def test_budget():
    assert classification_cost(5, 3, 100) == 2500
    with pytest.raises(BudgetExceededError) as e_info:
        classify_admissible_k(5, 3, 100, budget=1000)
    assert e_info.value.cost == 2500
    assert e_info.value.budget == 1000


def test_classify_rejects_bad_parameters():
    with pytest.raises(ValueError):
        classify_admissible_k(4, 3, 30)
    with pytest.raises(ValueError):
        classify_admissible_k(5, 5, 30)


def test_classify_with_workers_matches_serial():
    serial = classify_admissible_k(5, 3, 40, workers=1)
    parallel = classify_admissible_k(5, 3, 40, workers=2)
    assert serial == parallel


def test_check_classification_detects_forbidden_k():
    bogus = [(40, [XPoly([1, 3, 1], 5)])]
    with pytest.raises(MathematicalAssertionError) as e_info:
        check_classification(5, 3, bogus)
    assert e_info.value.witness["k"] == 40


def test_check_classification_detects_wrong_polynomial_at_two_q():
    bogus = [(48, [XPoly([0, 0, 1], 5)])]
    with pytest.raises(MathematicalAssertionError) as e_info:
        check_classification(5, 3, bogus)
    assert e_info.value.witness["q"] == 25


def test_lemma_pairs_p5():
    assert set(lemma_pairs(5, 60)) == {(2, 3), (3, 2), (4, 1), (5, 0), (9, 1), (24, 1), (25, 0), (49, 1)}
    assert set(lemma_pairs(5, 60, strengthened=True)) == {(2, 3), (4, 1), (5, 0), (24, 1), (25, 0)}
    assert lemma_pairs_check(5, 30) == [(2, 3), (3, 2), (4, 1), (5, 0), (9, 1), (24, 1), (25, 0)]


@pytest.mark.parametrize("p", [3, 5, 7])
def test_lemma_pairs_check_up_to_two_p_squared(p):
    pairs = lemma_pairs_check(p, 2 * p * p)
    assert (2, -2 % p) in pairs
    assert (p * p, 0) in pairs


def test_fixture_round_trip_with_comment():
    result = classify_admissible_k(5, 3, 30)
    buffer = io.StringIO()
    write_fixture(buffer, 5, 3, result, comment="p=5, n=3")
    buffer.seek(0)
    assert buffer.getvalue().startswith("# p=5, n=3\n")
    fixture = read_fixture(buffer)
    assert fixture[(5, 3, 27)] == [[0, 0, 1]]
    assert fixture[(5, 3, 28)] == []
    assert compare_with_fixture(5, 3, result, fixture) == []


def test_compare_with_fixture_reports_mismatch():
    result = classify_admissible_k(5, 3, 30)
    assert compare_with_fixture(5, 3, result, {(5, 3, 27): [[1, 0, 1]], (7, 3, 27): []}) == [27]


def test_malformed_fixture_line():
    with pytest.raises(AssertionError):
        read_fixture(io.StringIO("5, 3, 27: [[0,0,1]]\n"))
