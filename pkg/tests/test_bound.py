from math import comb

import pytest
from hypothesis import given, strategies as st

from e510bound import bound
from e510bound.bound import (UNBOUNDED, admissible_tops, candidates, cell_dimension_expected,
                             check_table, degree_bound, degree_bound_report, frobenius_sides,
                             golden_lists, pass1, table_cell, top_condition_holds, xi_pass)
from e510bound.sl5rep import fundamental, weyl_dim


def test_table_matches_golden():
    res = check_table()
    assert len(res) == 20
    assert sum(len(v) for v in bound.golden_table().values()) == 82
    assert all(r["match"] for r in res.values()), {k: r for k, r in res.items() if not r["match"]}


@pytest.mark.parametrize("i", range(5))
def test_top_exterior_power_column(i):
    assert table_cell(10, i) == {fundamental(i): 1}


@pytest.mark.parametrize("j", range(11))
@pytest.mark.parametrize("i", range(5))
def test_cell_dimensions(j, i):
    assert table_cell(j, i).dim() == comb(10, j) * weyl_dim(fundamental(i)) == cell_dimension_expected(j, i)


def test_small_cells():
    assert table_cell(0, 0) == {(0, 0, 0, 0): 1}
    assert table_cell(1, 0) == {(0, 0, 1, 0): 1}
    assert table_cell(2, 0) == {(0, 1, 0, 1): 1}
    with pytest.raises(ValueError):
        table_cell(11, 0)


def test_admissible_tops():
    assert admissible_tops(12) == [(1, 10), (2, 8)]
    assert admissible_tops(10) == [(0, 10), (1, 8), (2, 6)]
    assert admissible_tops(15) == []
    assert admissible_tops(2) == [(0, 2), (1, 0)]


def test_top_condition():
    assert top_condition_holds(0, 3, (7, 7, 7, 7))
    # Lambda^10(s*) is trivial, so (1|10) admits exactly the omega_i
    for i in range(5):
        assert top_condition_holds(1, 10, fundamental(i))
    assert not top_condition_holds(1, 10, (1, 1, 0, 0))
    # n = 2 only looks at omega_1
    assert top_condition_holds(2, 8, (0, 0, 1, 0)) == ((0, 0, 1, 0) in table_cell(8, 1))
    assert top_condition_holds(2, 0, (1, 0, 0, 0))
    assert not top_condition_holds(2, 0, (0, 0, 0, 0))


@pytest.mark.parametrize("p", range(10))
def test_low_degrees_unbounded(p):
    assert candidates(p).status == UNBOUNDED


def test_candidates_high():
    assert candidates(14).candidates == []
    assert candidates(13).candidates == []
    assert candidates(12).candidates == [(0, 0, 1, 0)]
    assert candidates(12).discrepancy is None


def test_candidates_10():
    rep = candidates(10)
    want = sorted(tuple(w) for w in golden_lists()["degree_10"])
    assert len(want) == 16
    assert rep.candidates == want
    assert rep.discrepancy is None


def test_candidates_11_discrepancy():
    rep = candidates(11)
    published = {tuple(w) for w in golden_lists()["degree_11"]}
    assert published <= set(rep.candidates)
    assert set(rep.candidates) - published <= {(0, 0, 0, 0)}
    assert rep.discrepancy is not None
    assert rep.discrepancy["surplus"] == [[0, 0, 0, 0]]
    assert rep.discrepancy["missing"] == []


def test_candidates_are_exactly_the_pass_intersection():
    for p in (10, 11, 12):
        for lam in candidates(p).candidates:
            assert pass1(p, lam) and pass1(p + 1, lam)


def test_extra_passes_only_shrink():
    for p in (10, 11):
        base = set(candidates(p).candidates)
        assert set(candidates(p, extra_xi_passes=1).candidates) <= base


def test_degree_bound():
    assert degree_bound((0, 0, 1, 0)) == 12
    assert degree_bound((0, 1, 1, 0)) == 11
    assert degree_bound((2, 0, 1, 0)) == 10
    rep = degree_bound_report()
    assert rep["global_bound"] == 12 == golden_lists()["global_bound"]


def test_report_json_shape():
    obj = candidates(12).to_json_obj()
    assert obj["candidates"] == [[0, 0, 1, 0]]
    assert obj["published_list"] == [[0, 0, 1, 0]]
    assert candidates(5).to_json_obj()["status"] == UNBOUNDED


@given(st.integers(0, 10), st.integers(0, 4), st.tuples(*[st.integers(0, 2)] * 4))
def test_frobenius_duality(m, i, lam):
    left, right = frobenius_sides(m, i, lam)
    assert left == right


def test_worked_examples():
    assert table_cell(9, 0).support() == [(0, 1, 0, 0)]
    assert table_cell(10, 1).support() == [(1, 0, 0, 0)]
    assert table_cell(7, 4).support() == [(0, 0, 2, 1), (0, 1, 1, 0), (1, 0, 0, 1), (2, 0, 0, 2), (2, 0, 1, 0)]
    assert admissible_tops(14) == [(2, 10)]
    assert top_condition_holds(2, 10, (1, 0, 0, 0))
    assert not top_condition_holds(3, 4, (1, 0, 0, 0))
    assert top_condition_holds(2, 9, (0, 0, 1, 0))
    assert pass1(13, (1, 1, 0, 0)) and not pass1(13, (1, 0, 0, 0))
    assert pass1(10, (5, 3, 0, 2))
    assert pass1(14, (1, 0, 0, 0)) and not xi_pass(14, (1, 0, 0, 0))
    assert xi_pass(12, (0, 0, 1, 0)) and not xi_pass(12, (0, 0, 0, 1))
