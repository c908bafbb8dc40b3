import pytest

from kparallel import gf
from kparallel import linalg
from kparallel import oracle
from kparallel import search


def test_spreads_of_g_2_4_2():
    spreads = search.enumerate_spreads(2, 4, 2)
    assert len(spreads) == 56
    assert all(len(spread) == 5 for spread in spreads)
    assert spreads == sorted(set(spreads))


def test_enumerated_spreads_are_spreads():
    field = gf.field_new(2)
    subspaces = list(linalg.enumerate_grassmannian(4, 2, field))
    for spread in search.enumerate_spreads(field, 4, 2, subspaces)[:10]:
        assert oracle.is_spread([subspaces[i] for i in spread], 4, 2, 2).passed


def test_spreads_of_points():
    assert search.enumerate_spreads(3, 2, 1) == [(0, 1, 2, 3)]


def test_no_spreads_when_k_does_not_divide_n():
    assert search.enumerate_spreads(2, 5, 2) == []
    result = search.exhaustive_max_family(2, 5, 2)
    assert result.best == 0
    assert result.exact


def test_spread_enumeration_budget():
    with pytest.raises(search.SearchBoundError):
        search.enumerate_spreads(2, 4, 2, budget=10)


def test_max_family_of_g_2_4_2():
    result = search.exhaustive_max_family(2, 4, 2)
    assert result.best == 7
    assert result.upper_bound == 7
    assert result.exact
    assert len(result.witness) == 7
    assert oracle.pairwise_disjoint(result.witness).passed
    assert all(oracle.is_spread(spread, 4, 2, 2).passed for spread in result.witness)
    assert result.report.passed
    assert result.report.check("pairwise disjoint").passed


def test_max_family_with_small_budget():
    result = search.exhaustive_max_family(2, 4, 2, budget=3)
    assert not result.exact
    assert result.best < 7
    assert len(result.witness) == result.best


def test_budget_shared_with_spread_enumeration():
    # 10 nodes stop the enumeration of the 56 spreads
    result = search.exhaustive_max_family(2, 4, 2, budget=10)
    assert not result.exact
    assert result.upper_bound == 7
    assert result.nodes <= 10 + 1
    assert result.report.passed


def test_lower_bound_on_g_2_6_2():
    result = search.exhaustive_max_family(2, 6, 2, budget=1000)
    assert not result.exact
    assert result.upper_bound == 31
    assert len(result.witness) == result.best
    assert result.report.passed


def test_max_family_with_workers():
    result = search.exhaustive_max_family(2, 4, 2, workers=2)
    assert result.best == 7
    assert result.exact


def test_single_spread_family():
    result = search.exhaustive_max_family(2, 3, 1)
    assert result.best == 1
    assert result.exact


def test_search_bound():
    with pytest.raises(search.SearchBoundError):
        search.exhaustive_max_family(2, 20, 10)
