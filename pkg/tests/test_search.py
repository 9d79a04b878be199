from math import comb

import pytest

from oracles import adjacency, count_converting, min_conversion
from thresholdlab.closed_form import Finite, Inconvertible
from thresholdlab.dynamics import is_conversion_set
from thresholdlab.graph_core import build_corona, build_cycle, build_double_corona
from thresholdlab.search import BudgetExceeded, brute_force_min, count_converting_sets


def test_double_corona_3_5_minimum():
    rep = brute_force_min(build_double_corona(3, 5), 2)
    assert rep.minimum == Finite(3)
    assert is_conversion_set(build_double_corona(3, 5), rep.witness, 2)


def test_cycle_minimum():
    assert brute_force_min(build_cycle(5), 2).minimum == Finite(3)


def test_double_corona_4_2():
    g = build_double_corona(4, 2)
    rep = brute_force_min(g, 2)
    assert rep.minimum == Finite(3)
    # sizes 0..2 found nothing; size 3 enumerated in full
    assert rep.tallies[2] == (comb(16, 2), 0)
    assert rep.tallies[3][0] == comb(16, 3)
    assert rep.sets_examined == sum(comb(16, m) for m in range(4))
    assert len(rep.witness) == 3


def test_witness_is_lexicographically_first():
    g = build_double_corona(4, 2)
    nbrs = adjacency(g.num_vertices, g.edges())
    size, first = min_conversion(nbrs, 2)
    assert brute_force_min(g, 2).witness == first
    assert brute_force_min(g, 2, workers=4).witness == first


def test_inconvertible_reported():
    rep = brute_force_min(build_double_corona(3, 1), 5)
    assert rep.minimum == Inconvertible(9)
    assert rep.witness == frozenset(range(9))


def test_size_limit_without_answer():
    rep = brute_force_min(build_cycle(7), 2, size_limit=3)
    assert rep.minimum is None and rep.witness is None


def test_budget_refusal():
    with pytest.raises(BudgetExceeded):
        brute_force_min(build_double_corona(5, 3), 2, budget=1000)
    with pytest.raises(BudgetExceeded):
        count_converting_sets(build_corona(5, 3), 2, 6, budget=10)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("THRESHOLDLAB_BUDGET", "50")
    with pytest.raises(BudgetExceeded):
        brute_force_min(build_corona(4, 2), 2)


def test_counts():
    g = build_corona(3, 1)
    assert count_converting_sets(g, 2, 4) == 3
    assert count_converting_sets(g, 3, 5) == 3
    assert count_converting_sets(g, 3, 2) == 0
    for k in (1, 3, 7):
        assert count_converting_sets(build_double_corona(3, 2), k, 12) == 1


def test_counts_match_naive_oracle():
    for g in (build_corona(3, 2), build_double_corona(3, 1), build_corona(4, 1)):
        nbrs = adjacency(g.num_vertices, g.edges())
        for k in (1, 2, 3):
            for size in range(g.num_vertices + 1):
                assert count_converting_sets(g, k, size) == count_converting(nbrs, k, size)


def test_pruning_is_sound():
    for g in (build_corona(3, 1), build_corona(4, 2), build_double_corona(3, 1), build_double_corona(3, 2)):
        for k in range(1, 6):
            pruned = brute_force_min(g, k)
            full = brute_force_min(g, k, prune=False)
            assert pruned.minimum == full.minimum
            assert pruned.witness == full.witness
            for size in range(g.num_vertices + 1):
                assert count_converting_sets(g, k, size) == count_converting_sets(g, k, size, prune=False)


def test_parallel_matches_serial():
    g = build_double_corona(4, 2)
    assert count_converting_sets(g, 2, 5, workers=3) == count_converting_sets(g, 2, 5)


def test_converting_fraction_grows_with_size():
    g = build_double_corona(4, 1)
    fractions = [count_converting_sets(g, 2, m) / comb(g.num_vertices, m) for m in range(g.num_vertices + 1)]
    assert fractions == sorted(fractions)
    assert fractions[-1] == 1


def test_report_serializes():
    d = brute_force_min(build_cycle(5), 2).to_dict()
    assert d["minimum"] == "3" and d["tallies"]["3"][0] == 10
