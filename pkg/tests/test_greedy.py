"""Greedy construction: correctness, tie-break fairness, weighted priority."""

from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domset import (
    Graph,
    Xoshiro256StarStar,
    brute_force_mds,
    child_seed,
    greedy_mds,
    greedy_mwds,
    is_dominating_set,
    repeated_greedy,
)

from conftest import cycle_graph, gnm_graph, path_graph, star_graph


def _harmonic(k: int) -> float:
    return sum(1.0 / i for i in range(1, k + 1))


def test_star_unique_first_pick(star5):
    # The center's gain (6) strictly dominates; no tie-break randomness.
    for seed in range(20):
        sol = greedy_mds(star5, Xoshiro256StarStar(seed))
        assert sorted(sol.members) == [0]


def test_p4_matches_oracle(p4):
    _, gamma = brute_force_mds(p4)
    assert gamma == 2
    for seed in range(50):
        sol = greedy_mds(p4, Xoshiro256StarStar(seed))
        assert sol.size == 2
        assert sol.is_dominating


def test_output_always_dominating():
    for seed in range(10):
        g = gnm_graph(25, 40, seed=seed)
        sol = greedy_mds(g, Xoshiro256StarStar(seed))
        assert is_dominating_set(g, sol.members)


def test_tie_break_uniform():
    # On a single edge both endpoints tie at gain 2; the winner should be
    # roughly uniform across seeds.
    g = Graph(2, [(0, 1)])
    picks = Counter()
    for k in range(1000):
        sol = greedy_mds(g, Xoshiro256StarStar(child_seed(77, k)))
        assert sol.size == 1
        picks[next(iter(sol.members))] += 1
    assert set(picks) == {0, 1}
    assert 400 <= picks[0] <= 600


@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(4, 14),
    mm=st.integers(3, 30),
    seed=st.integers(0, 10000),
)
def test_harmonic_bound_against_oracle(n, mm, seed):
    m = min(mm, n * (n - 1) // 2)
    g = gnm_graph(n, m, seed=seed)
    if g.max_degree < 1:
        return
    _, gamma = brute_force_mds(g)
    sol = greedy_mds(g, Xoshiro256StarStar(seed))
    assert sol.size <= _harmonic(g.max_degree) * gamma + 1e-9


def test_weighted_prefers_cheap_cover():
    # Star with an expensive center: covering by the three cheap leaves wins.
    g = Graph(4, [(0, 1), (0, 2), (0, 3)], weights=[100.0, 1.0, 1.0, 1.0])
    for seed in range(20):
        sol = greedy_mwds(g, Xoshiro256StarStar(seed))
        assert sorted(sol.members) == [1, 2, 3]
        assert sol.weight == 3.0


def test_weighted_single_vertex():
    g = Graph(1, [], weights=[7.5])
    sol = greedy_mwds(g, Xoshiro256StarStar(0))
    assert sorted(sol.members) == [0]
    assert sol.weight == 7.5


def test_unit_weights_reduce_to_unweighted():
    g = gnm_graph(20, 35, seed=3)
    gw = Graph(20, list(g.edges()), weights=[1.0] * 20)
    for seed in range(10):
        a = greedy_mds(g, Xoshiro256StarStar(seed))
        b = greedy_mwds(gw, Xoshiro256StarStar(seed))
        assert sorted(a.members) == sorted(b.members)


def test_weighted_on_unweighted_graph_uses_unit_weights():
    g = path_graph(6)
    for seed in range(5):
        a = greedy_mds(g, Xoshiro256StarStar(seed))
        b = greedy_mwds(g, Xoshiro256StarStar(seed))
        assert sorted(a.members) == sorted(b.members)


def test_repeated_greedy_aggregates():
    g = cycle_graph(9)
    stats = repeated_greedy(g, repeats=50, seed=5)
    assert len(stats.values) == 50
    assert stats.min <= stats.mean <= stats.max
    assert stats.best.size == stats.min
    assert stats.best.is_dominating
    assert stats.min >= 3  # gamma(C9) = 3


def test_repeated_greedy_single_run():
    g = path_graph(7)
    stats = repeated_greedy(g, repeats=1, seed=9)
    assert stats.min == stats.max == stats.mean


def test_repeated_greedy_star_deterministic(star5):
    stats = repeated_greedy(star5, repeats=25, seed=1)
    assert stats.min == stats.max == 1


def test_repeated_greedy_weighted():
    g = Graph(4, [(0, 1), (0, 2), (0, 3)], weights=[2.0, 9.0, 9.0, 9.0])
    stats = repeated_greedy(g, repeats=10, seed=3, weighted=True)
    assert stats.min == 2.0  # the cheap center covers everything
    assert stats.best.weight == 2.0


def test_repeated_greedy_rejects_bad_repeats(p4):
    with pytest.raises(ValueError):
        repeated_greedy(p4, repeats=0, seed=1)
