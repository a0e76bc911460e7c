"""Multi-start weighted search: restarts, stalls, and weighted acceptance."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domset import (
    Graph,
    MsrlsoConfig,
    brute_force_mds,
    brute_force_mwds,
    is_dominating_set,
    msrlso_run,
)

from conftest import cycle_graph, gnm_graph, star_graph


def _weighted(n: int, m: int, seed: int, lo: int = 1, hi: int = 9) -> Graph:
    from domset import Xoshiro256StarStar

    g = gnm_graph(n, m, seed=seed)
    rng = Xoshiro256StarStar(seed + 1)
    w = [float(lo + rng.randint_below(hi - lo + 1)) for _ in range(n)]
    return Graph(n, list(g.edges()), weights=w)


def test_config_validation():
    with pytest.raises(ValueError):
        MsrlsoConfig(p_greedy=1.5)
    with pytest.raises(ValueError):
        MsrlsoConfig(stall_cap=10, extended_cap=5)
    with pytest.raises(ValueError):
        MsrlsoConfig(max_cycles=0)
    MsrlsoConfig()  # defaults are valid


def test_defaults_match_documented_values():
    cfg = MsrlsoConfig()
    assert cfg.p_greedy == 0.5
    assert cfg.stall_cap == 2000
    assert cfg.extended_cap == 100000
    assert cfg.max_cycles == 5000


def test_finds_weighted_optimum_on_path():
    # Covering via the two cheap vertices beats any single expensive one.
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)],
              weights=[10.0, 1.0, 10.0, 1.0, 10.0])
    trace = msrlso_run(g, MsrlsoConfig(max_cycles=40, stall_cap=200, seed=1))
    assert sorted(trace.final.members) == [1, 3]
    assert trace.final.weight == 2.0


@settings(max_examples=20, deadline=None)
@given(st.integers(5, 12), st.integers(0, 1000))
def test_matches_weighted_oracle(n, seed):
    g = _weighted(n, 2 * n, seed)
    _, best_w = brute_force_mwds(g)
    trace = msrlso_run(
        g, MsrlsoConfig(max_cycles=60, stall_cap=300, seed=seed)
    )
    assert trace.final.weight == pytest.approx(best_w)
    assert is_dominating_set(g, trace.final.members)


def test_unit_weights_behave_as_unweighted_restarts():
    g = cycle_graph(15)
    _, gamma = brute_force_mds(g)
    trace = msrlso_run(g, MsrlsoConfig(max_cycles=30, seed=7))
    assert trace.final.size == gamma == 5
    assert trace.final.weight == float(gamma)


def test_trace_weights_non_increasing():
    g = _weighted(20, 40, seed=3)
    trace = msrlso_run(g, MsrlsoConfig(max_cycles=50, seed=3))
    values = [v for _, v in trace.best_series]
    assert values == sorted(values, reverse=True)
    assert values[-1] == pytest.approx(trace.final.weight)


def test_stop_reason_cycle_cap():
    g = _weighted(15, 30, seed=5)
    trace = msrlso_run(g, MsrlsoConfig(max_cycles=10, stall_cap=50, seed=5))
    assert trace.stop_reason == "cycle-cap"
    # Each cycle contributes its construction evaluation, so at least one
    # evaluation per cycle must have happened.
    assert trace.evaluations >= 10


def test_stop_reason_lower_bound():
    g = star_graph(7)  # optimum weight 1.0 (unit weights, center)
    trace = msrlso_run(
        g, MsrlsoConfig(max_cycles=1000, lower_bound=1.0, seed=2)
    )
    assert trace.stop_reason == "lower-bound-hit"
    assert trace.final.weight == 1.0


def test_stop_reason_time():
    g = _weighted(60, 150, seed=9)
    trace = msrlso_run(
        g, MsrlsoConfig(max_cycles=10**9, time_limit=0.2, seed=9)
    )
    assert trace.stop_reason == "time"


def test_deterministic_given_seed():
    g = _weighted(18, 36, seed=11)
    a = msrlso_run(g, MsrlsoConfig(max_cycles=25, seed=4))
    b = msrlso_run(g, MsrlsoConfig(max_cycles=25, seed=4))
    assert sorted(a.final.members) == sorted(b.final.members)
    assert a.evaluations == b.evaluations
    assert [v for _, v in a.best_series] == [v for _, v in b.best_series]


def test_greedy_probability_extremes_both_work():
    g = _weighted(14, 28, seed=13)
    _, best_w = brute_force_mwds(g)
    for p in (0.0, 1.0):
        trace = msrlso_run(
            g, MsrlsoConfig(p_greedy=p, max_cycles=80, stall_cap=300, seed=6)
        )
        assert trace.final.weight == pytest.approx(best_w)


def test_requires_two_vertices():
    g = Graph(1, [], weights=[2.0])
    with pytest.raises(ValueError):
        msrlso_run(g, MsrlsoConfig(max_cycles=5))
