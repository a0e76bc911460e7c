"""Acceptance gate: one test per shipped guarantee, one verdict line each.

Run ``pytest tests/test_acceptance.py -v`` for the full gate; the statistical
generator bands (criterion 6) take about an hour and are opt-in via
``-m slow``.  Each test finishes by recording an ``ACCEPTANCE C<k>: ...``
line that is replayed in the terminal summary.
"""

from __future__ import annotations

import math
import warnings
from pathlib import Path

import pytest

from domset import (
    AcoConfig,
    BAParams,
    ExperimentSpec,
    Graph,
    MsrlsoConfig,
    RlsoConfig,
    UnitDiskParams,
    WeightedRandomParams,
    Xoshiro256StarStar,
    aco_run,
    brute_force_mds,
    brute_force_mwds,
    child_seed,
    emit_lp,
    gen_ba,
    gen_unit_disk,
    gen_weighted_random,
    greedy_map,
    greedy_mds,
    ingest_bound,
    is_dominating_set,
    load_graph,
    msrlso_run,
    parse_lp,
    redundant_vertices,
    repeated_greedy,
    rlso_run,
    run_experiment,
    set_to_permutation,
)
from domset.aco import VARIANTS

from conftest import (
    HAVE_SCIPY,
    cycle_graph,
    gnm_graph,
    path_graph,
    record_acceptance,
    star_graph,
)

DATA = Path(__file__).resolve().parent.parent / "data"

#: published domination numbers for the named benchmark graphs
KNOWN_GAMMA = {
    "zachary": 4,
    "lesmis": 10,
    "david": 2,
    "huck": 9,
    "anna": 12,
    "dolphins": 14,
}
#: graphs where best-of-1000 randomized greedy also attains the optimum
GREEDY_EXACT = ("zachary", "lesmis", "david", "huck", "anna")


def _harmonic(k: int) -> float:
    return sum(1.0 / i for i in range(1, k + 1))


def _max_degree(g: Graph) -> int:
    return int(g.degrees.max())


def test_c1_known_optimum_reproduction():
    present, missing = [], []
    for name, gamma in KNOWN_GAMMA.items():
        path = DATA / f"{name}.txt"
        (present if path.exists() else missing).append((name, gamma))
    assert [n for n, _ in present][:2] == ["zachary", "lesmis"], (
        "bundled instances are required for the gate"
    )
    for name, gamma in present:
        g = load_graph(DATA / f"{name}.txt")
        for k in range(5):
            cfg = RlsoConfig(
                time_limit=60.0,
                lower_bound=gamma,
                seed=child_seed(0xC1, k),
            )
            trace = rlso_run(g, cfg)
            assert trace.final.is_dominating
            assert trace.final.size == gamma, (
                f"{name} seed {k}: got {trace.final.size}, optimum {gamma}"
            )
        if name in GREEDY_EXACT:
            stats = repeated_greedy(g, 1000, seed=child_seed(0xC1, 99))
            assert stats.min == gamma, (
                f"{name}: greedy best-of-1000 {stats.min} != {gamma}"
            )
    if missing:
        names = ", ".join(n for n, _ in missing)
        warnings.warn(
            f"instances not bundled, place them under data/ to widen the "
            f"gate: {names}"
        )
        record_acceptance(
            f"ACCEPTANCE C1: PASS on available instances "
            f"({', '.join(n for n, _ in present)}); "
            f"missing files skipped: {names}"
        )
    else:
        record_acceptance("ACCEPTANCE C1: PASS (all six instances)")


def test_c2_social_samples():
    targets = [
        (DATA / "social" / "gplus_500.txt", 42),
        (DATA / "social" / "pokec_500.txt", 16),
    ]
    missing = [str(p) for p, _ in targets if not p.exists()]
    if missing:
        record_acceptance(
            f"ACCEPTANCE C2: SKIP (datasets not present: {', '.join(missing)})"
        )
        pytest.skip(f"social samples not present: {', '.join(missing)}")
    for path, gamma in targets:
        g = load_graph(path)
        trace = rlso_run(
            g,
            RlsoConfig(time_limit=600.0, lower_bound=gamma, seed=11),
        )
        assert trace.final.size == gamma
        for variant in VARIANTS:
            cfg = AcoConfig(
                variant=variant,
                time_limit=600.0,
                lower_bound=gamma,
                seed=child_seed(0xC2, hash(variant) & 0xFFFF),
            )
            out = aco_run(g, cfg)
            assert out.final.size == gamma
    record_acceptance("ACCEPTANCE C2: PASS")


def _c3_instances():
    for k in range(200):
        rng = Xoshiro256StarStar(child_seed(0xC3, k))
        n = 8 + rng.randint_below(9)
        density = 0.1 + 0.4 * rng.random()
        m = max(1, round(density * n * (n - 1) / 2))
        yield gnm_graph(n, m, seed=child_seed(0xC30, k))
    for k in range(3, 17):
        yield path_graph(k)
        yield cycle_graph(k)
    for k in range(2, 13):
        yield star_graph(k)


def test_c3_oracle_equivalence():
    count = 0
    for idx, g in enumerate(_c3_instances()):
        _, gamma = brute_force_mds(g)
        trace = rlso_run(
            g,
            RlsoConfig(
                max_iterations=100_000,
                lower_bound=gamma,
                seed=child_seed(0xC31, idx),
            ),
        )
        assert trace.final.size == gamma, f"instance {idx}: search missed γ"
        for vi, variant in enumerate(VARIANTS):
            cfg = AcoConfig(
                variant=variant,
                max_evaluations=10_000,
                lower_bound=gamma,
                seed=child_seed(0xC32, idx * 8 + vi),
            )
            out = aco_run(g, cfg)
            assert out.final.size == gamma, (
                f"instance {idx}: {variant} got {out.final.size} != {gamma}"
            )
        rng = Xoshiro256StarStar(child_seed(0xC33, idx))
        sol = greedy_mds(g, rng)
        bound = _harmonic(_max_degree(g)) * gamma
        assert sol.size <= bound + 1e-9, (
            f"instance {idx}: greedy {sol.size} above harmonic bound {bound}"
        )
        count += 1
    record_acceptance(
        f"ACCEPTANCE C3: PASS ({count} instances, search = exact optimum on "
        f"all, greedy within harmonic bound)"
    )


def test_c4_decode_containment():
    for k in range(1000):
        rng = Xoshiro256StarStar(child_seed(0xC4, k))
        n = 5 + rng.randint_below(36)
        m_cap = min(3 * n, n * (n - 1) // 2)
        m = 1 + rng.randint_below(m_cap)
        g = gnm_graph(n, m, seed=child_seed(0xC40, k))
        members = {v for v in range(n) if rng.random() < 0.35}
        dominated = [False] * n
        for v in members:
            dominated[v] = True
            for u in g.neighbors(v):
                dominated[u] = True
        for v in range(n):
            if not dominated[v]:
                cands = [v] + [int(u) for u in g.neighbors(v)]
                pick = cands[rng.randint_below(len(cands))]
                members.add(pick)
                dominated[pick] = True
                for u in g.neighbors(pick):
                    dominated[u] = True
        assert is_dominating_set(g, members)
        perm = set_to_permutation(g, members, rng)
        out = greedy_map(g, perm)
        assert out.is_dominating
        assert out.members <= members, f"pair {k}: decode left the seed set"
    record_acceptance("ACCEPTANCE C4: PASS (1000 containment pairs)")


def test_c5_monotonicity_and_validity():
    plain = [
        gnm_graph(40, 80, seed=1),
        gnm_graph(80, 200, seed=2),
        gen_ba(BAParams(n=100, w_edges=2, seed=3)),
        path_graph(50),
        star_graph(30),
        gnm_graph(60, 400, seed=4),
    ]
    for i, g in enumerate(plain):
        trace = rlso_run(
            g, RlsoConfig(max_iterations=10_000, seed=child_seed(0xC5, i))
        )
        values = [v for _, v in trace.best_series]
        assert all(a >= b for a, b in zip(values, values[1:]))
        assert trace.final.is_dominating
        assert trace.iterations >= 10_000
        rng = Xoshiro256StarStar(child_seed(0xC50, i))
        assert greedy_mds(g, rng).is_dominating
    weighted = [
        gen_weighted_random(WeightedRandomParams(n=40, m=100, seed=5)),
        gen_weighted_random(
            WeightedRandomParams(
                n=30, m=60, weight_scheme=("degree-squared",), seed=6
            )
        ),
    ]
    for i, g in enumerate(weighted):
        trace = msrlso_run(
            g, MsrlsoConfig(max_cycles=6, seed=child_seed(0xC51, i))
        )
        values = [v for _, v in trace.best_series]
        assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))
        assert trace.final.is_dominating
        assert trace.iterations >= 10_000
    for vi, variant in enumerate(VARIANTS):
        for gi, g in enumerate((plain[0], plain[2])):
            cfg = AcoConfig(
                variant=variant,
                max_evaluations=10_000,
                seed=child_seed(0xC52, vi * 4 + gi),
            )
            out = aco_run(g, cfg)
            values = [v for _, v in out.best_series]
            assert all(a >= b for a, b in zip(values, values[1:]))
            assert out.final.is_dominating
            assert not redundant_vertices(g, out.final), (
                f"{variant}: redundant vertex survived cleanup"
            )
            assert out.evaluations >= 10_000
    record_acceptance(
        "ACCEPTANCE C5: PASS (traces non-increasing, outputs dominating, "
        "colony outputs redundancy-free)"
    )


@pytest.mark.slow
def test_c6_generator_statistical_bands():
    ba_mean = _band_mean_ba(instances=10, time_limit=180.0)
    lo, hi = 93.7 * 0.95, 93.7 * 1.05
    assert lo <= ba_mean <= hi, f"BA band: mean {ba_mean} outside [{lo}, {hi}]"
    ud_mean, greedy_mean = _band_mean_unit_disk(instances=10, time_limit=180.0)
    assert 66.7 <= ud_mean <= 85.0, f"unit-disk mean {ud_mean} out of band"
    assert ud_mean <= greedy_mean, (
        f"search mean {ud_mean} worse than greedy mean {greedy_mean}"
    )
    record_acceptance(
        f"ACCEPTANCE C6: PASS (BA mean {ba_mean:.1f} in [{lo:.1f}, {hi:.1f}]; "
        f"unit-disk mean {ud_mean:.1f} in [66.7, 85.0], greedy "
        f"{greedy_mean:.1f})"
    )


def _band_mean_ba(instances: int, time_limit: float) -> float:
    sizes = []
    for k in range(instances):
        g = gen_ba(BAParams(n=500, w_edges=2, seed=child_seed(0xC6A, k)))
        trace = rlso_run(
            g, RlsoConfig(time_limit=time_limit, seed=child_seed(0xC6B, k))
        )
        sizes.append(trace.final.size)
    return sum(sizes) / len(sizes)


def _band_mean_unit_disk(
    instances: int, time_limit: float
) -> tuple[float, float]:
    sizes, greedy_sizes = [], []
    for k in range(instances):
        g, _ = gen_unit_disk(
            UnitDiskParams(
                n=1000, grid_side=2000, range_=150.0, seed=child_seed(0xC6C, k)
            )
        )
        trace = rlso_run(
            g, RlsoConfig(time_limit=time_limit, seed=child_seed(0xC6D, k))
        )
        sizes.append(trace.final.size)
        rng = Xoshiro256StarStar(child_seed(0xC6E, k))
        greedy_sizes.append(greedy_mds(g, rng).size)
    return sum(sizes) / len(sizes), sum(greedy_sizes) / len(greedy_sizes)


def test_c7_weighted_optimum_reproduction():
    smpi_files = sorted((DATA / "smpi").glob("*50_50*")) if (
        DATA / "smpi"
    ).is_dir() else []
    if smpi_files:
        means = []
        for path in smpi_files:
            g = load_graph(path)
            best = []
            for k in range(5):
                cfg = MsrlsoConfig(
                    time_limit=600.0, seed=child_seed(0xC7, k)
                )
                best.append(msrlso_run(g, cfg).final.weight)
            means.append(sum(best) / len(best))
        mean = sum(means) / len(means)
        assert abs(mean - 531.3) <= 0.01 * 531.3
        record_acceptance(
            f"ACCEPTANCE C7: PASS (loaded instances, mean {mean:.1f} "
            f"within 1% of 531.3)"
        )
        return
    warnings.warn(
        "weighted benchmark files not present under data/smpi/; running the "
        "exhaustive-optimum substitute check"
    )
    for k in range(100):
        rng = Xoshiro256StarStar(child_seed(0xC70, k))
        n = 6 + rng.randint_below(9)
        m_cap = min(3 * n, n * (n - 1) // 2)
        m = (n - 1) + rng.randint_below(m_cap - (n - 1) + 1)
        g = gen_weighted_random(
            WeightedRandomParams(
                n=n,
                m=m,
                weight_scheme=("uniform", 20, 70),
                seed=child_seed(0xC71, k),
            )
        )
        _, opt = brute_force_mwds(g)
        cfg = MsrlsoConfig(
            max_cycles=40, lower_bound=opt, seed=child_seed(0xC72, k)
        )
        trace = msrlso_run(g, cfg)
        assert abs(trace.final.weight - opt) < 1e-6, (
            f"instance {k}: weight {trace.final.weight} != optimum {opt}"
        )
    record_acceptance(
        "ACCEPTANCE C7: PASS (substitute: 100 weighted instances match the "
        "exhaustive optimum; benchmark files absent)"
    )


def _lp_optimum(model) -> float:
    from scipy.optimize import linprog

    variables = model.variables()
    index = {name: i for i, name in enumerate(variables)}
    c = [model.objective.get(name, 0.0) for name in variables]
    a_ub, b_ub = [], []
    for _, coeffs, sense, rhs in model.constraints:
        row = [0.0] * len(variables)
        for name, coef in coeffs.items():
            row[index[name]] = coef
        if sense == ">=":
            a_ub.append([-x for x in row])
            b_ub.append(-rhs)
        else:
            a_ub.append(row)
            b_ub.append(rhs)
    bounds = [model.bounds.get(name, (0.0, 1.0)) for name in variables]
    res = linprog(c, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method="highs")
    assert res.status == 0, res.message
    return float(res.fun)


def test_c8_lp_bound_sanity():
    if not HAVE_SCIPY:
        record_acceptance("ACCEPTANCE C8: SKIP (no LP solver available)")
        pytest.skip("scipy not available to solve the emitted relaxations")
    c4 = cycle_graph(4)
    value = _lp_optimum(parse_lp(emit_lp(c4)))
    assert abs(value - 4.0 / 3.0) < 1e-6
    _, gamma_c4 = brute_force_mds(c4)
    assert ingest_bound(value, problem="mds") == 2 == gamma_c4
    checked = 0
    instances = [gnm_graph(8 + k % 9, 6 + 2 * (k % 7), seed=900 + k) for k in range(30)]
    instances += [path_graph(k) for k in range(3, 10)]
    instances += [cycle_graph(k) for k in range(3, 10)]
    instances += [star_graph(k) for k in range(2, 8)]
    for g in instances:
        _, gamma = brute_force_mds(g)
        bound = ingest_bound(_lp_optimum(parse_lp(emit_lp(g))), problem="mds")
        assert bound <= gamma, f"relaxation bound {bound} exceeds γ={gamma}"
        checked += 1
    record_acceptance(
        f"ACCEPTANCE C8: PASS (C4 relaxation = 4/3 rounds to γ=2; bound ≤ γ "
        f"on {checked} instances)"
    )


def test_c9_experiment_determinism(tmp_path):
    spec = ExperimentSpec(
        instances=("ba:n=60,w=2,seed=11", str(DATA / "zachary.txt")),
        algorithm="rlso",
        repeats=3,
        max_iterations=4000,
        base_seed=77,
    )

    def rows_without_timing(records):
        from domset.experiments import CSV_FIELDS

        idx = CSV_FIELDS.index("elapsed_ms")
        out = []
        for r in records:
            row = [
                r.instance, r.algo, str(r.seed), f"{r.elapsed_ms:.3f}",
                str(r.evals), repr(r.best), r.stop_reason,
            ]
            del row[idx]
            out.append(",".join(row))
        return out

    first = rows_without_timing(run_experiment(spec, jobs=1))
    second = rows_without_timing(run_experiment(spec, jobs=1))
    assert first == second
    assert len(first) == 6
    record_acceptance(
        "ACCEPTANCE C9: PASS (identical seeds give identical records "
        "modulo timing)"
    )
