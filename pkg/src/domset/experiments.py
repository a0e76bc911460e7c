"""Batch experiment harness: many runs, one CSV, aggregate tables.

An experiment is a list of instances crossed with a repeat count for one
algorithm.  Each run gets an independent seed derived from the base seed and
its task index, so re-running the same spec reproduces the same results —
byte-identical CSV except for the wall-clock column.  Runs execute on a
process pool; rows are emitted in task order regardless of completion order.

Instances are file paths, or generator specs of the form
``kind:key=value,...`` with kinds ``unit-disk`` (keys n, grid, range, seed),
``ba`` (n, w, seed) and ``weighted`` (n, m, lo, hi, seed — or scheme=deg2).
"""

from __future__ import annotations

import csv
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from time import perf_counter
from typing import List, Optional, Sequence

from .aco import AcoConfig, aco_run
from .generators import (
    BAParams,
    UnitDiskParams,
    WeightedRandomParams,
    gen_ba,
    gen_unit_disk,
    gen_weighted_random,
)
from .graph import Graph, load_graph
from .greedy import greedy_mds, greedy_mwds
from .lp import ingest_bound, read_bound_file
from .msrls import MsrlsoConfig, msrlso_run
from .order_search import RlsoConfig, rlso_run
from .rng import Xoshiro256StarStar, child_seed

__all__ = [
    "ALGORITHMS",
    "CSV_FIELDS",
    "ExperimentSpec",
    "RunRecord",
    "aggregate",
    "format_aggregate",
    "run_experiment",
    "write_csv",
]

ALGORITHMS = ("greedy", "rlso", "msrlso", "aco-ls", "aco-pp-ls", "aco-ls-s")

CSV_FIELDS = ("instance", "algo", "seed", "elapsed_ms", "evals", "best", "stop_reason")


@dataclass
class ExperimentSpec:
    """One experiment: instances x repeats of a single algorithm.

    ``lower_bound`` applies to every instance; when it is ``None`` and
    ``use_bound_files`` is set, a sidecar file ``<instance>.bound`` holding a
    relaxation optimum is ingested per instance if present.  The iteration,
    evaluation, and cycle caps make runs independent of wall-clock speed,
    which the reproducibility guarantee needs; a pure time limit reproduces
    results only as a band.
    """

    instances: List[str]
    algorithm: str
    repeats: int = 1
    time_limit: Optional[float] = None
    max_iterations: Optional[int] = None
    max_evaluations: Optional[int] = None
    max_cycles: Optional[int] = None
    lower_bound: Optional[float] = None
    use_bound_files: bool = True
    base_seed: int = 0

    def __post_init__(self):
        if not self.instances:
            raise ValueError("instance list must not be empty")
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"algorithm must be one of {ALGORITHMS}")
        if self.repeats < 1:
            raise ValueError("repeats must be >= 1")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


@dataclass
class RunRecord:
    """One row of experiment output; append-only, one per run."""

    instance: str
    algo: str
    seed: int
    elapsed_ms: float
    evals: int
    best: float
    stop_reason: str


def _parse_gen_spec(text: str):
    kind, _, body = text.partition(":")
    kv = {}
    for part in body.split(","):
        if not part:
            continue
        key, _, value = part.partition("=")
        kv[key.strip()] = value.strip()
    return kind, kv


def _instance_graph(instance: str) -> Graph:
    kind, _, _ = instance.partition(":")
    if kind == "unit-disk":
        _, kv = _parse_gen_spec(instance)
        p = UnitDiskParams(
            n=int(kv["n"]),
            grid_side=float(kv["grid"]),
            range_=float(kv["range"]),
            seed=int(kv.get("seed", "0")),
        )
        return gen_unit_disk(p)[0]
    if kind == "ba":
        _, kv = _parse_gen_spec(instance)
        p = BAParams(n=int(kv["n"]), w_edges=int(kv["w"]), seed=int(kv.get("seed", "0")))
        return gen_ba(p)
    if kind == "weighted":
        _, kv = _parse_gen_spec(instance)
        if kv.get("scheme") == "deg2":
            scheme: tuple = ("degree-squared",)
        else:
            scheme = ("uniform", int(kv.get("lo", "20")), int(kv.get("hi", "70")))
        p = WeightedRandomParams(
            n=int(kv["n"]),
            m=int(kv["m"]),
            weight_scheme=scheme,
            seed=int(kv.get("seed", "0")),
        )
        return gen_weighted_random(p)
    return load_graph(instance)


@lru_cache(maxsize=32)
def _cached_graph(instance: str) -> Graph:
    return _instance_graph(instance)


def _resolve_bound(spec: ExperimentSpec, instance: str) -> Optional[float]:
    if spec.lower_bound is not None:
        return spec.lower_bound
    if spec.use_bound_files and not instance.partition(":")[0] in (
        "unit-disk",
        "ba",
        "weighted",
    ):
        sidecar = str(instance) + ".bound"
        if os.path.exists(sidecar):
            return read_bound_file(sidecar)
    return None


def _run_task(args) -> RunRecord:
    (instance, algo, seed, time_limit, max_iters, max_evals, max_cycles, bound) = args
    t0 = perf_counter()
    try:
        g = _cached_graph(instance)
        if algo == "greedy":
            rng = Xoshiro256StarStar(seed)
            if g.weights is not None:
                sol = greedy_mwds(g, rng)
                best = sol.weight
            else:
                sol = greedy_mds(g, rng)
                best = float(sol.size)
            evals, reason = 1, "completed"
        elif algo == "rlso":
            lb = None if bound is None else int(ingest_bound(bound, "mds"))
            cfg = RlsoConfig(
                time_limit=time_limit,
                max_iterations=max_iters,
                lower_bound=lb,
                seed=seed,
            )
            trace = rlso_run(g, cfg)
            best = float(trace.final.size)
            evals, reason = trace.evaluations, trace.stop_reason
        elif algo == "msrlso":
            lb = None if bound is None else float(bound)
            cfg = MsrlsoConfig(
                time_limit=time_limit,
                lower_bound=lb,
                seed=seed,
                **({} if max_cycles is None else {"max_cycles": max_cycles}),
            )
            trace = msrlso_run(g, cfg)
            best = float(trace.final.weight)
            evals, reason = trace.evaluations, trace.stop_reason
        else:
            lb = None if bound is None else int(ingest_bound(bound, "mds"))
            cfg = AcoConfig(
                variant=algo[4:],
                time_limit=time_limit,
                max_evaluations=max_evals,
                lower_bound=lb,
                seed=seed,
            )
            trace = aco_run(g, cfg)
            best = float(trace.final.size)
            evals, reason = trace.evaluations, trace.stop_reason
    except Exception:
        return RunRecord(
            instance=instance,
            algo=algo,
            seed=seed,
            elapsed_ms=(perf_counter() - t0) * 1000.0,
            evals=0,
            best=float("nan"),
            stop_reason="error",
        )
    return RunRecord(
        instance=instance,
        algo=algo,
        seed=seed,
        elapsed_ms=(perf_counter() - t0) * 1000.0,
        evals=evals,
        best=best,
        stop_reason=reason,
    )


def run_experiment(spec: ExperimentSpec, jobs: Optional[int] = None) -> List[RunRecord]:
    """Execute every (instance, repeat) task and return rows in task order.

    ``jobs`` bounds the worker pool; 1 runs inline in this process, ``None``
    uses the hardware parallelism.  Task ``k`` (counting across instances,
    then repeats) runs with seed ``child_seed(base_seed, k)``.
    """
    tasks = []
    k = 0
    for instance in spec.instances:
        bound = _resolve_bound(spec, instance)
        for _ in range(spec.repeats):
            tasks.append(
                (
                    instance,
                    spec.algorithm,
                    child_seed(spec.base_seed, k),
                    spec.time_limit,
                    spec.max_iterations,
                    spec.max_evaluations,
                    spec.max_cycles,
                    bound,
                )
            )
            k += 1
    if jobs == 1:
        return [_run_task(t) for t in tasks]
    workers = jobs if jobs is not None else (os.cpu_count() or 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_task, tasks))


def _fmt_value(x: float) -> str:
    if x != x:
        return "nan"
    if x == int(x):
        return str(int(x))
    return repr(x)


def write_csv(records: Sequence[RunRecord], path) -> None:
    """Write records under the fixed schema; stable bytes given equal inputs."""
    close = False
    if hasattr(path, "write"):
        fh = path
    else:
        fh = open(path, "w", encoding="utf-8", newline="")
        close = True
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in records:
            w.writerow(
                [
                    r.instance,
                    r.algo,
                    r.seed,
                    f"{r.elapsed_ms:.3f}",
                    r.evals,
                    _fmt_value(r.best),
                    r.stop_reason,
                ]
            )
    finally:
        if close:
            fh.close()


@dataclass
class AggregateRow:
    """Per-(instance, algorithm) summary: order statistics plus effort."""

    instance: str
    algo: str
    runs: int
    best_min: float
    best_avg: float
    best_max: float
    evals_mean: float
    errors: int = 0


def aggregate(records: Sequence[RunRecord]) -> List[AggregateRow]:
    """Group records by (instance, algorithm), first-seen order preserved."""
    groups: dict = {}
    order = []
    for r in records:
        key = (r.instance, r.algo)
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(r)
    rows = []
    for key in order:
        rs = groups[key]
        ok = [r for r in rs if r.stop_reason != "error"]
        values = [r.best for r in ok]
        rows.append(
            AggregateRow(
                instance=key[0],
                algo=key[1],
                runs=len(rs),
                best_min=min(values) if values else float("nan"),
                best_avg=sum(values) / len(values) if values else float("nan"),
                best_max=max(values) if values else float("nan"),
                evals_mean=sum(r.evals for r in ok) / len(ok) if ok else 0.0,
                errors=len(rs) - len(ok),
            )
        )
    return rows


def format_aggregate(rows: Sequence[AggregateRow]) -> str:
    """Fixed-width text table: min / avg / max best and evaluations x10^3."""
    header = f"{'instance':<40} {'algo':<10} {'runs':>5} {'min':>10} {'avg':>10} {'max':>10} {'evals(k)':>10}"
    out = [header, "-" * len(header)]
    for row in rows:
        out.append(
            f"{row.instance:<40.40} {row.algo:<10} {row.runs:>5} "
            f"{_fmt_value(row.best_min):>10} "
            f"{row.best_avg:>10.2f} "
            f"{_fmt_value(row.best_max):>10} "
            f"{row.evals_mean / 1000.0:>10.2f}"
        )
    return "\n".join(out)
