"""Throughput comparison: compiled extension vs pure-Python kernels.

Runs the permutation decoder, the jump-move search loop, and the ant
construction + redundancy-removal pipeline on generated instances with both
backends and prints a speedup table.

Usage: python benchmarks/bench_backends.py [--n 1000] [--seconds 2.0]
"""

from __future__ import annotations

import argparse
import importlib
from time import perf_counter

import numpy as np

from domset import _pure
from domset.generators import BAParams, gen_ba
from domset.graph import Graph
from domset.greedy import greedy_mds
from domset.order_search import set_to_permutation
from domset.rng import Xoshiro256StarStar


def _load_compiled():
    try:
        return importlib.import_module("domset._core")
    except ImportError:
        return None


def bench_decode(mod, g: Graph, seconds: float) -> float:
    """Decodes per second for a fixed random permutation."""
    rng = Xoshiro256StarStar(7)
    order = list(range(g.n))
    rng.shuffle(order)
    order = np.array(order, dtype=np.int32)
    stamp = np.zeros(g.n, dtype=np.int64)
    members = np.zeros(g.n, dtype=np.int32)
    epoch = 0
    count = 0
    t0 = perf_counter()
    while perf_counter() - t0 < seconds:
        for _ in range(32):
            epoch += 1
            mod.decode(g.indptr, g.indices, order, stamp, epoch, members)
        count += 32
    return count / (perf_counter() - t0)


def bench_search(mod, g: Graph, seconds: float) -> float:
    """Search iterations per second (jump + decode + acceptance)."""
    rng = Xoshiro256StarStar(11)
    init = greedy_mds(g, rng)
    perm = set_to_permutation(g, init, rng)
    order = perm.order.copy()
    stamp = np.zeros(g.n, dtype=np.int64)
    members = np.zeros(g.n, dtype=np.int32)
    cur = np.zeros(g.n, dtype=np.int32)
    cur[: init.size] = sorted(init.members)
    out = mod.rlso_loop(
        g.indptr, g.indices, order, stamp, 1, members, cur, init.size,
        rng.state, -1, -1, seconds, 256, perf_counter(), [],
    )
    iters = out[1]
    return iters / seconds


def bench_ants(mod, g: Graph, seconds: float) -> float:
    """Ant constructions (plus removal pass) per second."""
    rng = Xoshiro256StarStar(13)
    tau = np.full(g.n, 10.0, dtype=np.float64)
    gain = np.zeros(g.n, dtype=np.int32)
    stamp = np.zeros(g.n, dtype=np.int64)
    members = np.zeros(g.n, dtype=np.int32)
    dom = np.zeros(g.n, dtype=np.int32)
    cand = np.zeros(g.n, dtype=np.int32)
    epoch = 0
    count = 0
    t0 = perf_counter()
    while perf_counter() - t0 < seconds:
        epoch += 1
        size = mod.ant_construct(
            g.indptr, g.indices, tau, gain, stamp, epoch, members, rng.state, 0
        )
        mod.ls_remove_redundant(
            g.indptr, g.indices, members, size, dom, cand, 0.6, rng.state
        )
        count += 1
    return count / (perf_counter() - t0)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--seconds", type=float, default=2.0)
    args = ap.parse_args()

    core = _load_compiled()
    g = gen_ba(BAParams(n=args.n, w_edges=2, seed=42))
    print(f"instance: preferential-attachment n={g.n} m={g.m}")
    print(f"compiled extension available: {core is not None}")
    benches = [
        ("decode/s", bench_decode),
        ("search iters/s", bench_search),
        ("ant evals/s", bench_ants),
    ]
    print(f"{'kernel':<18} {'pure':>14} {'compiled':>14} {'speedup':>9}")
    for name, fn in benches:
        pure_rate = fn(_pure, g, args.seconds)
        if core is not None:
            fast_rate = fn(core, g, args.seconds)
            print(
                f"{name:<18} {pure_rate:>14.0f} {fast_rate:>14.0f} "
                f"{fast_rate / pure_rate:>8.1f}x"
            )
        else:
            print(f"{name:<18} {pure_rate:>14.0f} {'-':>14} {'-':>9}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
