"""Multi-start order-based local search for minimum weight dominating sets.

Each cycle starts from a fresh permutation — built from a randomized
weight-aware greedy solution with probability ``p_greedy``, uniformly at
random otherwise — and runs the jump-move search with weight-based
acceptance.  A stall counter tracks consecutive proposals that failed to
strictly improve the incumbent; when it exceeds its cap the cycle ends and
the search restarts.  Improving the global best during a cycle raises that
cycle's cap from ``stall_cap`` to ``extended_cap``.  The global best survives
restarts and is what the run returns.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter
from typing import Optional

import numpy as np

from . import kernels
from .graph import Graph, Solution
from .greedy import greedy_mwds
from .order_search import RunTrace, _CHECK_EVERY, set_to_permutation
from .rng import Xoshiro256StarStar

__all__ = ["MsrlsoConfig", "msrlso_run"]


@dataclass
class MsrlsoConfig:
    """Parameters of the multi-start weighted search.

    ``stall_cap`` is the per-cycle budget of consecutive non-improving
    proposals, ``extended_cap`` the raised budget after a global-best
    improvement, ``max_cycles`` the restart budget.  ``lower_bound`` is a
    weight bound (e.g. an LP relaxation value): the run stops once the global
    best reaches it.
    """

    p_greedy: float = 0.5
    stall_cap: int = 2000
    extended_cap: int = 100000
    max_cycles: int = 5000
    time_limit: Optional[float] = None
    lower_bound: Optional[float] = None
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.p_greedy <= 1.0:
            raise ValueError("p_greedy must be in [0, 1]")
        if self.stall_cap < 0 or self.extended_cap < 0:
            raise ValueError("stall caps must be non-negative")
        if self.stall_cap > self.extended_cap:
            raise ValueError("stall_cap must not exceed extended_cap")
        if self.max_cycles < 1:
            raise ValueError("max_cycles must be >= 1")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.lower_bound is not None and self.lower_bound < 0:
            raise ValueError("lower_bound must be non-negative")


def msrlso_run(g: Graph, cfg: MsrlsoConfig) -> RunTrace:
    """Run the multi-start weighted search; returns a weight-valued trace.

    Unweighted graphs are treated as having unit weights, in which case the
    method behaves as a restarting variant of the unweighted search.
    """
    if g.n < 2:
        raise ValueError("msrlso_run requires a graph with at least 2 vertices")
    t0 = perf_counter()
    rng = Xoshiro256StarStar(cfg.seed)
    weights = g.weights_or_unit()
    n = g.n

    order = np.zeros(n, dtype=np.int32)
    stamp = np.zeros(n, dtype=np.int64)
    members_buf = np.zeros(n, dtype=np.int32)
    cur_members = np.zeros(n, dtype=np.int32)
    best_members = np.zeros(n, dtype=np.int32)

    epoch = 0
    best_size = 0
    best_weight = float("inf")
    total_iters = 0
    total_evals = 0
    cycles = 0
    trace: list = []
    time_limit = float("inf") if cfg.time_limit is None else cfg.time_limit
    lower_bound = -1.0 if cfg.lower_bound is None else cfg.lower_bound

    while True:
        # Cycle initialization: greedy-seeded or uniformly random permutation,
        # then decode it to obtain the cycle's starting solution.
        if rng.random() < cfg.p_greedy:
            seed_sol = greedy_mwds(g, rng)
            perm = set_to_permutation(g, seed_sol, rng)
            order[:] = perm.order
        else:
            start = list(range(n))
            rng.shuffle(start)
            order[:] = start
        epoch += 1
        size, w = kernels.decode_weighted(
            g.indptr, g.indices, weights, order, stamp, epoch, members_buf
        )
        total_evals += 1
        cycles += 1
        cur_members[:size] = members_buf[:size]
        if w < best_weight:
            best_weight = w
            best_size = size
            best_members[:size] = members_buf[:size]
            trace.append((perf_counter() - t0, w))

        out = kernels.msrls_cycle(
            g.indptr,
            g.indices,
            weights,
            order,
            stamp,
            epoch,
            members_buf,
            cur_members,
            size,
            w,
            best_members,
            best_size,
            best_weight,
            cfg.stall_cap,
            cfg.extended_cap,
            rng.state,
            time_limit,
            lower_bound,
            _CHECK_EVERY,
            t0,
            trace,
        )
        _, _, best_size, best_weight, iters, evals, epoch, stop = out
        total_iters += iters
        total_evals += evals
        if stop == kernels.STOP_BOUND:
            reason = "lower-bound-hit"
            break
        if stop == kernels.STOP_TIME:
            reason = "time"
            break
        if cycles >= cfg.max_cycles:
            reason = "cycle-cap"
            break

    final = Solution.from_members(g, best_members[:best_size])
    return RunTrace(
        iterations=total_iters,
        evaluations=total_evals,
        best_series=trace,
        final=final,
        stop_reason=reason,
    )
