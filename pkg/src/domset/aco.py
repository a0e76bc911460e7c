"""Ant colony optimisation for minimum dominating sets.

A colony of ants builds dominating sets vertex by vertex, drawing each
addition from the still-useful candidates with probability proportional to
pheromone.  Every constructed set is trimmed by a redundant-vertex removal
step, then the iteration's best set deposits pheromone on its members.

Three variants share this skeleton:

- ``ls``     — plain construction + removal.
- ``pp-ls``  — pheromone is pre-warmed by sampling random maximal
  independent sets and boosting their members.
- ``ls-s``   — a greedy solution seeds the pheromone (high trail on its
  members, low elsewhere) and construction restricts candidate pools to
  the neighborhood of the last-added vertex when possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter
from typing import Optional

import numpy as np

from . import kernels
from .graph import Graph, Solution
from .greedy import greedy_mds
from .order_search import RunTrace
from .rng import Xoshiro256StarStar

__all__ = [
    "AcoConfig",
    "PheromoneState",
    "aco_run",
    "construct_ant_solution",
    "pheromone_update",
    "preprocess_independent_sets",
    "remove_redundant",
]

VARIANTS = ("ls", "pp-ls", "ls-s")

#: Deposit-rule numerator/denominator defaults per variant.
_UPDATE_DEFAULTS = {"ls": (1.0, 10.0), "pp-ls": (2.0, 5.0), "ls-s": (1.0, 10.0)}

#: Pheromone levels used by the greedy-seeded variant.
_SEED_TAU_MEMBER = 1000.0
_SEED_TAU_OTHER = 10.0

#: Denominator floor in the deposit rule, guarding division by zero when the
#: iteration best equals the global best and the offset cancels.
_DENOM_FLOOR = 1e-6


@dataclass
class AcoConfig:
    """Parameters of the ant colony search."""

    variant: str = "ls"
    ants: int = 20
    evaporation: float = 0.985
    random_removal_prob: float = 0.6
    initial_pheromone: float = 10.0
    update_p1: Optional[float] = None
    update_p2: Optional[float] = None
    preprocess_sets: int = 100
    time_limit: Optional[float] = None
    max_evaluations: Optional[int] = None
    lower_bound: Optional[int] = None
    seed: int = 0

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if self.ants < 1:
            raise ValueError("ants must be >= 1")
        if not 0.0 < self.evaporation < 1.0:
            raise ValueError("evaporation must be in (0, 1)")
        if not 0.0 <= self.random_removal_prob <= 1.0:
            raise ValueError("random_removal_prob must be in [0, 1]")
        if self.initial_pheromone <= 0:
            raise ValueError("initial_pheromone must be positive")
        if self.preprocess_sets < 0:
            raise ValueError("preprocess_sets must be non-negative")
        if (
            self.time_limit is None
            and self.max_evaluations is None
            and self.lower_bound is None
        ):
            raise ValueError(
                "at least one stopping criterion is required: "
                "time_limit, max_evaluations, or lower_bound"
            )
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.max_evaluations is not None and self.max_evaluations < 1:
            raise ValueError("max_evaluations must be >= 1")
        if self.lower_bound is not None and self.lower_bound < 1:
            raise ValueError("lower_bound must be >= 1")
        if self.update_p1 is None:
            self.update_p1 = _UPDATE_DEFAULTS[self.variant][0]
        if self.update_p2 is None:
            self.update_p2 = _UPDATE_DEFAULTS[self.variant][1]
        if self.update_p1 <= 0 or self.update_p2 <= 0:
            raise ValueError("update_p1 and update_p2 must be positive")


@dataclass
class PheromoneState:
    """Pheromone trail plus the sizes steering the deposit rule.

    ``iter_best_size`` is the best set size of the most recent iteration,
    ``global_best_size`` the best size seen so far (0 until a first set is
    known).
    """

    tau: np.ndarray
    iter_best_size: int = 0
    global_best_size: int = 0


def construct_ant_solution(
    g: Graph, ph: PheromoneState, variant: str, rng: Xoshiro256StarStar
) -> Solution:
    """Build one dominating set by pheromone-proportional vertex additions.

    Candidates are the vertices whose closed neighborhood still contains a
    non-dominated vertex.  Under the ``ls-s`` variant the pool is restricted
    to such candidates adjacent to the last-added vertex whenever that pool
    is non-empty.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    n = g.n
    gain = np.zeros(n, dtype=np.int32)
    stamp = np.zeros(n, dtype=np.int64)
    members = np.zeros(n, dtype=np.int32)
    size = kernels.ant_construct(
        g.indptr,
        g.indices,
        ph.tau,
        gain,
        stamp,
        1,
        members,
        rng.state,
        1 if variant == "ls-s" else 0,
    )
    return Solution.from_members(g, members[:size])


def remove_redundant(
    g: Graph, sol: Solution, p_r: float, rng: Xoshiro256StarStar
) -> Solution:
    """Strip redundant vertices from a dominating set, one at a time.

    While any member covers only vertices that are covered at least twice,
    one such member is removed: a uniformly random one with probability
    ``p_r``, otherwise the one with minimum degree (ties to the smallest
    id).  Returns a new solution; raises if ``sol`` is not dominating.
    """
    if not sol.is_dominating:
        raise ValueError("remove_redundant requires a dominating set")
    if not 0.0 <= p_r <= 1.0:
        raise ValueError("p_r must be in [0, 1]")
    n = g.n
    members = np.zeros(n, dtype=np.int32)
    ordered = sorted(sol.members)
    members[: len(ordered)] = ordered
    dom_count = np.zeros(n, dtype=np.int32)
    cand = np.zeros(n, dtype=np.int32)
    size = kernels.ls_remove_redundant(
        g.indptr, g.indices, members, len(ordered), dom_count, cand, p_r, rng.state
    )
    return Solution.from_members(g, members[:size])


def pheromone_update(
    ph: PheromoneState, iter_best: Solution, cfg: AcoConfig
) -> PheromoneState:
    """Evaporate all trails and reward the iteration's best set.

    Every trail is multiplied by the evaporation factor; each member of
    ``iter_best`` then receives ``p1 / (p2 - f + F)`` where ``f`` is the
    iteration-best size and ``F`` the global-best size.  The denominator is
    floored at a small positive value.
    """
    f = iter_best.size
    big_f = ph.global_best_size
    if big_f > f:
        raise ValueError("global_best_size must not exceed the iteration best")
    denom = cfg.update_p2 - f + big_f
    if denom < _DENOM_FLOOR:
        denom = _DENOM_FLOOR
    deposit = cfg.update_p1 / denom
    tau = ph.tau * cfg.evaporation
    idx = sorted(iter_best.members)
    tau[idx] += deposit
    return PheromoneState(tau=tau, iter_best_size=f, global_best_size=big_f)


def preprocess_independent_sets(
    g: Graph,
    ph: PheromoneState,
    count: int,
    rng: Xoshiro256StarStar,
    boost: float = 0.4,
) -> PheromoneState:
    """Pre-warm pheromone with random maximal independent sets.

    Builds ``count`` maximal independent sets by repeatedly picking a
    uniformly random available vertex and discarding its closed neighborhood;
    every member of every set gets ``boost`` added to its trail.  The default
    boost equals the deposit-rule value at equal iteration and global bests
    under the pre-warmed variant's parameters.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    n = g.n
    tau = ph.tau.copy()
    indptr = g.indptr
    indices = g.indices
    for _ in range(count):
        avail = list(range(n))
        pos = list(range(n))
        members = []
        while avail:
            v = avail[rng.randint_below(len(avail))]
            members.append(v)
            start = indptr[v]
            end = indptr[v + 1]
            for u in [v] + [int(indices[t]) for t in range(start, end)]:
                p = pos[u]
                if p >= 0:
                    last = avail[-1]
                    avail[p] = last
                    pos[last] = p
                    avail.pop()
                    pos[u] = -1
        for v in members:
            tau[v] += boost
    return PheromoneState(
        tau=tau,
        iter_best_size=ph.iter_best_size,
        global_best_size=ph.global_best_size,
    )


def aco_run(g: Graph, cfg: AcoConfig) -> RunTrace:
    """Run the ant colony search until a stopping criterion fires.

    One evaluation is one ant's constructed-and-trimmed dominating set.
    Stopping criteria are checked as the run progresses: the lower bound and
    the evaluation cap after every ant, the time limit between colony
    iterations.  Pheromone is only updated after complete iterations.
    """
    if g.n < 1:
        raise ValueError("aco_run requires a non-empty graph")
    t0 = perf_counter()
    rng = Xoshiro256StarStar(cfg.seed)
    n = g.n
    restrict = 1 if cfg.variant == "ls-s" else 0

    tau = np.full(n, cfg.initial_pheromone, dtype=np.float64)
    ph = PheromoneState(tau=tau)
    if cfg.variant == "pp-ls":
        ph = preprocess_independent_sets(
            g, ph, cfg.preprocess_sets, rng, boost=cfg.update_p1 / cfg.update_p2
        )
    elif cfg.variant == "ls-s":
        seed_sol = greedy_mds(g, rng)
        ph.tau[:] = _SEED_TAU_OTHER
        ph.tau[sorted(seed_sol.members)] = _SEED_TAU_MEMBER

    gain = np.zeros(n, dtype=np.int32)
    stamp = np.zeros(n, dtype=np.int64)
    members = np.zeros(n, dtype=np.int32)
    dom_count = np.zeros(n, dtype=np.int32)
    cand = np.zeros(n, dtype=np.int32)
    iter_members = np.zeros(n, dtype=np.int32)
    best_members = np.zeros(n, dtype=np.int32)

    epoch = 0
    best_size = n + 1
    evals = 0
    iterations = 0
    trace: list = []
    reason = None

    while reason is None:
        if (
            evals > 0
            and cfg.time_limit is not None
            and perf_counter() - t0 >= cfg.time_limit
        ):
            reason = "time"
            break
        iterations += 1
        iter_best = n + 1
        for _ in range(cfg.ants):
            epoch += 1
            size = kernels.ant_construct(
                g.indptr, g.indices, ph.tau, gain, stamp, epoch, members,
                rng.state, restrict,
            )
            size = kernels.ls_remove_redundant(
                g.indptr, g.indices, members, size, dom_count, cand,
                cfg.random_removal_prob, rng.state,
            )
            evals += 1
            if size < iter_best:
                iter_best = size
                iter_members[:size] = members[:size]
            if size < best_size:
                best_size = size
                best_members[:size] = members[:size]
                trace.append((perf_counter() - t0, float(size)))
            if cfg.lower_bound is not None and best_size <= cfg.lower_bound:
                reason = "lower-bound-hit"
                break
            if cfg.max_evaluations is not None and evals >= cfg.max_evaluations:
                reason = "evaluation-cap"
                break
        if reason is not None:
            break
        iter_sol = Solution.from_members(g, iter_members[:iter_best])
        ph = PheromoneState(
            tau=ph.tau, iter_best_size=iter_best, global_best_size=best_size
        )
        ph = pheromone_update(ph, iter_sol, cfg)

    final = Solution.from_members(g, best_members[:best_size])
    return RunTrace(
        iterations=iterations,
        evaluations=evals,
        best_series=trace,
        final=final,
        stop_reason=reason,
    )
