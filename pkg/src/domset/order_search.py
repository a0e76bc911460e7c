"""Permutation-decoded dominating sets and the order-based local search.

A dominating set is represented indirectly by a vertex permutation: scanning
the permutation and adding each vertex that is (or has a neighbor) still
non-dominated yields a dominating set in O(n+m).  The search perturbs the
permutation with a single move — relocate one element to the front — and
keeps the move whenever the decoded set is no larger.  Decoding a permutation
built from an existing dominating set S (members first, ordered by id) always
yields a subset of S, which is what makes the indirect representation
complete: some permutation decodes to an optimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from time import perf_counter
from typing import Optional

import numpy as np

from . import kernels
from .graph import Graph, Solution, is_dominating_set
from .greedy import greedy_mds
from .rng import Xoshiro256StarStar

__all__ = [
    "Permutation",
    "RlsoConfig",
    "RunTrace",
    "greedy_map",
    "jump",
    "rlso_run",
    "set_to_permutation",
]


class Permutation:
    """A vertex ordering together with its inverse index.

    ``order[i]`` is the vertex at (0-based) position ``i``;
    ``position[v]`` is the position of vertex ``v``.
    """

    __slots__ = ("order", "position")

    def __init__(self, order):
        arr = np.asarray(order, dtype=np.int32)
        n = len(arr)
        pos = np.full(n, -1, dtype=np.int32)
        for i, v in enumerate(arr):
            if not 0 <= v < n or pos[v] != -1:
                raise ValueError("order must be a permutation of 0..n-1")
            pos[v] = i
        self.order = arr
        self.position = pos

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        p = cls.__new__(cls)
        p.order = np.arange(n, dtype=np.int32)
        p.position = np.arange(n, dtype=np.int32)
        return p

    def __len__(self):
        return len(self.order)

    def __eq__(self, other):
        return isinstance(other, Permutation) and np.array_equal(self.order, other.order)

    def __repr__(self):
        return f"Permutation({self.order.tolist()})"


def jump(j: int, p: Permutation) -> Permutation:
    """Move the element at 1-based position ``j`` to the front.

    Elements formerly at positions 1..j-1 shift right one place; the rest are
    unchanged.  ``j`` ranges over 1..n (j=1 is the identity move; the search
    itself only draws j >= 2).
    """
    n = len(p)
    if not 1 <= j <= n:
        raise ValueError(f"jump position must be in 1..{n}, got {j}")
    out = Permutation.__new__(Permutation)
    order = p.order.copy()
    x = order[j - 1]
    order[1:j] = p.order[0 : j - 1]
    order[0] = x
    pos = p.position.copy()
    pos[order[:j]] = np.arange(j, dtype=np.int32)
    out.order = order
    out.position = pos
    return out


def set_to_permutation(g: Graph, s, rng: Xoshiro256StarStar) -> Permutation:
    """Build a permutation putting the members of ``s`` first.

    Members appear in ascending id order, followed by the non-members in
    uniformly random order.  ``s`` must be a dominating set.
    """
    members = set(s.members) if isinstance(s, Solution) else {int(v) for v in s}
    if not is_dominating_set(g, members):
        raise ValueError("set_to_permutation requires a dominating set")
    head = sorted(members)
    tail = [v for v in range(g.n) if v not in members]
    rng.shuffle(tail)
    p = Permutation.__new__(Permutation)
    p.order = np.asarray(head + tail, dtype=np.int32)
    pos = np.empty(g.n, dtype=np.int32)
    pos[p.order] = np.arange(g.n, dtype=np.int32)
    p.position = pos
    return p


def greedy_map(g: Graph, p: Permutation) -> Solution:
    """Decode a permutation into a dominating set (O(n+m)).

    Scans ``p.order``; a vertex is added iff it or one of its neighbors is
    still non-dominated; the scan stops once every vertex is dominated.
    """
    if len(p) != g.n:
        raise ValueError("permutation length does not match graph")
    stamp = np.zeros(g.n, dtype=np.int64)
    members = np.zeros(g.n, dtype=np.int32)
    size = kernels.decode(g.indptr, g.indices, p.order, stamp, 1, members)
    return Solution.from_members(g, members[:size])


@dataclass
class RlsoConfig:
    """Stopping rules and seed for one search run.

    At least one of ``time_limit`` (seconds), ``max_iterations``, or
    ``lower_bound`` must be set; the run stops on whichever fires first and
    records which one it was.
    """

    time_limit: Optional[float] = None
    max_iterations: Optional[int] = None
    lower_bound: Optional[int] = None
    seed: int = 0

    def __post_init__(self):
        if self.time_limit is None and self.max_iterations is None and self.lower_bound is None:
            raise ValueError("at least one stopping criterion must be set")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.max_iterations is not None and self.max_iterations < 0:
            raise ValueError("max_iterations must be non-negative")
        if self.lower_bound is not None and self.lower_bound < 1:
            raise ValueError("lower_bound must be >= 1")


@dataclass
class RunTrace:
    """Outcome of one search run.

    ``best_series`` holds ``(elapsed_seconds, value)`` pairs appended at the
    start and on each strict improvement, so the value column is
    non-increasing.  ``evaluations`` counts decoder calls (for the ant-colony
    runs: constructed-and-cleaned candidate sets); the initial greedy
    construction is evaluation zero, i.e. it does not increment the counter.
    ``stop_reason`` is one of ``time``, ``lower-bound-hit``, ``iteration-cap``,
    ``cycle-cap``, ``evaluation-cap``, or ``completed``.
    """

    iterations: int
    evaluations: int
    best_series: list = field(default_factory=list)
    final: Solution = None
    stop_reason: str = ""


_CHECK_EVERY = 256  # iterations between wall-clock checks in the tight loop


def rlso_run(g: Graph, cfg: RlsoConfig) -> RunTrace:
    """Order-based randomised local search for minimum dominating set.

    Starts from a randomized greedy solution, then repeatedly moves a random
    non-first element of the permutation to the front, decodes, and accepts
    the move iff the decoded set is not larger than the incumbent.  Monotone
    acceptance makes the incumbent the best set ever held.
    """
    if g.n < 2:
        raise ValueError("rlso_run requires a graph with at least 2 vertices")
    t0 = perf_counter()
    rng = Xoshiro256StarStar(cfg.seed)
    init = greedy_mds(g, rng)
    perm = set_to_permutation(g, init, rng)

    order = perm.order.copy()
    stamp = np.zeros(g.n, dtype=np.int64)
    members_buf = np.zeros(g.n, dtype=np.int32)
    cur_members = np.zeros(g.n, dtype=np.int32)
    cur_members[: init.size] = sorted(init.members)
    trace: list = [(perf_counter() - t0, float(init.size))]

    size, iters, evals, _, stop = kernels.rlso_loop(
        g.indptr,
        g.indices,
        order,
        stamp,
        0,
        members_buf,
        cur_members,
        init.size,
        rng.state,
        -1 if cfg.max_iterations is None else cfg.max_iterations,
        -1 if cfg.lower_bound is None else cfg.lower_bound,
        float("inf") if cfg.time_limit is None else cfg.time_limit,
        _CHECK_EVERY,
        t0,
        trace,
    )
    final = Solution.from_members(g, cur_members[:size])
    return RunTrace(
        iterations=iters,
        evaluations=evals,
        best_series=trace,
        final=final,
        stop_reason=kernels.STOP_REASONS[stop],
    )
