"""Randomized greedy construction for minimum (weight) dominating sets.

The unweighted variant repeatedly adds a vertex of maximum coverage gain (the
number of still-non-dominated vertices in its closed neighborhood); the
weighted variant maximizes gain divided by vertex weight.  Ties are broken
uniformly at random, which is what makes repeated runs informative: the best
of many randomized constructions is a strong, cheap baseline.

The selection uses a lazy max-heap: popped entries whose key no longer equals
the vertex's current gain are re-pushed with the corrected key, and all
entries tied at the maximum key are collected (deduplicated) before one is
drawn at random, so the tie-break is exactly uniform over the argmax set.
With unit weights the weighted priority reduces to the gain itself, making
``greedy_mwds`` on unit weights behave identically to ``greedy_mds``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .graph import Graph, Solution
from .rng import Xoshiro256StarStar, child_seed

__all__ = ["GreedyStats", "greedy_mds", "greedy_mwds", "repeated_greedy"]


def _greedy_core(g: Graph, weights, rng: Xoshiro256StarStar) -> Solution:
    n = g.n
    sol = Solution(g)
    if n == 0:
        return sol
    indptr = g.indptr.tolist()
    indices = g.indices.tolist()
    gain = [indptr[v + 1] - indptr[v] + 1 for v in range(n)]

    def key(v: int):
        return gain[v] if weights is None else gain[v] / weights[v]

    heap = [(-key(v), v) for v in range(n)]
    heapq.heapify(heap)
    dominated = sol.dominated_count

    while sol._undominated > 0:
        neg_k, v = heapq.heappop(heap)
        if gain[v] == 0:
            continue
        if -neg_k != key(v):
            heapq.heappush(heap, (-key(v), v))
            continue
        ties = [v]
        seen = {v}
        while heap and heap[0][0] == neg_k:
            _, u = heapq.heappop(heap)
            if u in seen or gain[u] == 0:
                continue
            if -neg_k != key(u):
                heapq.heappush(heap, (-key(u), u))
                continue
            ties.append(u)
            seen.add(u)
        pick = ties[rng.randint_below(len(ties))] if len(ties) > 1 else ties[0]
        for u in ties:
            if u != pick:
                heapq.heappush(heap, (neg_k, u))
        newly = [pick] if dominated[pick] == 0 else []
        for u in g.neighbors(pick):
            if dominated[u] == 0:
                newly.append(int(u))
        sol.add(pick)
        for x in newly:
            gain[x] -= 1
            for k in range(indptr[x], indptr[x + 1]):
                gain[indices[k]] -= 1
    return sol


def greedy_mds(g: Graph, rng: Xoshiro256StarStar) -> Solution:
    """Greedy maximum-coverage-gain construction; uniform random tie-break."""
    return _greedy_core(g, None, rng)


def greedy_mwds(g: Graph, rng: Xoshiro256StarStar) -> Solution:
    """Greedy maximum gain-per-weight construction; uniform random tie-break.

    On graphs without weights, unit weights are assumed (the priority then
    reduces to the plain coverage gain).
    """
    weights = g.weights.tolist() if g.weights is not None else None
    return _greedy_core(g, weights, rng)


@dataclass
class GreedyStats:
    """Aggregate over repeated randomized greedy runs."""

    values: list = field(default_factory=list)
    best: Solution = None
    weighted: bool = False

    @property
    def min(self):
        return min(self.values)

    @property
    def max(self):
        return max(self.values)

    @property
    def mean(self) -> float:
        return sum(self.values) / len(self.values)


def repeated_greedy(g: Graph, repeats: int, seed: int, weighted: bool = False) -> GreedyStats:
    """Run the randomized greedy ``repeats`` times with derived child seeds.

    Collects the size (or total weight, when ``weighted``) of every run and
    keeps the first solution attaining the minimum.
    """
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    stats = GreedyStats(weighted=weighted)
    build = greedy_mwds if weighted else greedy_mds
    for k in range(repeats):
        rng = Xoshiro256StarStar(child_seed(seed, k))
        sol = build(g, rng)
        value = sol.weight if weighted else sol.size
        stats.values.append(value)
        if stats.best is None or value < (stats.best.weight if weighted else stats.best.size):
            stats.best = sol
    return stats
