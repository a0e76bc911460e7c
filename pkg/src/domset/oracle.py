"""Exact brute-force solvers for small instances.

These are the ground truth for every optimality test in the suite.  Closed
neighborhoods are precomputed as bitmasks, so a candidate subset dominates
exactly when the OR of its members' masks covers all vertices.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, Solution

__all__ = ["brute_force_mds", "brute_force_mwds"]

_MDS_LIMIT = 30
_MWDS_LIMIT = 25


def _closed_masks(g: Graph) -> list[int]:
    masks = []
    for v in range(g.n):
        m = 1 << v
        for u in g.neighbors(v):
            m |= 1 << int(u)
        masks.append(m)
    return masks


def brute_force_mds(g: Graph) -> tuple[Solution, int]:
    """Exact minimum dominating set by increasing-cardinality enumeration.

    Returns ``(solution, gamma)``.  Refuses graphs with more than 30 vertices.
    """
    if g.n > _MDS_LIMIT:
        raise ValueError(f"brute_force_mds is limited to n <= {_MDS_LIMIT} (got {g.n})")
    if g.n == 0:
        return Solution(g), 0
    masks = _closed_masks(g)
    full = (1 << g.n) - 1
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            acc = 0
            for v in combo:
                acc |= masks[v]
            if acc == full:
                return Solution.from_members(g, combo), k
    raise AssertionError("unreachable: V itself always dominates")


def brute_force_mwds(g: Graph) -> tuple[Solution, float]:
    """Exact minimum weight dominating set by pruned subset enumeration.

    Walks the full include/exclude tree over vertices, cutting branches whose
    accumulated weight already reaches the best known and branches whose
    remaining vertices cannot complete domination.  Unit weights are assumed
    when the graph is unweighted.  Refuses graphs with more than 25 vertices.
    """
    if g.n > _MWDS_LIMIT:
        raise ValueError(f"brute_force_mwds is limited to n <= {_MWDS_LIMIT} (got {g.n})")
    n = g.n
    if n == 0:
        return Solution(g), 0.0
    masks = _closed_masks(g)
    weights = g.weights_or_unit().tolist()
    full = (1 << n) - 1
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]

    best_w = float("inf")
    best_set = 0

    def rec(i: int, dom: int, w: float, chosen: int) -> None:
        nonlocal best_w, best_set
        if w >= best_w:
            return
        if dom == full:
            best_w = w
            best_set = chosen
            return
        if i == n or dom | suffix[i] != full:
            return
        rec(i + 1, dom | masks[i], w + weights[i], chosen | (1 << i))
        rec(i + 1, dom, w, chosen)

    rec(0, 0, 0.0, 0)
    members = [v for v in range(n) if best_set >> v & 1]
    return Solution.from_members(g, members), best_w
