"""Random graph generators: unit-disk, preferential-attachment, weighted.

All generators draw from the package's own seedable generator
(:class:`~domset.rng.Xoshiro256StarStar`), so the same parameters produce
bit-identical graphs on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .graph import Graph
from .rng import Xoshiro256StarStar

__all__ = [
    "BAParams",
    "UnitDiskParams",
    "WeightedRandomParams",
    "gen_ba",
    "gen_unit_disk",
    "gen_weighted_random",
    "unit_disk_from_points",
]


@dataclass(frozen=True)
class UnitDiskParams:
    """Random geometric graph: points in a square, edges within range.

    ``grid_side`` is the side length of the square, ``range_`` the maximum
    Euclidean distance at which two points are joined.
    """

    n: int
    grid_side: float
    range_: float
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.grid_side <= 0:
            raise ValueError("grid_side must be positive")
        if self.range_ <= 0:
            raise ValueError("range_ must be positive")


@dataclass(frozen=True)
class BAParams:
    """Preferential-attachment graph grown from a path.

    The seed graph is a path on ``w_edges`` vertices; each arriving vertex
    brings ``w_edges`` edges to distinct existing vertices chosen with
    probability proportional to current degree.  ``w_edges == n`` leaves just
    the initial path.
    """

    n: int
    w_edges: int
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 1 <= self.w_edges <= self.n:
            raise ValueError("w_edges must satisfy 1 <= w_edges <= n")


@dataclass(frozen=True)
class WeightedRandomParams:
    """Connected weighted random graph: spanning tree plus uniform extras.

    ``weight_scheme`` is either ``("uniform", lo, hi)`` for integer weights
    drawn uniformly from [lo, hi], or ``("degree-squared",)`` for weights
    drawn uniformly from [1, deg(v)^2].
    """

    n: int
    m: int
    weight_scheme: Tuple = ("uniform", 20, 70)
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.m < self.n - 1:
            raise ValueError("m must be at least n - 1 (graph must connect)")
        if self.m > self.n * (self.n - 1) // 2:
            raise ValueError("m exceeds the simple-graph maximum n(n-1)/2")
        scheme = self.weight_scheme
        if scheme[0] == "uniform":
            if len(scheme) != 3:
                raise ValueError("uniform scheme needs (\"uniform\", lo, hi)")
            lo, hi = scheme[1], scheme[2]
            if lo < 1 or lo > hi:
                raise ValueError("uniform scheme needs 1 <= lo <= hi")
        elif scheme[0] == "degree-squared":
            if len(scheme) != 1:
                raise ValueError("degree-squared scheme takes no parameters")
        else:
            raise ValueError("weight_scheme must be 'uniform' or 'degree-squared'")


def unit_disk_from_points(
    points: List[Tuple[float, float]], range_: float
) -> Graph:
    """Build the graph whose edges join points within ``range_`` of each other."""
    n = len(points)
    xs = np.array([p[0] for p in points], dtype=np.float64)
    ys = np.array([p[1] for p in points], dtype=np.float64)
    r2 = range_ * range_
    edges = []
    for u in range(n):
        dx = xs[u + 1 :] - xs[u]
        dy = ys[u + 1 :] - ys[u]
        hits = np.nonzero(dx * dx + dy * dy <= r2)[0]
        for k in hits:
            edges.append((u, u + 1 + int(k)))
    return Graph(n, edges)


def gen_unit_disk(p: UnitDiskParams) -> Tuple[Graph, List[Tuple[float, float]]]:
    """Drop ``n`` uniform points in the square and join those within range.

    Returns the graph together with the point coordinates (index-aligned with
    vertex ids) so callers can write a drawing sidecar.
    """
    rng = Xoshiro256StarStar(p.seed)
    points = []
    for _ in range(p.n):
        x = rng.random() * p.grid_side
        y = rng.random() * p.grid_side
        points.append((x, y))
    return unit_disk_from_points(points, p.range_), points


def gen_ba(p: BAParams) -> Graph:
    """Grow a preferential-attachment graph from a path seed.

    Proportional-to-degree sampling uses the repeated-endpoint list: every
    edge appends both endpoints, so a uniform draw from the list lands on a
    vertex with probability degree/2m.  Within one arrival, targets are
    distinct (collisions are redrawn).  The resulting edge count is
    ``(w_edges - 1) + (n - w_edges) * w_edges``.
    """
    rng = Xoshiro256StarStar(p.seed)
    n, w = p.n, p.w_edges
    edges = [(i, i + 1) for i in range(w - 1)]
    endpoints: List[int] = []
    for u, v in edges:
        endpoints.append(u)
        endpoints.append(v)
    for v in range(w, n):
        if w == 1 and not endpoints:
            # A one-vertex seed path has no edges to bias the draw; the first
            # arrival attaches to the only existing vertex.
            targets = [0]
        else:
            chosen: set = set()
            while len(chosen) < w:
                t = endpoints[rng.randint_below(len(endpoints))]
                if t not in chosen:
                    chosen.add(t)
            targets = sorted(chosen)
        for t in targets:
            edges.append((t, v))
            endpoints.append(t)
            endpoints.append(v)
    return Graph(n, edges)


def gen_weighted_random(p: WeightedRandomParams) -> Graph:
    """Connected random graph with exact edge count and per-vertex weights.

    A random spanning tree is built by attaching each vertex ``v >= 1`` to a
    uniform earlier vertex; the remaining ``m - (n - 1)`` edges are sampled
    uniformly from the missing pairs (draw-and-reject, switching to explicit
    enumeration of the complement when it is small).  Weights follow the
    configured scheme, drawn in ascending vertex order.
    """
    rng = Xoshiro256StarStar(p.seed)
    n, m = p.n, p.m
    edge_set = set()
    edges = []

    def push(u: int, v: int) -> None:
        key = (u, v) if u < v else (v, u)
        edge_set.add(key)
        edges.append(key)

    for v in range(1, n):
        push(rng.randint_below(v), v)
    extra = m - len(edges)
    max_edges = n * (n - 1) // 2
    missing = max_edges - len(edges)
    if extra > 0 and missing > 0 and extra > missing // 2:
        # Dense request: enumerate the complement and sample from it without
        # replacement, avoiding long reject streaks near completeness.
        pool = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if (u, v) not in edge_set
        ]
        for _ in range(extra):
            k = rng.randint_below(len(pool))
            pool[k], pool[-1] = pool[-1], pool[k]
            u, v = pool.pop()
            push(u, v)
    else:
        while extra > 0:
            u = rng.randint_below(n)
            v = rng.randint_below(n)
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            if key in edge_set:
                continue
            push(*key)
            extra -= 1

    g = Graph(n, edges)
    scheme = p.weight_scheme
    if scheme[0] == "uniform":
        lo, hi = scheme[1], scheme[2]
        weights = [
            float(lo + rng.randint_below(hi - lo + 1)) for _ in range(n)
        ]
    else:
        degs = g.degrees
        weights = [
            float(1 + rng.randint_below(max(1, int(degs[v]) ** 2)))
            for v in range(n)
        ]
    return Graph(n, edges, weights=weights)
