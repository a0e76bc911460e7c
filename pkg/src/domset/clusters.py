"""Grouping vertices around a dominating set for drawing export.

Every vertex outside the dominating set is assigned to one adjacent member;
members head their own clusters.  The grouping can be rendered as a DOT file
with one subgraph per cluster and highlighted heads, ready for external
layout tools.
"""

from __future__ import annotations

from typing import Dict, List

from .graph import Graph, Solution

__all__ = ["assign_clusters", "to_dot"]


def assign_clusters(g: Graph, sol: Solution) -> Dict[int, List[int]]:
    """Partition the vertices into clusters around the dominating set.

    Each member of ``sol`` heads one cluster containing itself.  Every other
    vertex joins the cluster of one adjacent member: the one of highest
    degree, ties broken toward the lowest id.  Raises if ``sol`` is not
    dominating.  The number of clusters always equals the set size.
    """
    if not sol.is_dominating:
        raise ValueError("assign_clusters requires a dominating set")
    clusters: Dict[int, List[int]] = {v: [v] for v in sorted(sol.members)}
    for v in range(g.n):
        if v in sol:
            continue
        best = -1
        best_deg = -1
        for u in g.neighbors(v):
            u = int(u)
            if u in sol and g.degree(u) > best_deg:
                best = u
                best_deg = g.degree(u)
        clusters[best].append(v)
    for head in clusters:
        clusters[head].sort()
    return clusters


def to_dot(g: Graph, clusters: Dict[int, List[int]], name: str = "G") -> str:
    """Render a clustered graph as DOT text.

    Each cluster becomes a ``subgraph cluster_<k>`` block; heads are drawn
    filled.  All edges of the graph are emitted (DOT renderers route edges
    across cluster boundaries).  Vertex labels from the source file are kept
    as display labels when present.
    """
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for k, head in enumerate(sorted(clusters)):
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f'    label="{g.label_of(head)}";')
        for v in clusters[head]:
            attrs = []
            if g.labels is not None:
                attrs.append(f'label="{g.label_of(v)}"')
            if v == head:
                attrs.append("style=filled")
                attrs.append("fillcolor=lightblue")
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f"    {v}{suffix};")
        lines.append("  }")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
