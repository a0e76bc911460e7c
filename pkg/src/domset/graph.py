"""Graph representation, file formats, and domination primitives.

The :class:`Graph` is an immutable undirected simple graph in compressed
sparse row form (``indptr``/``indices``), with optional positive vertex
weights and a label map preserving the vertex names of the input file.
:class:`Solution` is the mutable vertex-subset state shared by all solvers,
maintaining per-vertex domination counts incrementally.

Supported file formats (see the project README for the exact grammars):

* ``edge-list`` — one ``u v`` pair per line, ``#`` comment lines ignored.
  0- vs 1-indexing is auto-detected from the minimum id.  A comment line of
  the form ``# vertices: N`` (emitted by :func:`write_edge_list`) pins the
  vertex count so isolated vertices survive a round trip; without it, ids are
  compacted to a dense 0..n-1 range and the original ids kept as labels.
* ``dimacs-col`` — ``c`` comments, one ``p edge <n> <m>`` header, ``m`` lines
  ``e u v`` with 1-indexed endpoints.
* ``weighted-instance`` — first line ``n m``, then ``n`` vertex weight lines,
  then ``m`` edge lines ``u v`` (0- or 1-indexed, auto-detected).

Duplicate edges and self-loops are dropped silently and counted in the
:class:`LoadReport` attached to the loaded graph.
"""

from __future__ import annotations

import io
import os
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

__all__ = [
    "Graph",
    "GraphFormatError",
    "LoadReport",
    "Solution",
    "coverage_gain",
    "is_dominating_set",
    "load_graph",
    "read_solution",
    "redundant_vertices",
    "write_edge_list",
    "write_solution",
    "write_weighted_instance",
]


class GraphFormatError(ValueError):
    """Raised for malformed or out-of-range input files."""

    def __init__(self, message: str, line_no: Optional[int] = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


@dataclass
class LoadReport:
    """What the loader saw: format, indexing, and dropped input lines."""

    fmt: str
    n: int
    m: int
    zero_indexed: bool
    duplicate_edges: int = 0
    self_loops: int = 0
    compacted: bool = False


def _build_csr(n: int, edges: Iterable[tuple[int, int]]):
    """Build symmetric, sorted, deduplicated CSR arrays from an edge list.

    Returns ``(indptr, indices, m, duplicates, self_loops)``.
    """
    us = []
    vs = []
    self_loops = 0
    for u, v in edges:
        u = int(u)
        v = int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            self_loops += 1
            continue
        if u > v:
            u, v = v, u
        us.append(u)
        vs.append(v)
    raw = len(us)
    if raw:
        key = np.asarray(us, dtype=np.int64) * n + np.asarray(vs, dtype=np.int64)
        key = np.unique(key)
        u_arr = key // n
        v_arr = key % n
    else:
        u_arr = np.empty(0, dtype=np.int64)
        v_arr = np.empty(0, dtype=np.int64)
    m = len(u_arr)
    duplicates = raw - m
    row = np.concatenate([u_arr, v_arr])
    col = np.concatenate([v_arr, u_arr])
    order = np.lexsort((col, row))
    indices = col[order].astype(np.int32)
    counts = np.bincount(row, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, indices, m, duplicates, self_loops


class Graph:
    """Immutable undirected simple graph in CSR form.

    ``indices[indptr[v]:indptr[v+1]]`` holds the sorted neighbor ids of ``v``.
    ``weights`` is either ``None`` (unit weights) or a positive float array of
    length ``n``.  ``labels`` maps internal dense ids back to the names used
    in the source file (``None`` means the identity).
    """

    __slots__ = ("n", "m", "indptr", "indices", "weights", "labels", "load_report")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        weights: Optional[Sequence[float]] = None,
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.n = n
        self.indptr, self.indices, self.m, _, _ = _build_csr(n, edges)
        if weights is not None:
            w = np.asarray(weights, dtype=np.float64)
            if w.shape != (n,):
                raise ValueError(f"weights must have length {n}")
            if not np.all(w > 0):
                raise ValueError("all weights must be strictly positive")
            self.weights = w
        else:
            self.weights = None
        if labels is not None:
            if len(labels) != n:
                raise ValueError(f"labels must have length {n}")
            self.labels = [str(x) for x in labels]
        else:
            self.labels = None
        self.load_report: Optional[LoadReport] = None

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr).astype(np.int32)

    @property
    def max_degree(self) -> int:
        return int(np.diff(self.indptr).max()) if self.n else 0

    @property
    def total_weight(self) -> float:
        if self.weights is None:
            return float(self.n)
        return float(self.weights.sum())

    def has_edge(self, u: int, v: int) -> bool:
        lo = int(self.indptr[u])
        hi = int(self.indptr[u + 1])
        i = lo + bisect_left(self.indices[lo:hi].tolist(), v)
        return i < hi and self.indices[i] == v

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def edges(self):
        """Yield each undirected edge once, as ``(u, v)`` with ``u < v``."""
        for u in range(self.n):
            for v in self.neighbors(u):
                if u < v:
                    yield u, int(v)

    def weights_or_unit(self) -> np.ndarray:
        if self.weights is not None:
            return self.weights
        return np.ones(self.n, dtype=np.float64)

    def __repr__(self):
        w = "weighted" if self.weights is not None else "unweighted"
        return f"Graph(n={self.n}, m={self.m}, {w})"


class Solution:
    """A vertex subset with incremental domination bookkeeping.

    ``dominated_count[u]`` is the number of members in the closed neighborhood
    of ``u``; the set is dominating exactly when no count is zero.  ``add``
    and ``remove`` maintain counts, size, and total weight in O(deg(v)).
    """

    __slots__ = ("graph", "members", "in_set", "dominated_count", "weight", "_undominated")

    def __init__(self, graph: Graph):
        self.graph = graph
        self.members: set[int] = set()
        self.in_set = np.zeros(graph.n, dtype=bool)
        self.dominated_count = np.zeros(graph.n, dtype=np.int32)
        self.weight = 0.0
        self._undominated = graph.n

    @classmethod
    def from_members(cls, graph: Graph, members: Iterable[int]) -> "Solution":
        s = cls(graph)
        for v in members:
            s.add(int(v))
        return s

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_dominating(self) -> bool:
        return self._undominated == 0

    def add(self, v: int) -> None:
        if self.in_set[v]:
            raise ValueError(f"vertex {v} already in the set")
        self.members.add(v)
        self.in_set[v] = True
        w = self.graph.weights
        self.weight += float(w[v]) if w is not None else 1.0
        cnt = self.dominated_count
        if cnt[v] == 0:
            self._undominated -= 1
        cnt[v] += 1
        for u in self.graph.neighbors(v):
            if cnt[u] == 0:
                self._undominated -= 1
            cnt[u] += 1

    def remove(self, v: int) -> None:
        if not self.in_set[v]:
            raise ValueError(f"vertex {v} not in the set")
        self.members.remove(v)
        self.in_set[v] = False
        w = self.graph.weights
        self.weight -= float(w[v]) if w is not None else 1.0
        cnt = self.dominated_count
        cnt[v] -= 1
        if cnt[v] == 0:
            self._undominated += 1
        for u in self.graph.neighbors(v):
            cnt[u] -= 1
            if cnt[u] == 0:
                self._undominated += 1

    def copy(self) -> "Solution":
        s = Solution.__new__(Solution)
        s.graph = self.graph
        s.members = set(self.members)
        s.in_set = self.in_set.copy()
        s.dominated_count = self.dominated_count.copy()
        s.weight = self.weight
        s._undominated = self._undominated
        return s

    def __contains__(self, v: int) -> bool:
        return bool(self.in_set[v])

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __repr__(self):
        return f"Solution(size={self.size}, weight={self.weight:g}, dominating={self.is_dominating})"


def is_dominating_set(g: Graph, members: Iterable[int]) -> bool:
    """True iff every vertex is in ``members`` or adjacent to one of them."""
    covered = np.zeros(g.n, dtype=bool)
    for v in members:
        v = int(v)
        if not 0 <= v < g.n:
            raise ValueError(f"vertex id {v} out of range")
        covered[v] = True
        covered[g.neighbors(v)] = True
    return bool(covered.all())


def coverage_gain(g: Graph, v: int, s: Solution) -> int:
    """Number of non-dominated vertices in the closed neighborhood of ``v``."""
    cnt = s.dominated_count
    gain = 1 if cnt[v] == 0 else 0
    for u in g.neighbors(v):
        if cnt[u] == 0:
            gain += 1
    return gain


def redundant_vertices(g: Graph, s: Solution) -> set[int]:
    """Members whose sole removal leaves the set dominating.

    ``v`` is redundant iff every vertex of its closed neighborhood has at
    least two dominators.  Raises if ``s`` is not dominating (redundancy is
    only defined on dominating sets).
    """
    if not s.is_dominating:
        raise ValueError("redundant_vertices requires a dominating set")
    cnt = s.dominated_count
    out = set()
    for v in s.members:
        if cnt[v] < 2:
            continue
        if all(cnt[u] >= 2 for u in g.neighbors(v)):
            out.add(v)
    return out


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------

_FMT_ALIASES = {
    "edge-list": "edge-list",
    "edgelist": "edge-list",
    "dimacs-col": "dimacs-col",
    "dimacs": "dimacs-col",
    "col": "dimacs-col",
    "weighted-instance": "weighted-instance",
    "weighted": "weighted-instance",
    "smpi": "weighted-instance",
}


def _read_text(source) -> str:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8") as f:
            return f.read()
    data = source.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def _sniff_format(lines: list[tuple[int, str]]) -> str:
    """Guess the format from the first meaningful lines.

    DIMACS files start with a ``c``/``p`` record.  A weighted instance has an
    ``n m`` header followed by single-token weight lines; a bare edge list has
    two tokens on every line.
    """
    meaningful = [t for t in lines if not t[1].startswith("#")]
    if not meaningful:
        return "edge-list"
    first = meaningful[0][1].split()
    if first[0] in ("c", "p", "e"):
        return "dimacs-col"
    if len(meaningful) >= 2 and len(first) == 2:
        if len(meaningful[1][1].split()) == 1:
            return "weighted-instance"
    return "edge-list"


def _parse_int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected integer {what}, got {token!r}", line_no) from None


def _parse_edge_list(lines: list[tuple[int, str]]) -> Graph:
    declared_n = None
    pairs = []
    for line_no, line in lines:
        if line.startswith("#"):
            body = line[1:].strip()
            if body.lower().startswith("vertices:"):
                declared_n = _parse_int(body.split(":", 1)[1].strip(), line_no, "vertex count")
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", line_no)
        u = _parse_int(tokens[0], line_no, "vertex id")
        v = _parse_int(tokens[1], line_no, "vertex id")
        if u < 0 or v < 0:
            raise GraphFormatError(f"negative vertex id in {line!r}", line_no)
        pairs.append((line_no, u, v))
    if not pairs and declared_n is None:
        raise GraphFormatError("empty edge list (no edges and no '# vertices:' line)")
    min_id = min(min(u, v) for _, u, v in pairs) if pairs else 0
    zero_indexed = min_id == 0
    offset = 0 if zero_indexed else 1
    compacted = False
    if declared_n is not None:
        n = declared_n
        labels = None
        edges = []
        for line_no, u, v in pairs:
            u -= offset
            v -= offset
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex id out of range 0..{n - 1}", line_no)
            edges.append((u, v))
    else:
        ids = sorted({x for _, u, v in pairs for x in (u, v)})
        dense = {orig: i for i, orig in enumerate(ids)}
        n = len(ids)
        compacted = ids != list(range(n))
        labels = [str(x) for x in ids] if compacted or not zero_indexed else None
        edges = [(dense[u], dense[v]) for _, u, v in pairs]
    g = Graph.__new__(Graph)
    g.n = n
    g.indptr, g.indices, g.m, dups, loops = _build_csr(n, edges)
    g.weights = None
    g.labels = labels
    g.load_report = LoadReport(
        fmt="edge-list",
        n=n,
        m=g.m,
        zero_indexed=zero_indexed,
        duplicate_edges=dups,
        self_loops=loops,
        compacted=compacted,
    )
    return g


def _parse_dimacs(lines: list[tuple[int, str]]) -> Graph:
    n = None
    m_declared = None
    edges = []
    for line_no, line in lines:
        kind = line.split(maxsplit=1)[0]
        if kind == "c":
            continue
        if kind == "p":
            if n is not None:
                raise GraphFormatError("duplicate 'p' header", line_no)
            tokens = line.split()
            if len(tokens) != 4:
                raise GraphFormatError(f"expected 'p edge n m', got {line!r}", line_no)
            n = _parse_int(tokens[2], line_no, "vertex count")
            m_declared = _parse_int(tokens[3], line_no, "edge count")
            continue
        if kind == "e":
            if n is None:
                raise GraphFormatError("edge record before 'p' header", line_no)
            tokens = line.split()
            if len(tokens) != 3:
                raise GraphFormatError(f"expected 'e u v', got {line!r}", line_no)
            u = _parse_int(tokens[1], line_no, "vertex id")
            v = _parse_int(tokens[2], line_no, "vertex id")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex id out of range 1..{n}", line_no)
            edges.append((u - 1, v - 1))
            continue
        raise GraphFormatError(f"unknown record type {kind!r}", line_no)
    if n is None:
        raise GraphFormatError("missing 'p edge n m' header")
    if m_declared != len(edges):
        raise GraphFormatError(f"header declares {m_declared} edges, file has {len(edges)}")
    g = Graph.__new__(Graph)
    g.n = n
    g.indptr, g.indices, g.m, dups, loops = _build_csr(n, edges)
    g.weights = None
    g.labels = None
    g.load_report = LoadReport(
        fmt="dimacs-col",
        n=n,
        m=g.m,
        zero_indexed=False,
        duplicate_edges=dups,
        self_loops=loops,
    )
    return g


def _parse_weighted(lines: list[tuple[int, str]]) -> Graph:
    rows = [t for t in lines if not t[1].startswith("#")]
    if not rows:
        raise GraphFormatError("empty weighted instance")
    line_no, header = rows[0]
    tokens = header.split()
    if len(tokens) != 2:
        raise GraphFormatError(f"expected 'n m' header, got {header!r}", line_no)
    n = _parse_int(tokens[0], line_no, "vertex count")
    m = _parse_int(tokens[1], line_no, "edge count")
    if len(rows) != 1 + n + m:
        raise GraphFormatError(
            f"expected {1 + n + m} lines for n={n}, m={m}; file has {len(rows)}"
        )
    weights = np.empty(n, dtype=np.float64)
    for i in range(n):
        line_no, line = rows[1 + i]
        if len(line.split()) != 1:
            raise GraphFormatError(f"expected one weight, got {line!r}", line_no)
        try:
            w = float(line)
        except ValueError:
            raise GraphFormatError(f"bad weight {line!r}", line_no) from None
        if w <= 0:
            raise GraphFormatError(f"weight must be positive, got {w}", line_no)
        weights[i] = w
    raw_edges = []
    for i in range(m):
        line_no, line = rows[1 + n + i]
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", line_no)
        u = _parse_int(tokens[0], line_no, "vertex id")
        v = _parse_int(tokens[1], line_no, "vertex id")
        raw_edges.append((line_no, u, v))
    zero_indexed = any(u == 0 or v == 0 for _, u, v in raw_edges)
    offset = 0 if zero_indexed else 1
    edges = []
    for line_no, u, v in raw_edges:
        u -= offset
        v -= offset
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range 0..{n - 1}", line_no)
        edges.append((u, v))
    g = Graph.__new__(Graph)
    g.n = n
    g.indptr, g.indices, g.m, dups, loops = _build_csr(n, edges)
    g.weights = weights
    g.labels = None
    g.load_report = LoadReport(
        fmt="weighted-instance",
        n=n,
        m=g.m,
        zero_indexed=zero_indexed,
        duplicate_edges=dups,
        self_loops=loops,
    )
    return g


def load_graph(source: Union[str, os.PathLike, io.IOBase], fmt: Optional[str] = None) -> Graph:
    """Load a graph from a path or stream, auto-detecting the format.

    ``fmt`` may be one of ``edge-list``, ``dimacs-col``, ``weighted-instance``
    (or the aliases ``edgelist``/``dimacs``/``weighted``/``smpi``); when
    omitted the format is sniffed from the first lines.
    """
    text = _read_text(source)
    lines = []
    for i, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped:
            lines.append((i, stripped))
    if fmt is None:
        fmt = _sniff_format(lines)
    else:
        key = fmt.lower()
        if key not in _FMT_ALIASES:
            raise ValueError(f"unknown format {fmt!r}")
        fmt = _FMT_ALIASES[key]
    if fmt == "edge-list":
        return _parse_edge_list(lines)
    if fmt == "dimacs-col":
        return _parse_dimacs(lines)
    return _parse_weighted(lines)


def _fmt_weight(w: float) -> str:
    return str(int(w)) if float(w).is_integer() else repr(float(w))


def write_edge_list(g: Graph, path) -> None:
    """Write the canonical edge-list form (internal dense ids).

    A ``# vertices: n`` directive is emitted so isolated vertices survive the
    round trip.
    """
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"# vertices: {g.n}\n")
        for u, v in g.edges():
            f.write(f"{u} {v}\n")


def write_weighted_instance(g: Graph, path) -> None:
    """Write the weighted-instance format (1-indexed edge endpoints)."""
    w = g.weights_or_unit()
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"{g.n} {g.m}\n")
        for v in range(g.n):
            f.write(_fmt_weight(w[v]) + "\n")
        for u, v in g.edges():
            f.write(f"{u + 1} {v + 1}\n")


def write_solution(sol: Solution, path, header: Optional[dict] = None) -> None:
    """Write a solution file: ``#`` header lines, then one member id per line.

    Members are written as original labels, sorted by internal id.
    """
    g = sol.graph
    with open(path, "w", encoding="utf-8") as f:
        meta = {"size": sol.size, "weight": _fmt_weight(sol.weight)}
        if header:
            meta.update(header)
        for k, v in meta.items():
            f.write(f"# {k}: {v}\n")
        for v in sorted(sol.members):
            f.write(g.label_of(v) + "\n")


def read_solution(g: Graph, path) -> Solution:
    """Read a solution file back against ``g`` (labels resolved to ids)."""
    if g.labels is not None:
        lookup = {lab: i for i, lab in enumerate(g.labels)}
    else:
        lookup = None
    members = []
    with open(path, "r", encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            token = raw.strip()
            if not token or token.startswith("#"):
                continue
            if lookup is not None:
                if token not in lookup:
                    raise GraphFormatError(f"unknown vertex label {token!r}", line_no)
                members.append(lookup[token])
            else:
                v = _parse_int(token, line_no, "vertex id")
                if not 0 <= v < g.n:
                    raise GraphFormatError(f"vertex id out of range 0..{g.n - 1}", line_no)
                members.append(v)
    return Solution.from_members(g, members)
