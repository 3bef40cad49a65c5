"""Architecture graphs: simple connected graphs with cached hop distances.

Vertices are dense indices 0..n-1.  Hierarchical products store their factor
graphs and connection vector; the product vertex (i, j) flattens to i*n2 + j.
"""
from __future__ import annotations

from collections import deque

import numpy as np

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class ArchitectureGraph:
    """Simple connected graph, optionally tagged with structural kind.

    ``kind`` is one of ``path``, ``complete``, ``grid``, ``modular``,
    ``hier`` or ``generic``.  The hierarchical kinds (grid, modular, hier)
    carry ``factor1``, ``factor2`` and the 0/1 connection vector ``vec``.
    """

    def __init__(self, n: int, edges: set[Edge], kind: str = "generic",
                 factor1: "ArchitectureGraph | None" = None,
                 factor2: "ArchitectureGraph | None" = None,
                 vec: tuple[int, ...] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.edges: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            self.edges.add(_norm_edge(u, v))
        self.kind = kind
        self.factor1 = factor1
        self.factor2 = factor2
        self.vec = vec
        self.adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(self.edges):
            self.adj[u].append(v)
            self.adj[v].append(u)
        for nbrs in self.adj:
            nbrs.sort()
        self._dist: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"ArchitectureGraph({self.kind}, n={self.n}, m={len(self.edges)})"

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == self.n

    def distances(self) -> np.ndarray:
        """All-pairs hop distances, BFS from every vertex, cached."""
        if self._dist is None:
            if not self.is_connected():
                raise ValueError("distance matrix requires a connected graph")
            d = np.full((self.n, self.n), -1, dtype=np.int64)
            for s in range(self.n):
                d[s, s] = 0
                queue = deque([s])
                while queue:
                    u = queue.popleft()
                    for v in self.adj[u]:
                        if d[s, v] < 0:
                            d[s, v] = d[s, u] + 1
                            queue.append(v)
            self._dist = d
        return self._dist

    def diameter(self) -> int:
        return int(self.distances().max())

    def shortest_path(self, s: int, t: int) -> list[int]:
        """BFS path from s to t; ties broken toward lowest-index predecessor."""
        if s == t:
            return [s]
        pred: dict[int, int] = {s: s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:  # adj sorted -> lowest-index predecessor wins
                if v not in pred:
                    pred[v] = u
                    if v == t:
                        path = [t]
                        while path[-1] != s:
                            path.append(pred[path[-1]])
                        return path[::-1]
                    queue.append(v)
        raise ValueError(f"no path from {s} to {t}")


def path_graph(n: int) -> ArchitectureGraph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return ArchitectureGraph(n, {(i, i + 1) for i in range(n - 1)}, kind="path")


def complete_graph(n: int) -> ArchitectureGraph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    edges = {(i, j) for i in range(n) for j in range(i + 1, n)}
    return ArchitectureGraph(n, edges, kind="complete")


def hierarchical_product(g1: ArchitectureGraph, g2: ArchitectureGraph,
                         vec: tuple[int, ...], kind: str = "hier") -> ArchitectureGraph:
    """Product with vertex set V1 x V2: copies of g2 per V1-vertex, plus a
    copy of g1 joining position-j vertices wherever vec[j] = 1."""
    n1, n2 = g1.n, g2.n
    if len(vec) != n2:
        raise ValueError(f"vec has length {len(vec)}, expected {n2}")
    if not any(vec):
        raise ValueError("vec must have at least one 1 (graph would be disconnected)")
    edges: set[Edge] = set()
    for i in range(n1):
        for (j, jp) in g2.edges:
            edges.add(_norm_edge(i * n2 + j, i * n2 + jp))
    for (i, ip) in g1.edges:
        for j in range(n2):
            if vec[j]:
                edges.add(_norm_edge(i * n2 + j, ip * n2 + j))
    g = ArchitectureGraph(n1 * n2, edges, kind=kind, factor1=g1, factor2=g2,
                          vec=tuple(vec))
    if not g.is_connected():
        raise ValueError("hierarchical product is disconnected")
    return g


def grid_graph(n1: int, n2: int) -> ArchitectureGraph:
    """Cartesian product of two paths (all-ones connection vector)."""
    return hierarchical_product(path_graph(n1), path_graph(n2),
                                (1,) * n2, kind="grid")


def modular_graph(n1: int, n2: int) -> ArchitectureGraph:
    """n1 fully connected modules of n2 qubits, linked through one
    communicator qubit per module (first-basis-vector connection)."""
    vec = (1,) + (0,) * (n2 - 1)
    return hierarchical_product(complete_graph(n1), complete_graph(n2),
                                vec, kind="modular")


def build_architecture(spec: str) -> ArchitectureGraph:
    """Build a graph from a spec string.

    Formats: ``path:N``, ``complete:N``, ``grid:RxC``, ``modular:MxK``,
    ``hier:<file>`` (see :func:`parse_hier_file`).
    """
    if ":" not in spec:
        raise ValueError(f"bad architecture spec {spec!r}: expected kind:params")
    kind, _, params = spec.partition(":")
    kind = kind.strip().lower()
    if kind == "path":
        return path_graph(int(params))
    if kind == "complete":
        return complete_graph(int(params))
    if kind in ("grid", "modular"):
        parts = params.lower().split("x")
        if len(parts) != 2:
            raise ValueError(f"bad {kind} parameters {params!r}: expected AxB")
        a, b = int(parts[0]), int(parts[1])
        return grid_graph(a, b) if kind == "grid" else modular_graph(a, b)
    if kind == "hier":
        with open(params, "r", encoding="utf-8") as fh:
            return parse_hier_file(fh.read())
    raise ValueError(f"unknown architecture kind {kind!r}")


def parse_hier_file(text: str) -> ArchitectureGraph:
    """Parse a line-oriented hierarchical product description.

    Directives (one per line, ``#`` comments ignored)::

        n1 <int>        vertex count of the first factor
        n2 <int>        vertex count of the second factor
        v  <0/1> ...    connection vector, n2 entries
        e1 <u> <v>      edge of the first factor
        e2 <u> <v>      edge of the second factor
    """
    n1 = n2 = None
    vec: tuple[int, ...] | None = None
    e1: set[Edge] = set()
    e2: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "n1":
                n1 = int(parts[1])
            elif parts[0] == "n2":
                n2 = int(parts[1])
            elif parts[0] == "v":
                vec = tuple(int(x) for x in parts[1:])
            elif parts[0] == "e1":
                e1.add(_norm_edge(int(parts[1]), int(parts[2])))
            elif parts[0] == "e2":
                e2.add(_norm_edge(int(parts[1]), int(parts[2])))
            else:
                raise ValueError(f"unknown directive {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"hier file line {lineno}: {exc}") from exc
    if n1 is None or n2 is None or vec is None:
        raise ValueError("hier file must define n1, n2 and v")
    g1 = _detect_factor(n1, e1)
    g2 = _detect_factor(n2, e2)
    return hierarchical_product(g1, g2, vec)


def _detect_factor(n: int, edges: set[Edge]) -> ArchitectureGraph:
    """Tag a factor as path/complete when its edge set matches exactly."""
    if edges == {(i, i + 1) for i in range(n - 1)}:
        return ArchitectureGraph(n, edges, kind="path")
    if len(edges) == n * (n - 1) // 2 and n >= 1:
        return ArchitectureGraph(n, edges, kind="complete")
    g = ArchitectureGraph(n, edges, kind="generic")
    if not g.is_connected():
        raise ValueError("factor graph is disconnected")
    return g


def induced_subgraph(g: ArchitectureGraph, vertices: set[int]) -> tuple[ArchitectureGraph, list[int]]:
    """Vertex-induced subgraph, re-indexed densely.

    Returns the subgraph (kind ``generic``) and the list mapping new index ->
    original vertex.  The result may be disconnected; callers that need
    connectivity must check.
    """
    keep = sorted(vertices)
    index = {v: i for i, v in enumerate(keep)}
    edges = {(index[u], index[v]) for u, v in g.edges if u in index and v in index}
    return ArchitectureGraph(len(keep), edges), keep
