"""Matching algorithms: greedy maximal, Hopcroft-Karp, and min-weight perfect.

All routines are deterministic: edge iteration follows sorted order and ties
in the assignment problem are broken toward the lexicographically smallest
matched edge set.
"""
from __future__ import annotations

import itertools
import math
from collections import deque

import numpy as np
from scipy.optimize import linear_sum_assignment

from .graphs import ArchitectureGraph, Edge

INF = math.inf


class WeightedBipartiteGraph:
    """Bipartite multigraph with real edge weights.

    Edges are (left, right, weight) triples; parallel edges are allowed.
    """

    def __init__(self, n_left: int, n_right: int,
                 edges: list[tuple[int, int, float]] | None = None):
        self.n_left = n_left
        self.n_right = n_right
        self.edges: list[tuple[int, int, float]] = []
        for l, r, w in edges or []:
            self.add_edge(l, r, w)

    def add_edge(self, l: int, r: int, w: float = 1.0) -> None:
        if not (0 <= l < self.n_left and 0 <= r < self.n_right):
            raise ValueError(f"edge ({l}, {r}) out of range")
        if not math.isfinite(w):
            raise ValueError(f"edge weight {w} is not finite")
        self.edges.append((l, r, float(w)))

    def support(self) -> dict[int, list[int]]:
        """Distinct (left -> sorted rights) adjacency, ignoring weights."""
        adj: dict[int, set[int]] = {}
        for l, r, _ in self.edges:
            adj.setdefault(l, set()).add(r)
        return {l: sorted(rs) for l, rs in adj.items()}


def maximal_matching(g: ArchitectureGraph, excluded: set[int] | None = None) -> list[Edge]:
    """Greedy maximal matching over lexicographically sorted edges,
    skipping edges that touch an excluded vertex."""
    excluded = excluded or set()
    used: set[int] = set()
    matching: list[Edge] = []
    for u, v in g.sorted_edges():
        if u in excluded or v in excluded or u in used or v in used:
            continue
        matching.append((u, v))
        used.add(u)
        used.add(v)
    return matching


def max_bipartite_matching(b: WeightedBipartiteGraph) -> list[tuple[int, int]]:
    """Maximum-cardinality matching via Hopcroft-Karp (weights ignored)."""
    adj = b.support()
    lefts = sorted(adj)
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}
    dist: dict[int, int] = {}
    UNSEEN = -1

    def bfs() -> bool:
        queue = deque()
        for l in lefts:
            dist[l] = UNSEEN if l in match_l else 0
            if l not in match_l:
                queue.append(l)
        found = False
        while queue:
            l = queue.popleft()
            for r in adj[l]:
                lp = match_r.get(r)
                if lp is None:
                    found = True
                elif dist[lp] == UNSEEN:
                    dist[lp] = dist[l] + 1
                    queue.append(lp)
        return found

    def dfs(l: int) -> bool:
        for r in adj[l]:
            lp = match_r.get(r)
            if lp is None or (dist[lp] == dist[l] + 1 and dfs(lp)):
                match_l[l] = r
                match_r[r] = l
                return True
        dist[l] = UNSEEN
        return False

    while bfs():
        for l in lefts:
            if l not in match_l:
                dfs(l)
    return sorted(match_l.items())


def _cost_matrix(b: WeightedBipartiteGraph) -> np.ndarray:
    cost = np.full((b.n_left, b.n_right), INF)
    for l, r, w in b.edges:
        if w < cost[l, r]:
            cost[l, r] = w
    return cost


def _solve_assignment(cost: np.ndarray) -> tuple[float, list[int]] | None:
    """Min-cost perfect assignment on a square matrix with inf = forbidden.

    Returns (total, cols) or None when no perfect matching exists.
    """
    n = cost.shape[0]
    finite = cost[np.isfinite(cost)]
    big = (abs(finite).max() if finite.size else 1.0) * n + 1.0
    work = np.where(np.isfinite(cost), cost, big * 2)
    rows, cols = linear_sum_assignment(work)
    if any(not math.isfinite(cost[r, c]) for r, c in zip(rows, cols)):
        return None
    order = np.argsort(rows)
    return float(cost[rows, cols].sum()), [int(cols[i]) for i in order]


def _lex_min_assignment(cost: np.ndarray) -> list[int] | None:
    """Exhaustive lexicographically-smallest optimal assignment (small n)."""
    n = cost.shape[0]
    best_total, best = INF, None
    for perm in itertools.permutations(range(n)):
        total = 0.0
        ok = True
        for r, c in enumerate(perm):
            w = cost[r, c]
            if not math.isfinite(w):
                ok = False
                break
            total += w
        if ok and total < best_total - 1e-12:
            best_total, best = total, list(perm)
    return best


def min_weight_perfect_matching(b: WeightedBipartiteGraph) -> list[tuple[int, int]]:
    """Minimum-weight perfect matching on a bipartite (multi)graph.

    Negative weights are permitted.  Among equal-weight optima the
    lexicographically smallest edge set is returned.  Raises ValueError when
    no perfect matching exists.
    """
    if b.n_left != b.n_right:
        raise ValueError(f"sides differ: {b.n_left} != {b.n_right}")
    n = b.n_left
    if n == 0:
        return []
    cost = _cost_matrix(b)
    if n <= 5:
        cols = _lex_min_assignment(cost)
        if cols is None:
            raise ValueError("no perfect matching exists")
        return [(r, c) for r, c in enumerate(cols)]

    solved = _solve_assignment(cost)
    if solved is None:
        raise ValueError("no perfect matching exists")
    total = solved[0]
    # Fix rows in order to the smallest column that keeps the optimum.
    fixed_cols: list[int] = []
    avail = list(range(n))
    for row in range(n):
        rest_rows = list(range(row + 1, n))
        chosen = None
        for c in avail:
            if not math.isfinite(cost[row, c]):
                continue
            sub = cost[np.ix_(rest_rows, [x for x in avail if x != c])] if rest_rows else np.zeros((0, 0))
            sub_solved = _solve_assignment(sub) if rest_rows else (0.0, [])
            if sub_solved is None:
                continue
            fixed_total = sum(cost[r, cc] for r, cc in enumerate(fixed_cols)) + cost[row, c] + sub_solved[0]
            if fixed_total <= total + 1e-9:
                chosen = c
                break
        assert chosen is not None, "assignment refinement lost feasibility"
        fixed_cols.append(chosen)
        avail.remove(chosen)
    return [(r, c) for r, c in enumerate(fixed_cols)]
