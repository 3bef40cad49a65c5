"""Independent brute-force oracles used by the test suite.

Everything here is deliberately naive: exhaustive search and breadth-first
search over explicit state spaces.  None of it shares code with the library
algorithms it checks.
"""
from __future__ import annotations

import itertools
import math
from collections import deque

State = tuple  # forward array of a partial permutation, None = no token


def resolved(state: State) -> bool:
    return all(t is None or t == i for i, t in enumerate(state))


def swap_state(state: State, u: int, v: int) -> State:
    s = list(state)
    s[u], s[v] = s[v], s[u]
    return tuple(s)


def all_matchings(edges: list[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """Every nonempty matching (set of vertex-disjoint edges)."""
    out: list[list[tuple[int, int]]] = []

    def rec(i: int, used: set[int], acc: list[tuple[int, int]]):
        if i == len(edges):
            if acc:
                out.append(list(acc))
            return
        rec(i + 1, used, acc)
        u, v = edges[i]
        if u not in used and v not in used:
            acc.append((u, v))
            rec(i + 1, used | {u, v}, acc)
            acc.pop()

    rec(0, set(), [])
    return out


def bfs_routing_number(edges: list[tuple[int, int]], start: State) -> int:
    """Exact minimum number of matchings resolving the permutation."""
    if resolved(start):
        return 0
    moves = all_matchings(edges)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        d = dist[state]
        for matching in moves:
            nxt = state
            for u, v in matching:
                nxt = swap_state(nxt, u, v)
            if nxt not in dist:
                if resolved(nxt):
                    return d + 1
                dist[nxt] = d + 1
                queue.append(nxt)
    raise AssertionError("routing BFS exhausted the state space")


def bfs_routing_size(edges: list[tuple[int, int]], start: State) -> int:
    """Exact minimum number of single swaps resolving the permutation."""
    if resolved(start):
        return 0
    dist = {start: 0}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        d = dist[state]
        for u, v in edges:
            nxt = swap_state(state, u, v)
            if nxt not in dist:
                if resolved(nxt):
                    return d + 1
                dist[nxt] = d + 1
                queue.append(nxt)
    raise AssertionError("token swap BFS exhausted the state space")


def routing_size_table(edges: list[tuple[int, int]], n: int) -> dict[State, int]:
    """rs(G, pi) for every total permutation, via one BFS sweep from identity.

    Swap moves are involutions, so distance from identity equals distance to
    identity.
    """
    ident: State = tuple(range(n))
    dist: dict[State, int] = {ident: 0}
    queue = deque([ident])
    while queue:
        state = queue.popleft()
        d = dist[state]
        for u, v in edges:
            nxt = swap_state(state, u, v)
            if nxt not in dist:
                dist[nxt] = d + 1
                queue.append(nxt)
    return dist


def brute_max_bipartite(n_left: int, n_right: int,
                        pairs: set[tuple[int, int]]) -> int:
    """Maximum matching cardinality by exhaustive recursion."""
    best = 0

    def rec(l: int, used_r: set[int], size: int):
        nonlocal best
        best = max(best, size)
        if l == n_left:
            return
        rec(l + 1, used_r, size)
        for r in range(n_right):
            if (l, r) in pairs and r not in used_r:
                rec(l + 1, used_r | {r}, size + 1)

    rec(0, set(), 0)
    return best


def brute_min_weight_pm(cost: list[list[float]]) -> tuple[float, list[int]] | None:
    """(total, lex-smallest optimal column assignment), or None if infeasible.

    cost[r][c] = math.inf marks a forbidden pair.
    """
    n = len(cost)
    best_total, best = math.inf, None
    for perm in itertools.permutations(range(n)):
        total = 0.0
        ok = True
        for r, c in enumerate(perm):
            w = cost[r][c]
            if not math.isfinite(w):
                ok = False
                break
            total += w
        if ok and total < best_total - 1e-12:
            best_total, best = total, list(perm)
    if best is None:
        return None
    return best_total, best


def connected_small_graphs(max_n: int) -> list[tuple[int, list[tuple[int, int]]]]:
    """All connected graphs with 2..max_n vertices, one per isomorphism class."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if 2 <= n <= max_n and nx.is_connected(g):
            out.append((n, sorted(tuple(sorted(e)) for e in g.edges())))
    return out


def longest_weighted_path(gate_qubits: list[tuple[int, ...]],
                          gate_weights: list[int]) -> int:
    """Max-weight path in the dependency DAG of a gate list, by DP over an
    explicitly constructed edge relation."""
    n = len(gate_qubits)
    preds: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i):
            if set(gate_qubits[i]) & set(gate_qubits[j]):
                preds[i].append(j)
    best = [0] * n
    for i in range(n):
        incoming = max((best[j] for j in preds[i]), default=0)
        best[i] = incoming + gate_weights[i]
    return max(best, default=0)
