"""Shared test utilities: exhaustive graph enumeration and small oracles."""

from __future__ import annotations

from itertools import combinations

from qgraph import BlackBoxGraph, Model


def is_connected(n: int, edges: list[tuple[int, int]]) -> bool:
    if n == 1:
        return True
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    seen = 1
    stack = [0]
    while stack:
        u = stack.pop()
        rest = adj[u] & ~seen
        while rest:
            low = rest & -rest
            rest ^= low
            seen |= low
            stack.append(low.bit_length() - 1)
    return seen == (1 << n) - 1


def connected_graph_edge_sets(n: int) -> list[tuple[tuple[int, int], ...]]:
    """Edge sets of every connected labeled graph on exactly n vertices."""
    pairs = list(combinations(range(n), 2))
    out = []
    for mask in range(1, 1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(edges) < n - 1:
            continue
        if is_connected(n, edges):
            out.append(tuple(edges))
    return out


def connected_bipartite_edge_sets(n: int) -> list[tuple[tuple[int, int], ...]]:
    """Edge sets of every connected labeled bipartite graph on n vertices.

    A connected bipartite graph has exactly one 2-coloring up to swapping
    sides, so enumerating left sets S containing vertex 0 and, per split, all
    connected subsets of the S-to-complement edges lists each graph once.
    """
    out = []
    rest = [v for v in range(n) if v != 0]
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            left = {0, *extra}
            right = [v for v in range(n) if v not in left]
            if not right and n > 1:
                continue
            pairs = [(u, v) for u in sorted(left) for v in right]
            for mask in range(1, 1 << len(pairs)):
                edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
                if len(edges) < n - 1:
                    continue
                if is_connected(n, edges):
                    out.append(tuple(edges))
    return out


def graph_from_edges(n: int, edges, model: Model = Model.LIST) -> BlackBoxGraph:
    return BlackBoxGraph.from_edges(n, list(edges), model=model)
