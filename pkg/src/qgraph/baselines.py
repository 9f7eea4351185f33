"""Classical reference algorithms used to verify the search-driven ones.

Everything here reads graphs through the unmetered structural accessors and
is deliberately independent of the Grover-based implementations.
"""

from __future__ import annotations

from collections import deque
from typing import Optional

from .graphs import (
    BlackBoxGraph,
    ContractViolationError,
    GraphError,
    IntegerFlow,
    IntegerNetwork,
    Matching,
)

BRUTE_FORCE_VERTEX_LIMIT = 20


class SizeGuardError(GraphError):
    """Instance too large for an exponential-time oracle."""


def classical_bfs_layers(g: BlackBoxGraph, start: int) -> list[Optional[int]]:
    """Arc-count distances from ``start``; None marks unreachable vertices."""
    dist: list[Optional[int]] = [None] * g.n
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors_structural(v):
            if dist[w] is None:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def brute_force_max_matching(g: BlackBoxGraph) -> Matching:
    """Exact maximum matching by branch and bound over the edge list.

    Guarded to n <= 20; raises SizeGuardError beyond that.
    """
    if g.directed:
        raise ContractViolationError("matching oracles take undirected graphs")
    if g.n > BRUTE_FORCE_VERTEX_LIMIT:
        raise SizeGuardError(
            f"n={g.n} exceeds the brute-force limit {BRUTE_FORCE_VERTEX_LIMIT}"
        )
    edges = g.edge_pairs()
    n = g.n
    best_mate: list[Optional[int]] = [None] * n
    best_size = 0
    mate: list[Optional[int]] = [None] * n

    def walk(idx: int, size: int) -> None:
        nonlocal best_size, best_mate
        if size > best_size:
            best_size = size
            best_mate = list(mate)
        # remaining edges can add at most one pair each
        if size + (len(edges) - idx) <= best_size:
            return
        for j in range(idx, len(edges)):
            u, v = edges[j]
            if mate[u] is None and mate[v] is None:
                mate[u] = v
                mate[v] = u
                walk(j + 1, size + 1)
                mate[u] = None
                mate[v] = None

    walk(0, 0)
    return Matching(best_mate)


def greedy_matching_over_order(g: BlackBoxGraph, edge_order: list[int]) -> int:
    """Size of the greedy maximal matching taking edges in the given order."""
    edges = g.edge_pairs()
    used = [False] * g.n
    size = 0
    for idx in edge_order:
        u, v = edges[idx]
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            size += 1
    return size


def classical_hopcroft_karp(g: BlackBoxGraph, sides: list[int]) -> Matching:
    """Textbook shortest-augmenting-phase bipartite matching (no search emulation)."""
    if g.directed:
        raise ContractViolationError("matching oracles take undirected graphs")
    left = [v for v in range(g.n) if sides[v] == 0]
    mate: list[Optional[int]] = [None] * g.n
    INF = float("inf")

    while True:
        dist = {v: INF for v in left}
        queue = deque()
        for v in left:
            if mate[v] is None:
                dist[v] = 0
                queue.append(v)
        reachable_free_right = False
        while queue:
            v = queue.popleft()
            for w in g.neighbors_structural(v):
                nxt = mate[w]
                if nxt is None:
                    reachable_free_right = True
                elif dist[nxt] is INF:
                    dist[nxt] = dist[v] + 1
                    queue.append(nxt)
        if not reachable_free_right:
            return Matching(mate)

        def try_augment(v: int) -> bool:
            for w in g.neighbors_structural(v):
                nxt = mate[w]
                if nxt is None or (dist.get(nxt) == dist[v] + 1 and try_augment(nxt)):
                    mate[v] = w
                    mate[w] = v
                    return True
            dist[v] = INF
            return False

        for v in left:
            if mate[v] is None:
                try_augment(v)


def edmonds_karp(net: IntegerNetwork) -> IntegerFlow:
    """Max flow by shortest-path augmentation on per-arc residuals."""
    flow: dict[tuple[int, int], int] = {}
    cap = net.capacity
    n = net.n
    adj: list[set[int]] = [set() for _ in range(n)]
    for (u, v) in cap:
        adj[u].add(v)
        adj[v].add(u)

    def residual(u: int, v: int) -> int:
        return cap.get((u, v), 0) - flow.get((u, v), 0) + flow.get((v, u), 0)

    total = 0
    while True:
        parent: list[Optional[int]] = [None] * n
        parent[net.source] = net.source
        queue = deque([net.source])
        while queue and parent[net.sink] is None:
            u = queue.popleft()
            for v in adj[u]:
                if parent[v] is None and residual(u, v) > 0:
                    parent[v] = u
                    queue.append(v)
        if parent[net.sink] is None:
            break
        path = [net.sink]
        while path[-1] != net.source:
            path.append(parent[path[-1]])
        path.reverse()
        bottleneck = min(residual(u, v) for u, v in zip(path, path[1:]))
        for u, v in zip(path, path[1:]):
            _push(flow, cap, u, v, bottleneck)
        total += bottleneck
    return IntegerFlow(flow, total)


def ford_fulkerson_dfs(net: IntegerNetwork) -> IntegerFlow:
    """Max flow by exhaustive depth-first augmentation (small instances)."""
    if net.n > 16:
        raise SizeGuardError(f"n={net.n} exceeds the exhaustive-augmentation limit 16")
    flow: dict[tuple[int, int], int] = {}
    cap = net.capacity
    n = net.n
    adj: list[set[int]] = [set() for _ in range(n)]
    for (u, v) in cap:
        adj[u].add(v)
        adj[v].add(u)

    def residual(u: int, v: int) -> int:
        return cap.get((u, v), 0) - flow.get((u, v), 0) + flow.get((v, u), 0)

    def dfs(u: int, seen: set[int]) -> Optional[list[int]]:
        if u == net.sink:
            return [u]
        seen.add(u)
        for v in sorted(adj[u]):
            if v not in seen and residual(u, v) > 0:
                rest = dfs(v, seen)
                if rest is not None:
                    return [u] + rest
        return None

    total = 0
    while True:
        path = dfs(net.source, set())
        if path is None:
            break
        bottleneck = min(residual(u, v) for u, v in zip(path, path[1:]))
        for u, v in zip(path, path[1:]):
            _push(flow, cap, u, v, bottleneck)
        total += bottleneck
    return IntegerFlow(flow, total)


def _push(
    flow: dict[tuple[int, int], int],
    cap: dict[tuple[int, int], int],
    u: int,
    v: int,
    amount: int,
) -> None:
    """Push along the residual direction u -> v, cancelling reverse flow first."""
    back = flow.get((v, u), 0)
    cancel = min(amount, back)
    if cancel:
        if cancel == back:
            del flow[(v, u)]
        else:
            flow[(v, u)] = back - cancel
        amount -= cancel
    if amount:
        flow[(u, v)] = flow.get((u, v), 0) + amount
        if flow[(u, v)] > cap.get((u, v), 0):
            raise ContractViolationError(f"overfull arc ({u}, {v})")


class SymmetricDifference:
    """Decomposition of two matchings' symmetric difference.

    ``paths`` and ``cycles`` are vertex sequences of the alternating
    components; ``augmenting_for_first`` counts the paths that would enlarge
    the first matching (both endpoints free in it, one more second-matching
    edge than first-matching edge).
    """

    def __init__(
        self,
        paths: list[list[int]],
        cycles: list[list[int]],
        augmenting_for_first: int,
    ):
        self.paths = paths
        self.cycles = cycles
        self.augmenting_for_first = augmenting_for_first


def decompose_symmetric_difference(
    m1: Matching, m2: Matching
) -> SymmetricDifference:
    """Split m1 XOR m2 into alternating paths and even cycles."""
    if m1.n != m2.n:
        raise ContractViolationError("matchings live on different vertex sets")
    diff = m1.pairs() ^ m2.pairs()
    adj: dict[int, list[int]] = {}
    for u, v in diff:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for row in adj.values():
        row.sort()
    seen: set[int] = set()
    paths: list[list[int]] = []
    cycles: list[list[int]] = []

    def walk(start: int) -> list[int]:
        comp = [start]
        seen.add(start)
        prev = None
        cur = start
        while True:
            nxts = [w for w in adj[cur] if w != prev and w not in seen]
            if not nxts:
                # either the component closed into a cycle or the path ended
                closing = [w for w in adj[cur] if w == start and len(comp) > 2]
                if closing:
                    comp.append(start)
                return comp
            prev, cur = cur, nxts[0]
            seen.add(cur)
            comp.append(cur)

    for v in sorted(adj):
        if v in seen or len(adj[v]) != 1:
            continue
        paths.append(walk(v))
    for v in sorted(adj):
        if v not in seen:
            cycles.append(walk(v))

    augmenting = 0
    m2_pairs = m2.pairs()
    for comp in paths:
        a, b = comp[0], comp[-1]
        if not (m1.is_free(a) and m1.is_free(b)):
            continue
        first = tuple(sorted((comp[0], comp[1])))
        last = tuple(sorted((comp[-2], comp[-1])))
        if first in m2_pairs and last in m2_pairs:
            augmenting += 1
    return SymmetricDifference(paths, cycles, augmenting)
