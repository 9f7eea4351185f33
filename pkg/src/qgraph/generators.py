"""Seeded instance generators.

Every generator is a pure function of its arguments: the same seed yields a
bit-identical instance, including hole placement and capacity draws.
"""

from __future__ import annotations

import random
from typing import Optional

from .graphs import (
    HOLE,
    BlackBoxGraph,
    Entry,
    GraphError,
    IntegerNetwork,
    Model,
)


class InfeasibleConnectivityError(GraphError):
    """Too few edges were requested to connect the instance."""


def _with_holes(
    n: int,
    out_sets: list[set[int]],
    rng: random.Random,
    scatter_holes: bool,
) -> list[list[Entry]]:
    """Neighbor lists, optionally diluted with seeded hole slots (d_v <= n)."""
    lists: list[list[Entry]] = []
    for v in range(n):
        row: list[Entry] = sorted(out_sets[v])
        if scatter_holes and len(row) < n:
            slack = rng.randint(0, n - len(row))
            for _ in range(slack):
                row.insert(rng.randint(0, len(row)), HOLE)
        lists.append(row)
    return lists


def _finish(
    n: int,
    out_sets: list[set[int]],
    *,
    directed: bool,
    model: Model,
    rng: random.Random,
    scatter_holes: bool,
) -> BlackBoxGraph:
    if model is Model.LIST:
        lists = _with_holes(n, out_sets, rng, scatter_holes)
        if directed:
            # from_neighbor_lists infers undirected unless told otherwise
            g = BlackBoxGraph.from_neighbor_lists(n, lists, directed=True)
        else:
            g = BlackBoxGraph.from_neighbor_lists(n, lists, directed=False)
        return g
    edges = []
    for v in range(n):
        for w in sorted(out_sets[v]):
            if directed or v < w:
                edges.append((v, w))
    return BlackBoxGraph.from_edges(n, edges, model=model, directed=directed)


def gen_random_bipartite(
    n1: int,
    n2: int,
    p: float,
    seed: int,
    *,
    model: Model = Model.LIST,
    scatter_holes: bool = False,
) -> BlackBoxGraph:
    """Bernoulli bipartite graph on sides {0..n1-1} and {n1..n1+n2-1}.

    At least one edge is always present (a seeded pair is forced if the
    Bernoulli pass produced none).
    """
    if n1 < 1 or n2 < 1:
        raise GraphError("both sides need at least one vertex")
    if not 0 < p <= 1:
        raise GraphError(f"edge probability {p} outside (0, 1]")
    rng = random.Random(seed)
    n = n1 + n2
    out: list[set[int]] = [set() for _ in range(n)]
    m = 0
    for u in range(n1):
        for w in range(n2):
            if rng.random() < p:
                out[u].add(n1 + w)
                out[n1 + w].add(u)
                m += 1
    if m == 0:
        u = rng.randrange(n1)
        w = n1 + rng.randrange(n2)
        out[u].add(w)
        out[w].add(u)
    return _finish(
        n, out, directed=False, model=model, rng=rng, scatter_holes=scatter_holes
    )


def bipartite_half_graph(
    n: int,
    seed: int,
    *,
    model: Model = Model.LIST,
) -> BlackBoxGraph:
    """Triangular bipartite graph: left i adjacent to right j exactly when j <= i.

    Both sides are relabeled by seeded permutations.  The graph is dense
    (about n*n/8 edges) and its unique perfect matching pairs rank i with
    rank i, which forces augmenting-path algorithms through many phases of
    growing path length: the worst-case iteration behavior, not the
    constant-phase behavior of Bernoulli graphs.
    """
    if n < 2 or n % 2 != 0:
        raise GraphError(f"half graph needs an even n >= 2, got {n}")
    rng = random.Random(seed)
    half = n // 2
    left = list(range(half))
    right = list(range(half))
    rng.shuffle(left)
    rng.shuffle(right)
    out: list[set[int]] = [set() for _ in range(n)]
    for i in range(half):
        for j in range(i + 1):
            u = left[i]
            w = half + right[j]
            out[u].add(w)
            out[w].add(u)
    return _finish(n, out, directed=False, model=model, rng=rng, scatter_holes=False)


def gen_random_graph(
    n: int,
    p: float,
    seed: int,
    *,
    directed: bool = False,
    model: Model = Model.LIST,
    scatter_holes: bool = False,
) -> BlackBoxGraph:
    """Bernoulli graph or digraph on n vertices, never edgeless."""
    if n < 2:
        raise GraphError("need at least two vertices")
    if not 0 < p <= 1:
        raise GraphError(f"edge probability {p} outside (0, 1]")
    rng = random.Random(seed)
    out: list[set[int]] = [set() for _ in range(n)]
    m = 0
    for u in range(n):
        for w in range(n):
            if u == w:
                continue
            if not directed and u > w:
                continue
            if rng.random() < p:
                out[u].add(w)
                if not directed:
                    out[w].add(u)
                m += 1
    if m == 0:
        u = rng.randrange(n)
        w = (u + 1 + rng.randrange(n - 1)) % n
        out[u].add(w)
        if not directed:
            out[w].add(u)
    return _finish(
        n, out, directed=directed, model=model, rng=rng, scatter_holes=scatter_holes
    )


def gen_gnm_digraph(
    n: int,
    m: int,
    seed: int,
    *,
    model: Model = Model.LIST,
    connected: bool = True,
    scatter_holes: bool = False,
) -> BlackBoxGraph:
    """Digraph with exactly m arcs; a path backbone keeps it reachable from 0.

    With ``connected`` the first n-1 arcs form the path 0 -> 1 -> ... -> n-1,
    so breadth-first exploration from 0 reaches every vertex.
    """
    if n < 2:
        raise GraphError("need at least two vertices")
    max_m = n * (n - 1)
    if connected and m < n - 1:
        raise InfeasibleConnectivityError(
            f"m={m} cannot keep {n} vertices reachable (need >= {n - 1})"
        )
    if not 1 <= m <= max_m:
        raise GraphError(f"m={m} outside [1, {max_m}]")
    rng = random.Random(seed)
    out: list[set[int]] = [set() for _ in range(n)]
    count = 0
    if connected:
        for v in range(n - 1):
            out[v].add(v + 1)
        count = n - 1
    while count < m:
        u = rng.randrange(n)
        w = rng.randrange(n)
        if u == w or w in out[u]:
            continue
        out[u].add(w)
        count += 1
    return _finish(
        n, out, directed=True, model=model, rng=rng, scatter_holes=scatter_holes
    )


def gen_random_network(
    n: int,
    m: int,
    U: int,
    seed: int,
    *,
    model: Model = Model.LIST,
) -> IntegerNetwork:
    """Random integer network with source 0 and sink n-1.

    A seeded permutation path from source to sink touches every vertex, so
    the instance is connected; remaining arcs are sampled uniformly among the
    pairs with no arc yet in either direction (keeping the residual capacity
    of any arc at most U), and capacities are uniform on [1, U].
    """
    if n < 2:
        raise GraphError("need at least two vertices")
    if U < 1:
        raise GraphError(f"capacity bound U={U} must be >= 1")
    if m < n - 1:
        raise InfeasibleConnectivityError(
            f"m={m} cannot connect {n} vertices (need >= {n - 1})"
        )
    max_m = n * (n - 1) // 2  # antiparallel pairs avoided
    if m > max_m:
        raise GraphError(f"m={m} exceeds the {max_m} available arc slots")
    rng = random.Random(seed)
    middle = list(range(1, n - 1))
    rng.shuffle(middle)
    order = [0] + middle + [n - 1]
    out: list[set[int]] = [set() for _ in range(n)]
    arcs: list[tuple[int, int]] = []
    for a, b in zip(order, order[1:]):
        out[a].add(b)
        arcs.append((a, b))
    while len(arcs) < m:
        u = rng.randrange(n)
        w = rng.randrange(n)
        if u == w or w in out[u] or u in out[w]:
            continue
        out[u].add(w)
        arcs.append((u, w))
    capacity = {arc: rng.randint(1, U) for arc in arcs}
    graph = BlackBoxGraph.from_edges(n, arcs, model=model, directed=True)
    return IntegerNetwork(graph, capacity, 0, n - 1, U)


def gen_majority_hard_instance(
    p: int,
    extra: int,
    seed: int,
    *,
    model: Model = Model.LIST,
) -> IntegerNetwork:
    """Four-layer unit-middle network whose max flow is floor(p*p/2) + extra.

    n = 2p + 2 vertices: source, p-vertex layer, p-vertex layer, sink.  The
    source and sink arcs have capacity n; the middle carries floor(p*p/2) +
    extra distinct seeded unit arcs, so the middle is the bottleneck and the
    max flow equals the middle arc count exactly.
    """
    if p < 1:
        raise GraphError("p must be >= 1")
    if extra not in (0, 1):
        raise GraphError("extra must be 0 or 1")
    middle_target = (p * p) // 2 + extra
    if middle_target > p * p:
        raise GraphError("more middle edges requested than slots")
    n = 2 * p + 2
    source, sink = 0, n - 1
    left = list(range(1, p + 1))
    right = list(range(p + 1, 2 * p + 1))
    arcs: list[tuple[int, int]] = []
    capacity: dict[tuple[int, int], int] = {}
    for v in left:
        arcs.append((source, v))
        capacity[(source, v)] = n
    for v in right:
        arcs.append((v, sink))
        capacity[(v, sink)] = n
    rng = random.Random(seed)
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < middle_target:
        arc = (rng.choice(left), rng.choice(right))
        chosen.add(arc)
    for arc in sorted(chosen):
        arcs.append(arc)
        capacity[arc] = 1
    graph = BlackBoxGraph.from_edges(n, arcs, model=model, directed=True)
    return IntegerNetwork(graph, capacity, source, sink, n)


def complete_bipartite(
    n1: int, n2: int, *, model: Model = Model.LIST
) -> BlackBoxGraph:
    edges = [(u, n1 + w) for u in range(n1) for w in range(n2)]
    return BlackBoxGraph.from_edges(n1 + n2, edges, model=model)


def petersen_graph(*, model: Model = Model.LIST) -> BlackBoxGraph:
    """The 10-vertex, 15-edge Petersen graph (outer cycle, inner pentagram)."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, 5 + i))
    return BlackBoxGraph.from_edges(10, edges, model=model)


def path_graph(n: int, *, model: Model = Model.LIST) -> BlackBoxGraph:
    if n < 2:
        raise GraphError("paths need at least two vertices")
    return BlackBoxGraph.from_edges(
        n, [(i, i + 1) for i in range(n - 1)], model=model
    )


def cycle_graph(n: int, *, model: Model = Model.LIST) -> BlackBoxGraph:
    if n < 3:
        raise GraphError("cycles need at least three vertices")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return BlackBoxGraph.from_edges(n, edges, model=model)
