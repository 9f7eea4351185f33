"""Bipartite maximum matching by phases of disjoint shortest augmenting paths.

Each phase works on an on-line auxiliary digraph: a virtual source ``a``
points at the free left vertices, unmatched edges run left to right, matched
edges run right to left, and free right vertices point at a virtual sink
``b``.  A layered breadth-first pass fixes shortest-path layers, then a
marking depth-first pass extracts a maximal set of vertex-disjoint shortest
``a`` to ``b`` paths, each found descendant by descendant with single-item
searches.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .graphs import (
    HOLE,
    BlackBoxGraph,
    ContractViolationError,
    Matching,
    Model,
    NonBipartiteError,
    ProbeBoundsError,
)
from .grover import (
    OracleConfig,
    QueryLedger,
    ceil_sqrt,
    grover_find_one,
    make_run_ledger,
)
from .layers import assign_layers


def bipartition(g: BlackBoxGraph) -> list[int]:
    """2-coloring of an undirected graph (side 0 or 1 per vertex).

    Components are colored independently; isolated vertices land on side 0.
    Raises NonBipartiteError on any odd cycle.
    """
    if g.directed:
        raise ContractViolationError("bipartition takes undirected graphs")
    side: list[Optional[int]] = [None] * g.n
    for root in range(g.n):
        if side[root] is not None:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors_structural(v):
                if side[w] is None:
                    side[w] = 1 - side[v]  # type: ignore[operator]
                    queue.append(w)
                elif side[w] == side[v]:
                    raise NonBipartiteError(f"odd cycle through edge ({v}, {w})")
    return side  # type: ignore[return-value]


class AugmentingDigraphView:
    """On-line digraph of admissible moves for the current matching.

    Vertex ids 0..n-1 are the graph's own; ``a_id`` is n and ``b_id`` is
    n + 1.  Every probe costs at most one probe of the underlying graph.
    In the list model the view's slot lists are: exactly n slots for ``a``
    (holes at non-free or right-side positions), the vertex's own slots for
    left vertices (holes where the edge is absent or matched), and the
    vertex's own slots plus one trailing ``b`` slot for right vertices.
    """

    __slots__ = ("base", "matching", "side", "n", "model", "a_id", "b_id")

    def __init__(self, base: BlackBoxGraph, matching: Matching, side: list[int]):
        self.base = base
        self.matching = matching
        self.side = side
        self.n = base.n + 2
        self.model = base.model
        self.a_id = base.n
        self.b_id = base.n + 1

    def degree(self, v: int) -> int:
        if self.model is not Model.LIST:
            raise ContractViolationError("degree is a list-model notion")
        if v == self.a_id:
            return self.base.n
        if v == self.b_id:
            return 0
        if self.side[v] == 0:
            return self.base.degree(v)
        return self.base.degree(v) + 1

    def probe_list(self, v: int, i: int, ledger=None):
        mate = self.matching.mate
        if v == self.a_id:
            if not 0 <= i < self.base.n:
                raise ProbeBoundsError(f"slot {i} out of range for the source list")
            return i if (self.side[i] == 0 and mate[i] is None) else HOLE
        if v == self.b_id:
            raise ProbeBoundsError("the sink has no outgoing slots")
        if self.side[v] == 0:
            w = self.base.probe_list(v, i, ledger)
            if w is HOLE or mate[v] == w:
                return HOLE
            return w
        # right-side vertex: only its matched edge, plus the trailing b slot
        d = self.base.degree(v)
        if i == d:
            return self.b_id if mate[v] is None else HOLE
        w = self.base.probe_list(v, i, ledger)
        if w is not HOLE and mate[v] == w:
            return w
        return HOLE

    def probe_adjacency(self, v: int, w: int, ledger=None) -> bool:
        mate = self.matching.mate
        a, b = self.a_id, self.b_id
        if v == a:
            return w < self.base.n and self.side[w] == 0 and mate[w] is None
        if v == b or w == a:
            return False
        if w == b:
            return self.side[v] == 1 and mate[v] is None
        if self.side[v] == 0:
            return (
                self.side[w] == 1
                and mate[v] != w
                and self.base.probe_adjacency(v, w, ledger)
            )
        return self.side[v] == 1 and self.side[w] == 0 and mate[v] == w


def find_disjoint_augmenting_paths(
    view: AugmentingDigraphView,
    config: OracleConfig,
    ledger: QueryLedger,
) -> list[list[int]]:
    """A maximal set of vertex-disjoint shortest a-to-b paths (may be empty).

    Paths are returned as full vertex sequences including the virtual
    endpoints.  Interior vertices are marked at first visit and never
    revisited, matching the single-pass depth-first strategy.
    """
    layers = assign_layers(view, view.a_id, config, ledger)
    b = view.b_id
    if layers.layer[b] is None:
        return []
    layer = layers.layer
    marked = bytearray(view.n)
    stack = [view.a_id]
    paths: list[list[int]] = []
    list_model = view.model is Model.LIST

    while stack:
        u = stack[-1]
        want = layer[u] + 1  # type: ignore[operator]
        if list_model:
            resolved: dict[int, int] = {}

            def pred(i: int, _u=u, _r=resolved) -> bool:
                w = view.probe_list(_u, i, ledger)
                if w is HOLE or marked[w] or layer[w] != want:
                    return False
                _r[i] = w
                return True

            slot = grover_find_one(view.degree(u), pred, config, ledger)
            nxt = None if slot is None else resolved[slot]
        else:

            def pred(w: int, _u=u) -> bool:
                return (
                    not marked[w]
                    and layer[w] == want
                    and view.probe_adjacency(_u, w, ledger)
                )

            nxt = grover_find_one(view.n, pred, config, ledger)
        if nxt is None:
            stack.pop()
        elif nxt == b:
            paths.append(stack + [b])
            stack = [view.a_id]
        else:
            marked[nxt] = 1
            stack.append(nxt)
    return paths


def augment(matching: Matching, paths: Sequence[Sequence[int]]) -> Matching:
    """Flip the matching along vertex-disjoint augmenting view paths."""
    seen: set[int] = set()
    out = matching
    for path in paths:
        interior = [v for v in path if v < matching.n]
        if len(interior) + 2 != len(path):
            raise ContractViolationError("paths must run virtual source to sink")
        overlap = seen.intersection(interior)
        if overlap:
            raise ContractViolationError(f"paths share vertices {sorted(overlap)}")
        seen.update(interior)
        out = out.augmented(interior)
    return out


@dataclass
class MatchingIteration:
    paths_found: int
    path_length: Optional[int]
    charged_total: Fraction


@dataclass
class MatchingRunReport:
    n: int
    iterations: int = 0
    per_iteration: list[MatchingIteration] = field(default_factory=list)
    final_size: int = 0
    ledger_snapshot: dict = field(default_factory=dict)
    intermediate_matchings: list[Matching] = field(default_factory=list)

    def iteration_bound(self) -> int:
        """Worst-case phase count: ceil(2 sqrt(n)) plus the final empty pass."""
        return ceil_sqrt(4 * self.n) + 1

    def path_lengths(self) -> list[int]:
        return [
            it.path_length
            for it in self.per_iteration
            if it.path_length is not None
        ]


def max_bipartite_matching(
    g: BlackBoxGraph,
    config: OracleConfig,
    *,
    keep_matchings: bool = False,
    record_events: bool = False,
    ledger: Optional[QueryLedger] = None,
) -> tuple[Matching, MatchingRunReport]:
    """Maximum matching of an undirected bipartite graph.

    Iterates breadth-first layering plus disjoint-path extraction until no
    augmenting path remains; each phase's path length strictly exceeds the
    previous one's, which caps the iteration count near 2 sqrt(n).
    """
    side = bipartition(g)
    if ledger is None:
        ledger = make_run_ledger(config, g.n, record_events=record_events)
    matching = Matching.empty(g.n)
    report = MatchingRunReport(n=g.n)
    if keep_matchings:
        report.intermediate_matchings.append(matching.copy())
    while True:
        view = AugmentingDigraphView(g, matching, side)
        before = Fraction(ledger.charged_queries)
        paths = find_disjoint_augmenting_paths(view, config, ledger)
        report.iterations += 1
        charged = Fraction(ledger.charged_queries) - before
        if not paths:
            report.per_iteration.append(MatchingIteration(0, None, charged))
            break
        length = len(paths[0]) - 1  # arcs on an a-to-b path
        report.per_iteration.append(MatchingIteration(len(paths), length, charged))
        matching = augment(matching, paths)
        if keep_matchings:
            report.intermediate_matchings.append(matching.copy())
    report.final_size = matching.size()
    report.ledger_snapshot = ledger.snapshot()
    return matching, report
