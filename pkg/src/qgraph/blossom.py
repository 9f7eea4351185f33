"""Maximum matching in general graphs via alternating trees with odd-cycle collapse.

A phase grows an alternating tree from one free root.  Tree vertices at even
distance are Even and carry three pointers: ``link`` (the even vertex that
discovered them, or their side of a bridge), ``bridge`` (the far side of the
bridge for vertices swallowed by an odd cycle, else None), and ``first`` (the
nearest odd ancestor at discovery time).  Odd vertices are implicit until an
odd cycle flips them Even.  ``first`` pointers are resolved through a union
forest so that after a collapse every swallowed vertex reports the cycle's
nearest common odd ancestor.

Each dequeued even vertex runs three neighbor searches: a free endpoint
(success ends the phase with an augmenting path), odd neighbors whose mate is
still odd (each promotes the mate to Even), and even neighbors whose resolved
``first`` differs (each such bridge collapses one odd cycle).  The second and
third searches repeat single-item queries until empty, since every hit
changes the predicate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .graphs import (
    HOLE,
    BlackBoxGraph,
    ContractViolationError,
    InternalInvariantError,
    Matching,
    Model,
)
from .grover import OracleConfig, QueryLedger, grover_find_one, make_run_ledger


class UnionTree:
    """Forest over collapsed odd vertices; roots stand for themselves.

    ``resolve`` follows parent pointers with path compression.  ``None`` is
    the sentinel for the root's virtual predecessor and resolves to itself.
    """

    __slots__ = ("parent",)

    def __init__(self):
        self.parent: dict[int, Optional[int]] = {}

    def resolve(self, x: Optional[int]) -> Optional[int]:
        if x is None or x not in self.parent:
            return x
        root: Optional[int] = x
        trail = []
        while root is not None and root in self.parent:
            trail.append(root)
            root = self.parent[root]
        for y in trail:
            self.parent[y] = root
        return root

    def attach(self, x: int, p: Optional[int]) -> None:
        """Hang x's whole subtree under p (x must still be a root)."""
        if x in self.parent:
            raise InternalInvariantError(f"vertex {x} collapsed twice")
        if x == p:
            raise InternalInvariantError(f"vertex {x} attached to itself")
        self.parent[x] = p


@dataclass
class PhaseCounters:
    """Per-phase instrumentation for the counter inequalities."""

    start: int
    found_path: bool = False
    path_length: Optional[int] = None
    even_count: int = 0
    promotions: dict[int, int] = field(default_factory=dict)  # per even vertex
    bridges: dict[int, int] = field(default_factory=dict)
    collapsed: dict[int, int] = field(default_factory=dict)
    ordered_set_insertions: int = 0
    collapse_sizes: list[tuple[int, int, int]] = field(default_factory=list)
    charged_total: Fraction = Fraction(0)


class BlossomState:
    """Mutable per-phase search state rooted at one free vertex."""

    __slots__ = (
        "graph",
        "root",
        "mate",
        "even",
        "discovered_odd",
        "link",
        "bridge",
        "first",
        "union",
        "queue",
        "counters",
    )

    def __init__(self, graph: BlackBoxGraph, matching: Matching, root: int):
        n = graph.n
        if matching.mate[root] is not None:
            raise ContractViolationError(f"phase root {root} is not free")
        self.graph = graph
        self.root = root
        self.mate = matching.mate
        self.even = bytearray(n)
        self.even[root] = 1
        self.discovered_odd = bytearray(n)
        self.link: list[Optional[int]] = [None] * n
        self.bridge: list[Optional[int]] = [None] * n
        self.first: list[Optional[int]] = [None] * n
        self.union = UnionTree()
        self.queue: deque[int] = deque([root])
        self.counters = PhaseCounters(start=root)

    @property
    def n(self) -> int:
        return self.graph.n


def _search_neighbor(
    g: BlackBoxGraph,
    v: int,
    accept: Callable[[int], bool],
    config: OracleConfig,
    ledger: QueryLedger,
) -> Optional[int]:
    """Single-item search over v's neighbors passing the classical filter."""
    if g.model is Model.LIST:
        resolved: dict[int, int] = {}

        def pred(i: int) -> bool:
            w = g.probe_list(v, i, ledger)
            if w is HOLE or not accept(w):
                return False
            resolved[i] = w
            return True

        slot = grover_find_one(g.degree(v), pred, config, ledger)
        return None if slot is None else resolved[slot]

    def pred(w: int) -> bool:
        return accept(w) and g.probe_adjacency(v, w, ledger)

    return grover_find_one(g.n, pred, config, ledger)


def _ancestor_chain(state: BlossomState, x: Optional[int]) -> Iterator[Optional[int]]:
    """Resolved odd ancestors starting at x, ending with the None sentinel."""
    steps = 0
    while x is not None:
        yield x
        steps += 1
        if steps > state.n:
            raise InternalInvariantError("first-pointer chain does not terminate")
        promoter = state.link[state.mate[x]]  # even vertex that discovered x
        if promoter is None:
            raise InternalInvariantError(f"odd vertex {x} has no promoter")
        x = state.union.resolve(state.first[promoter])
    yield None


def collapse_blossom(
    state: BlossomState,
    v: int,
    w: int,
    ledger: Optional[QueryLedger] = None,
) -> None:
    """Collapse the odd cycle closed by the bridge edge (v, w).

    Finds the nearest common odd ancestor p by inserting the two resolved
    ancestor chains into two sets one element at a time, alternating sides
    and testing each new element against the opposite set.  Every odd vertex
    strictly below p on either chain turns Even, joins the queue, points its
    ``link`` at its own side of the bridge, its ``bridge`` at the far side,
    and its ``first`` at p; its union subtree is attached under p.  The
    classical set work is not charged to the ledger.
    """
    union = state.union
    fv = union.resolve(state.first[v])
    fw = union.resolve(state.first[w])
    if fv == fw:
        raise ContractViolationError(
            f"({v}, {w}) is not a bridge: shared nearest odd ancestor {fv}"
        )
    chains = (_ancestor_chain(state, fv), _ancestor_chain(state, fw))
    sets: tuple[set, set] = (set(), set())
    lists: tuple[list, list] = ([], [])
    exhausted = [False, False]
    insertions = 0
    p: Optional[int] = None
    found = False
    while not found:
        progressed = False
        for side in (0, 1):
            if exhausted[side]:
                continue
            nxt = next(chains[side], HOLE)
            if nxt is HOLE:
                exhausted[side] = True
                continue
            progressed = True
            insertions += 1
            sets[side].add(nxt)
            lists[side].append(nxt)
            if nxt in sets[1 - side]:
                p = nxt
                found = True
                break
        if not found and not progressed:
            raise InternalInvariantError("ancestor chains never met")

    def strictly_below(seq: list) -> list[int]:
        if p in seq:
            seq = seq[: seq.index(p)]
        return [x for x in seq if x is not None]

    flips = (strictly_below(lists[0]), strictly_below(lists[1]))
    ends = ((v, w), (w, v))
    for side in (0, 1):
        near, far = ends[side]
        for x in flips[side]:
            state.even[x] = 1
            state.link[x] = near
            state.bridge[x] = far
            state.first[x] = p
            union.attach(x, p)
            state.queue.append(x)
    c = state.counters
    c.ordered_set_insertions += insertions
    c.collapse_sizes.append((len(flips[0]), len(flips[1]), insertions))
    c.collapsed[v] = c.collapsed.get(v, 0) + len(flips[0]) + len(flips[1])


def trace_path(state: BlossomState, v: int, target: Optional[int] = None) -> list[int]:
    """Alternating path from even vertex v back to the phase root.

    Vertices discovered through a promotion contribute themselves and their
    mate, then the walk continues from their ``link``.  Vertices swallowed by
    a bridge contribute the stretch from themselves back to their side of the
    bridge, traced in reverse, and the walk continues from the far side.
    """
    if target is None:
        target = state.root
    if target != state.root:
        raise ContractViolationError("paths can only be traced to the phase root")
    out: list[int] = []
    cur = v
    steps = 0
    while True:
        steps += 1
        if steps > 2 * state.n + 4:
            raise InternalInvariantError("trace does not terminate")
        if cur == state.root:
            out.append(cur)
            return out
        if not state.even[cur]:
            raise InternalInvariantError(f"trace reached non-even vertex {cur}")
        nxt = state.link[cur]
        if nxt is None:
            raise InternalInvariantError(f"even vertex {cur} has no link")
        if state.bridge[cur] is None:
            mate = state.mate[cur]
            if mate is None:
                raise InternalInvariantError(f"even vertex {cur} has no mate")
            out.append(cur)
            out.append(mate)
            cur = nxt
        else:
            prefix = trace_path(state, nxt)
            try:
                pos = prefix.index(cur)
            except ValueError:
                raise InternalInvariantError(
                    f"bridge vertex {cur} missing from its side's trace"
                )
            out.extend(reversed(prefix[: pos + 1]))
            cur = state.bridge[cur]  # type: ignore[assignment]


def find_augmenting_path_from(
    g: BlackBoxGraph,
    matching: Matching,
    root: int,
    config: OracleConfig,
    ledger: QueryLedger,
    state_out: Optional[list] = None,
) -> tuple[Optional[list[int]], PhaseCounters]:
    """One phase: an augmenting path from ``root``, or None if there is none.

    The returned path starts at ``root``, ends at another free vertex, and
    alternates unmatched and matched edges.
    """
    state = BlossomState(g, matching, root)
    if state_out is not None:
        state_out.append(state)
    mate = state.mate
    even = state.even
    union = state.union
    counters = state.counters
    before = Fraction(ledger.charged_queries)
    path: Optional[list[int]] = None

    while state.queue and path is None:
        v = state.queue.popleft()

        free = _search_neighbor(
            g, v, lambda w: w != root and mate[w] is None, config, ledger
        )
        if free is not None:
            back = trace_path(state, v)
            back.reverse()
            back.append(free)
            _validate_phase_path(g, matching, back)
            counters.found_path = True
            counters.path_length = len(back) - 1
            path = back
            break

        while True:
            hit = _search_neighbor(
                g,
                v,
                lambda w: not even[w]
                and mate[w] is not None
                and not even[mate[w]],
                config,
                ledger,
            )
            if hit is None:
                break
            partner = mate[hit]
            even[partner] = 1
            state.link[partner] = v
            state.bridge[partner] = None
            state.first[partner] = hit
            state.discovered_odd[hit] = 1
            state.queue.append(partner)
            counters.promotions[v] = counters.promotions.get(v, 0) + 1

        while path is None:
            fv = union.resolve(state.first[v])
            hit = _search_neighbor(
                g,
                v,
                lambda w: bool(even[w]) and union.resolve(state.first[w]) != fv,
                config,
                ledger,
            )
            if hit is None:
                break
            collapse_blossom(state, v, hit, ledger)
            counters.bridges[v] = counters.bridges.get(v, 0) + 1

    counters.even_count = sum(state.even)
    counters.charged_total = Fraction(ledger.charged_queries) - before
    return path, counters


def _validate_phase_path(
    g: BlackBoxGraph, matching: Matching, path: list[int]
) -> None:
    if len(set(path)) != len(path):
        raise InternalInvariantError(f"traced path repeats a vertex: {path}")
    if len(path) % 2 != 0:
        raise InternalInvariantError(f"traced path has odd vertex count: {path}")
    for i, (x, y) in enumerate(zip(path, path[1:])):
        if not g.has_edge_structural(x, y):
            raise InternalInvariantError(f"traced path uses non-edge ({x}, {y})")
        matched = matching.mate[x] == y
        if matched != (i % 2 == 1):
            raise InternalInvariantError(f"traced path alternation breaks at ({x}, {y})")


@dataclass
class GeneralRunReport:
    n: int
    phases: list[PhaseCounters] = field(default_factory=list)
    final_size: int = 0
    ledger_snapshot: dict = field(default_factory=dict)


def max_general_matching(
    g: BlackBoxGraph,
    config: OracleConfig,
    *,
    record_events: bool = False,
    ledger: Optional[QueryLedger] = None,
) -> tuple[Matching, GeneralRunReport]:
    """Maximum matching of an undirected graph.

    Runs one phase per vertex that is still free when its turn comes; a
    vertex left free by its own failed phase never becomes matchable later,
    so a single sweep suffices.
    """
    if g.directed:
        raise ContractViolationError("matching requires an undirected graph")
    if ledger is None:
        ledger = make_run_ledger(config, g.n, record_events=record_events)
    matching = Matching.empty(g.n)
    report = GeneralRunReport(n=g.n)
    for v in range(g.n):
        if matching.mate[v] is not None:
            continue
        path, counters = find_augmenting_path_from(
            g, matching, v, config, ledger
        )
        report.phases.append(counters)
        if path is not None:
            matching = matching.augmented(path)
    report.final_size = matching.size()
    report.ledger_snapshot = ledger.snapshot()
    return matching, report
