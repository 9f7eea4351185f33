"""Graph and network containers behind black-box probe interfaces.

Vertices are 0-based integers.  A graph is readable either through an
adjacency-matrix membership probe or through per-vertex neighbor lists whose
slots may hold a HOLE placeholder instead of a neighbor id.  Algorithms read
edge data only through the probe methods, so an attached ledger can meter
every classical access; constructors, file I/O, and the classical baseline
oracles use the unmetered ``*_structural`` accessors instead.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence, Union


class Model(Enum):
    """Black-box access mode of a graph."""

    ADJACENCY = "adjacency"
    LIST = "list"


class _Hole:
    __slots__ = ()

    def __repr__(self) -> str:
        return "HOLE"


#: Placeholder entry in a neighbor list; never a valid vertex id.
HOLE = _Hole()

Entry = Union[int, _Hole]


class GraphError(ValueError):
    """Invalid graph construction or probe usage."""


class ModelMismatchError(GraphError):
    """A probe was used against the wrong access model."""


class ProbeBoundsError(GraphError, IndexError):
    """A probe index lies outside its domain."""


class NonBipartiteError(GraphError):
    """The graph admits no proper 2-coloring."""


class ContractViolationError(GraphError):
    """A documented operation precondition was violated."""


class InternalInvariantError(RuntimeError):
    """An algorithm reached a state its own invariants promise impossible."""


def _check_vertex(v: int, n: int) -> None:
    if not isinstance(v, int) or not 0 <= v < n:
        raise ProbeBoundsError(f"vertex {v} out of range [0, {n})")


class BlackBoxGraph:
    """A fixed graph exposed through metered probes in one access model.

    Undirected graphs store each edge as two directed arcs; ``m`` counts
    undirected edges once.  Self-loops and parallel edges are rejected.
    Instances are immutable after construction and safe to share.
    """

    __slots__ = ("n", "model", "directed", "_out", "_lists", "_m")

    def __init__(
        self,
        n: int,
        model: Model,
        directed: bool,
        out_sets: list[set[int]],
        lists: Optional[list[list[Entry]]],
        m: int,
    ):
        self.n = n
        self.model = model
        self.directed = directed
        self._out = out_sets
        self._lists = lists
        self._m = m

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        *,
        model: Model = Model.LIST,
        directed: bool = False,
    ) -> "BlackBoxGraph":
        """Build a graph from an edge (or arc) list.

        Undirected edges may be given in either orientation but only once.
        """
        if n < 1:
            raise GraphError(f"need at least one vertex, got n={n}")
        out: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in out[u] or (not directed and u in out[v]):
                raise GraphError(f"duplicate edge ({u}, {v})")
            out[u].add(v)
            if not directed:
                out[v].add(u)
            m += 1
        if m == 0:
            raise GraphError("graph must contain at least one edge")
        lists = None
        if model is Model.LIST:
            lists = [sorted(out[v]) for v in range(n)]
        return cls(n, model, directed, out, lists, m)

    @classmethod
    def from_neighbor_lists(
        cls,
        n: int,
        lists: Sequence[Sequence[Entry]],
        *,
        directed: bool = False,
    ) -> "BlackBoxGraph":
        """Build a list-model graph from explicit slot lists (holes allowed)."""
        if n < 1:
            raise GraphError(f"need at least one vertex, got n={n}")
        if len(lists) != n:
            raise GraphError(f"expected {n} neighbor lists, got {len(lists)}")
        out: list[set[int]] = [set() for _ in range(n)]
        kept: list[list[Entry]] = []
        for v, slots in enumerate(lists):
            if len(slots) > n:
                raise GraphError(
                    f"vertex {v}: list length {len(slots)} exceeds n={n}"
                )
            row: list[Entry] = []
            for entry in slots:
                if entry is HOLE:
                    row.append(HOLE)
                    continue
                _check_vertex(entry, n)  # type: ignore[arg-type]
                w = int(entry)  # type: ignore[arg-type]
                if w == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if w in out[v]:
                    raise GraphError(f"duplicate neighbor {w} in list of {v}")
                out[v].add(w)
                row.append(w)
            kept.append(row)
        if not directed:
            for v in range(n):
                for w in out[v]:
                    if v not in out[w]:
                        raise GraphError(
                            f"undirected edge ({v}, {w}) missing from list of {w}"
                        )
        m = sum(len(s) for s in out)
        if not directed:
            m //= 2
        if m == 0:
            raise GraphError("graph must contain at least one edge")
        return cls(n, Model.LIST, directed, out, kept, m)

    # -- metered probes ----------------------------------------------------

    def probe_adjacency(self, v: int, w: int, ledger=None) -> bool:
        """Membership probe: is there an arc (edge) from v to w?"""
        if self.model is not Model.ADJACENCY:
            raise ModelMismatchError("adjacency probe on a list-model graph")
        _check_vertex(v, self.n)
        _check_vertex(w, self.n)
        if ledger is not None:
            ledger.raw_probes += 1
        return w in self._out[v]

    def probe_list(self, v: int, i: int, ledger=None) -> Entry:
        """Slot probe: entry i of v's neighbor list (a vertex id or HOLE)."""
        if self.model is not Model.LIST:
            raise ModelMismatchError("list probe on an adjacency-model graph")
        _check_vertex(v, self.n)
        slots = self._lists[v]  # type: ignore[index]
        if not 0 <= i < len(slots):
            raise ProbeBoundsError(
                f"slot {i} out of range [0, {len(slots)}) for vertex {v}"
            )
        if ledger is not None:
            ledger.raw_probes += 1
        return slots[i]

    def degree(self, v: int) -> int:
        """Slot count of v's neighbor list (list model only)."""
        if self.model is not Model.LIST:
            raise ModelMismatchError("degree is a list-model notion")
        _check_vertex(v, self.n)
        return len(self._lists[v])  # type: ignore[index]

    # -- unmetered structural access (constructors, I/O, oracles) ---------

    @property
    def m(self) -> int:
        return self._m

    def out_degree_structural(self, v: int) -> int:
        return len(self._out[v])

    def neighbors_structural(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self._out[v]))

    def arcs_structural(self) -> Iterator[tuple[int, int]]:
        """All directed arcs (undirected edges appear in both orientations)."""
        for v in range(self.n):
            for w in sorted(self._out[v]):
                yield (v, w)

    def edge_pairs(self) -> list[tuple[int, int]]:
        """Canonical edge list: arcs if directed, sorted (u < v) pairs if not."""
        if self.directed:
            return list(self.arcs_structural())
        return sorted(
            (v, w) for v in range(self.n) for w in self._out[v] if v < w
        )

    def has_edge_structural(self, v: int, w: int) -> bool:
        return w in self._out[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BlackBoxGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.directed == other.directed
            and self._out == other._out
        )

    def __hash__(self):  # pragma: no cover - containers keyed by identity
        return id(self)

    def __repr__(self) -> str:
        kind = "digraph" if self.directed else "graph"
        return f"BlackBoxGraph({kind}, n={self.n}, m={self._m}, {self.model.value})"


class Matching:
    """A set of vertex-disjoint edges, stored as a mate array."""

    __slots__ = ("mate",)

    def __init__(self, mate: list[Optional[int]]):
        self.mate = mate

    @classmethod
    def empty(cls, n: int) -> "Matching":
        return cls([None] * n)

    @property
    def n(self) -> int:
        return len(self.mate)

    def size(self) -> int:
        return sum(1 for v, w in enumerate(self.mate) if w is not None and v < w)

    def pairs(self) -> set[tuple[int, int]]:
        return {
            (v, w)
            for v, w in enumerate(self.mate)
            if w is not None and v < w
        }

    def is_free(self, v: int) -> bool:
        return self.mate[v] is None

    def copy(self) -> "Matching":
        return Matching(list(self.mate))

    def validate(self, graph: BlackBoxGraph) -> None:
        """Raise unless mates are involutive and every pair is a graph edge."""
        if len(self.mate) != graph.n:
            raise ContractViolationError("matching size does not match graph")
        for v, w in enumerate(self.mate):
            if w is None:
                continue
            _check_vertex(w, graph.n)
            if self.mate[w] != v:
                raise ContractViolationError(f"mate of {v} is {w} but not back")
            if not graph.has_edge_structural(v, w):
                raise ContractViolationError(f"matched pair ({v}, {w}) is not an edge")

    def augmented(self, path: Sequence[int]) -> "Matching":
        """Flip matched status along an alternating path with free endpoints."""
        if len(path) < 2 or len(path) % 2 != 0:
            raise ContractViolationError(
                f"augmenting path needs even vertex count, got {len(path)}"
            )
        if not self.is_free(path[0]) or not self.is_free(path[-1]):
            raise ContractViolationError("augmenting path endpoints must be free")
        if len(set(path)) != len(path):
            raise ContractViolationError("augmenting path must be simple")
        for i in range(1, len(path) - 1, 2):
            if self.mate[path[i]] != path[i + 1]:
                raise ContractViolationError(
                    f"path edge ({path[i]}, {path[i+1]}) expected to be matched"
                )
        out = self.copy()
        for i in range(0, len(path) - 1, 2):
            u, w = path[i], path[i + 1]
            out.mate[u] = w
            out.mate[w] = u
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.mate == other.mate

    def __repr__(self) -> str:
        return f"Matching(size={self.size()}, pairs={sorted(self.pairs())})"


class IntegerNetwork:
    """A directed graph with integer arc capacities and distinguished s, t.

    Antiparallel arc pairs are allowed and keep independent capacities.
    """

    __slots__ = ("graph", "capacity", "source", "sink", "U", "_in")

    def __init__(
        self,
        graph: BlackBoxGraph,
        capacity: dict[tuple[int, int], int],
        source: int,
        sink: int,
        U: int,
    ):
        if not graph.directed:
            raise ContractViolationError("networks require a directed graph")
        _check_vertex(source, graph.n)
        _check_vertex(sink, graph.n)
        if source == sink:
            raise ContractViolationError("source and sink must differ")
        if U < 1:
            raise ContractViolationError(f"capacity bound U={U} must be >= 1")
        arcs = set(graph.arcs_structural())
        if set(capacity) != arcs:
            raise ContractViolationError("capacity map must cover exactly the arcs")
        for arc, c in capacity.items():
            if not 1 <= c <= U:
                raise ContractViolationError(
                    f"capacity {c} of arc {arc} outside [1, {U}]"
                )
        self.graph = graph
        self.capacity = dict(capacity)
        self.source = source
        self.sink = sink
        self.U = U
        ins: list[list[int]] = [[] for _ in range(graph.n)]
        for (u, v) in graph.arcs_structural():
            ins[v].append(u)
        self._in = [sorted(row) for row in ins]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def in_neighbors_structural(self, v: int) -> list[int]:
        return self._in[v]

    def __repr__(self) -> str:
        return (
            f"IntegerNetwork(n={self.n}, m={self.m}, s={self.source}, "
            f"t={self.sink}, U={self.U})"
        )


class IntegerFlow:
    """Per-arc integer flow values for a network, plus the total value."""

    __slots__ = ("arc_flow", "value")

    def __init__(self, arc_flow: dict[tuple[int, int], int], value: int):
        self.arc_flow = arc_flow
        self.value = value

    def net_flow(self, u: int, v: int) -> int:
        return self.arc_flow.get((u, v), 0) - self.arc_flow.get((v, u), 0)

    def validate(self, net: IntegerNetwork) -> None:
        """Raise unless capacities are respected and flow is conserved."""
        for arc, f in self.arc_flow.items():
            if arc not in net.capacity:
                raise ContractViolationError(f"flow on unknown arc {arc}")
            if not 0 <= f <= net.capacity[arc]:
                raise ContractViolationError(
                    f"flow {f} on arc {arc} outside [0, {net.capacity[arc]}]"
                )
        balance = [0] * net.n
        for (u, v), f in self.arc_flow.items():
            balance[u] -= f
            balance[v] += f
        for v in range(net.n):
            if v in (net.source, net.sink):
                continue
            if balance[v] != 0:
                raise ContractViolationError(f"vertex {v} violates conservation")
        if -balance[net.source] != self.value or balance[net.sink] != self.value:
            raise ContractViolationError("flow value disagrees with boundary flux")

    def __repr__(self) -> str:
        return f"IntegerFlow(value={self.value})"
