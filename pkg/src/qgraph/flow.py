"""Integer maximum flow via layered phases with quantum residual searches.

The solver is a shortest-augmenting-path scheme.  Each phase runs a layered
search over the residual graph (one batched neighborhood search per reached
vertex), then augments inside the frozen layer DAG with a depth-first walk
whose successor steps are single-item searches.  Vertices that dead-end are
disabled for the remainder of the phase.  While the sink is shallow a phase
pushes a blocking flow; once the layering depth exceeds a precomputed
threshold the solver switches, permanently, to one augmenting path per phase,
because at that point the residual value left is provably small.

Flows are kept per arc and never negative.  Pushing along a residual edge
cancels opposing flow before loading the forward arc, so networks with
antiparallel arc pairs stay well defined.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .graphs import (
    HOLE,
    ContractViolationError,
    Entry,
    IntegerFlow,
    IntegerNetwork,
    InternalInvariantError,
    Model,
    ModelMismatchError,
    ProbeBoundsError,
)
from .grover import (
    OracleConfig,
    QueryLedger,
    ceil_cbrt,
    ceil_sqrt,
    grover_find_one,
    make_run_ledger,
)
from .layers import LayerAssignment, assign_layers


def switching_threshold(n: int, m: int, U: int) -> int:
    """Layer depth beyond which phases drop to a single augmenting path.

    Balances the cost of blocking phases against the number of cheap
    single-path phases the residual value gap can still require.  Small
    capacities (U**4 <= n) tolerate a larger threshold scaled by U.
    """
    if n < 2 or m < 1 or U < 1:
        raise ContractViolationError(f"bad network shape n={n}, m={m}, U={U}")
    if U ** 4 <= n:
        return min(ceil_cbrt(n * n * U), ceil_sqrt(m * U))
    return min(ceil_cbrt(n * n), ceil_sqrt(m))


def residual_flow_bound(n: int, m: int, U: int, depth: int) -> int:
    """Upper bound on the flow still missing when the layering has this depth.

    A layering of depth d splits the vertices into d+1 levels; some
    consecutive pair of levels is crossed by few arcs, and every unit of
    remaining flow crosses it.  Counting either by vertices or by arcs gives
    min(ceil(4*n**2 / d**2), ceil(m / d)) * U.
    """
    if depth < 1:
        raise ContractViolationError(f"depth {depth} must be >= 1")
    by_vertices = -((-4 * n * n) // (depth * depth))
    by_arcs = -((-m) // depth)
    return min(by_vertices, by_arcs) * U


class ResidualView:
    """Black-box residual graph over a network and its current arc flows.

    Exposes the same probe surface as a graph so the layered search can run
    on it unchanged.  Every view probe costs exactly one raw probe.  In the
    list model each vertex's domain is its out-arc slot list followed by one
    slot per in-arc, so reverse residual edges are findable; a slot whose
    residual capacity is zero reads as a hole.  The view reads the flow
    mapping live, so pushes are visible to later probes.
    """

    __slots__ = ("net", "flows", "n", "model", "directed")

    def __init__(self, net: IntegerNetwork, flows: dict[tuple[int, int], int]):
        self.net = net
        self.flows = flows
        self.n = net.n
        self.model = net.graph.model
        self.directed = True

    def residual_structural(self, u: int, w: int) -> int:
        cap = self.net.capacity.get((u, w), 0)
        return cap - self.flows.get((u, w), 0) + self.flows.get((w, u), 0)

    def degree(self, v: int) -> int:
        if self.model is not Model.LIST:
            raise ModelMismatchError("degree is a list-model notion")
        return self.net.graph.degree(v) + len(self.net.in_neighbors_structural(v))

    def probe_list(self, v: int, i: int, ledger: Optional[QueryLedger] = None) -> Entry:
        if self.model is not Model.LIST:
            raise ModelMismatchError("list probe on an adjacency-model network")
        base = self.net.graph
        d_out = base.degree(v)
        if i < d_out:
            w = base.probe_list(v, i, ledger)
            if w is HOLE:
                return HOLE
        else:
            ins = self.net.in_neighbors_structural(v)
            j = i - d_out
            if j >= len(ins):
                raise ProbeBoundsError(
                    f"slot {i} out of range [0, {d_out + len(ins)}) for vertex {v}"
                )
            if ledger is not None:
                ledger.raw_probes += 1
            w = ins[j]
        return w if self.residual_structural(v, w) > 0 else HOLE

    def probe_adjacency(self, v: int, w: int, ledger: Optional[QueryLedger] = None) -> bool:
        if self.model is not Model.ADJACENCY:
            raise ModelMismatchError("adjacency probe on a list-model network")
        if not 0 <= v < self.n or not 0 <= w < self.n:
            raise ProbeBoundsError(f"vertex pair ({v}, {w}) out of range")
        if ledger is not None:
            ledger.raw_probes += 1
        return self.residual_structural(v, w) > 0


def _apply_push(
    flows: dict[tuple[int, int], int], net: IntegerNetwork, u: int, v: int, amount: int
) -> None:
    """Send ``amount`` along residual edge (u, v), cancelling reverse flow first."""
    if amount < 1:
        raise ContractViolationError(f"push amount {amount} must be >= 1")
    rev = flows.get((v, u), 0)
    cancel = min(rev, amount)
    if cancel:
        left = rev - cancel
        if left:
            flows[(v, u)] = left
        else:
            del flows[(v, u)]
        amount -= cancel
    if amount:
        cap = net.capacity.get((u, v), 0)
        new = flows.get((u, v), 0) + amount
        if new > cap:
            raise InternalInvariantError(
                f"push overfills arc ({u}, {v}): {new} > {cap}"
            )
        flows[(u, v)] = new


def _layered_successor(
    view: ResidualView,
    u: int,
    layer: list[Optional[int]],
    disabled: bytearray,
    config: OracleConfig,
    ledger: QueryLedger,
) -> Optional[int]:
    """Single-item search for a usable next-layer residual neighbor of u."""
    want = layer[u] + 1  # type: ignore[operator]
    if view.model is Model.LIST:
        resolved: dict[int, int] = {}

        def pred(i: int) -> bool:
            w = view.probe_list(u, i, ledger)
            if w is HOLE or disabled[w] or layer[w] != want:
                return False
            resolved[i] = w
            return True

        slot = grover_find_one(view.degree(u), pred, config, ledger)
        return None if slot is None else resolved[slot]

    def pred(w: int) -> bool:
        return (
            not disabled[w]
            and layer[w] == want
            and view.probe_adjacency(u, w, ledger)
        )

    return grover_find_one(view.n, pred, config, ledger)


@dataclass
class PhaseStats:
    """One phase: its layering, augmentations, and per-vertex search counts."""

    index: int
    mode: str  # "blocking" or "single"
    depth: int
    flow_before: int
    delta: int = 0
    paths: list[tuple[list[int], int]] = field(default_factory=list)
    visits: dict[int, int] = field(default_factory=dict)  # interior path uses
    retreats: dict[int, int] = field(default_factory=dict)  # children dead-ended
    domain: dict[int, int] = field(default_factory=dict)  # search domain sizes
    charged_total: Fraction = Fraction(0)


def blocking_flow(
    net: IntegerNetwork,
    flows: dict[tuple[int, int], int],
    view: ResidualView,
    layers: LayerAssignment,
    config: OracleConfig,
    ledger: QueryLedger,
    max_paths: Optional[int] = None,
) -> tuple[list[tuple[list[int], int]], int, dict[int, int], dict[int, int]]:
    """Augment along layered residual paths until blocked (or path cap hit).

    Returns (paths, total pushed, per-vertex interior visit counts,
    per-vertex retreat counts).  The walk restarts from the source after each
    augmentation; a vertex whose successor search comes back empty is
    disabled for the rest of the phase and the retreat is charged to its
    parent on the stack.
    """
    s, t = net.source, net.sink
    layer = layers.layer
    if layer[t] is None:
        raise ContractViolationError("blocking flow needs a reachable sink")
    disabled = bytearray(net.n)
    visits: dict[int, int] = {}
    retreats: dict[int, int] = {}
    paths: list[tuple[list[int], int]] = []
    total = 0
    while max_paths is None or len(paths) < max_paths:
        stack = [s]
        found: Optional[list[int]] = None
        while stack:
            u = stack[-1]
            w = _layered_successor(view, u, layer, disabled, config, ledger)
            if w is None:
                stack.pop()
                disabled[u] = 1
                if stack:
                    parent = stack[-1]
                    retreats[parent] = retreats.get(parent, 0) + 1
                continue
            if w == t:
                found = stack + [t]
                break
            stack.append(w)
        if found is None:
            break
        delta = min(
            view.residual_structural(x, y) for x, y in zip(found, found[1:])
        )
        for x, y in zip(found, found[1:]):
            _apply_push(flows, net, x, y, delta)
        for v in found[1:-1]:
            visits[v] = visits.get(v, 0) + 1
        paths.append((found, delta))
        total += delta
    return paths, total, visits, retreats


@dataclass
class FlowRunReport:
    n: int
    m: int
    U: int
    threshold: int
    value: int = 0
    phases: list[PhaseStats] = field(default_factory=list)
    switch_index: Optional[int] = None
    switch_depth: Optional[int] = None
    value_at_switch: Optional[int] = None
    bound_at_switch: Optional[int] = None
    ledger_snapshot: dict = field(default_factory=dict)

    def blocking_phase_count(self) -> int:
        return sum(1 for p in self.phases if p.mode == "blocking")

    def single_phase_count(self) -> int:
        return sum(1 for p in self.phases if p.mode == "single")


def max_flow_integer(
    net: IntegerNetwork,
    config: OracleConfig,
    *,
    record_events: bool = False,
    ledger: Optional[QueryLedger] = None,
) -> tuple[IntegerFlow, FlowRunReport]:
    """Maximum s-t flow of an integer-capacity network.

    Alternates residual layerings with layered augmentation phases.  Phases
    are blocking until the sink depth first exceeds ``switching_threshold``;
    from then on each phase pushes one augmenting path.  Stops when the sink
    is unreachable in the residual graph.
    """
    if ledger is None:
        ledger = make_run_ledger(config, net.n, record_events=record_events)
    flows: dict[tuple[int, int], int] = {}
    k = switching_threshold(net.n, net.m, net.U)
    report = FlowRunReport(n=net.n, m=net.m, U=net.U, threshold=k)
    value = 0
    single = False
    view = ResidualView(net, flows)
    while True:
        before = Fraction(ledger.charged_queries)
        layers = assign_layers(view, net.source, config, ledger)
        depth = layers.layer[net.sink]
        if depth is None:
            break
        if not single and depth > k:
            single = True
            report.switch_index = len(report.phases)
            report.switch_depth = depth
            report.value_at_switch = value
            report.bound_at_switch = residual_flow_bound(net.n, net.m, net.U, depth)
        mode = "single" if single else "blocking"
        stats = PhaseStats(
            index=len(report.phases),
            mode=mode,
            depth=depth,
            flow_before=value,
        )
        paths, delta, visits, retreats = blocking_flow(
            net,
            flows,
            view,
            layers,
            config,
            ledger,
            max_paths=1 if single else None,
        )
        if delta < 1:
            raise InternalInvariantError(
                "reachable sink produced no augmenting path"
            )
        value += delta
        stats.delta = delta
        stats.paths = paths
        stats.visits = visits
        stats.retreats = retreats
        touched = set(visits) | set(retreats)
        for path, _ in paths:
            touched.update(path)
        if view.model is Model.LIST:
            stats.domain = {v: view.degree(v) for v in touched}
        else:
            stats.domain = {v: net.n for v in touched}
        stats.charged_total = Fraction(ledger.charged_queries) - before
        report.phases.append(stats)
    report.value = value
    report.ledger_snapshot = ledger.snapshot()
    return IntegerFlow(dict(flows), value), report
