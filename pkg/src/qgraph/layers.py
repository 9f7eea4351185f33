"""Breadth-first layer assignment driven by batched neighbor searches.

Works on any object exposing the black-box probe protocol: ``n``, ``model``,
``degree(v)`` (list model), ``probe_adjacency(v, w, ledger)`` or
``probe_list(v, i, ledger)``.  One batched search per processed vertex finds
all still-unreached neighbors; its emptiness certificate is what each
processed vertex pays even when nothing new is found.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .graphs import HOLE, Model, ProbeBoundsError
from .grover import OracleConfig, QueryLedger, grover_find_all


@dataclass
class LayerAssignment:
    """Distance layers from a start vertex; None means unreached."""

    start: int
    layer: list[Optional[int]]
    visit_order: list[int]
    per_vertex_found: dict[int, int] = field(default_factory=dict)

    def reached(self) -> int:
        return sum(1 for x in self.layer if x is not None)

    def max_layer(self) -> int:
        return max((x for x in self.layer if x is not None), default=0)


def assign_layers(
    g,
    start: int,
    config: OracleConfig,
    ledger: QueryLedger,
) -> LayerAssignment:
    """Layer numbers equal to arc-count distance from ``start``."""
    n = g.n
    if not 0 <= start < n:
        raise ProbeBoundsError(f"start vertex {start} out of range [0, {n})")
    layer: list[Optional[int]] = [None] * n
    layer[start] = 0
    order = [start]
    queue = deque([start])
    found_counts: dict[int, int] = {}
    list_model = g.model is Model.LIST

    while queue:
        x = queue.popleft()
        next_layer = layer[x] + 1  # type: ignore[operator]
        if list_model:
            resolved: dict[int, int] = {}

            def pred(i: int, _x=x, _r=resolved) -> bool:
                w = g.probe_list(_x, i, ledger)
                if w is HOLE or layer[w] is not None:
                    return False
                _r[i] = w
                return True

            slots = grover_find_all(g.degree(x), pred, config, ledger)
            found = [resolved[i] for i in slots]
        else:

            def pred(w: int, _x=x) -> bool:
                return layer[w] is None and g.probe_adjacency(_x, w, ledger)

            found = grover_find_all(n, pred, config, ledger)
        fresh = 0
        for y in found:
            if layer[y] is None:  # a batch never repeats, but stay defensive
                layer[y] = next_layer
                order.append(y)
                queue.append(y)
                fresh += 1
        found_counts[x] = fresh
    return LayerAssignment(start, layer, order, found_counts)
