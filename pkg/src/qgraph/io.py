"""Plain-text instance files.

Graphs::

    G <n> <m> <directed:0|1>
    <u> <v>          (m lines, 0-based vertex ids)

Networks::

    N <n> <m> <source> <sink> <U>
    <u> <v> <cap>    (m lines)

Lines starting with ``#`` and blank lines are skipped.  Parse failures raise
:class:`GraphParseError` carrying the 1-based line number.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .graphs import BlackBoxGraph, GraphError, IntegerNetwork, Model

PathLike = Union[str, Path]


class GraphParseError(GraphError):
    """A malformed instance file; ``line_no`` is 1-based."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _content_lines(path: PathLike) -> list[tuple[int, str]]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for idx, raw in enumerate(fh, start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            out.append((idx, stripped))
    if not out:
        raise GraphParseError(1, "file holds no content lines")
    return out


def _ints(line_no: int, text: str, count: int, what: str) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise GraphParseError(
            line_no, f"expected {count} fields for {what}, got {len(parts)}"
        )
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphParseError(line_no, f"non-integer field in {what!r}: {text!r}")


def read_graph_file(path: PathLike, *, model: Model = Model.LIST) -> BlackBoxGraph:
    lines = _content_lines(path)
    line_no, header = lines[0]
    parts = header.split()
    if not parts or parts[0] != "G":
        raise GraphParseError(line_no, "graph files start with a 'G' header")
    n, m, directed_flag = _ints(line_no, " ".join(parts[1:]), 3, "graph header")
    if n < 1:
        raise GraphParseError(line_no, f"vertex count {n} must be >= 1")
    if m < 1:
        raise GraphParseError(line_no, f"edge count {m} must be >= 1")
    if directed_flag not in (0, 1):
        raise GraphParseError(line_no, f"directed flag must be 0 or 1, got {directed_flag}")
    body = lines[1:]
    if len(body) != m:
        raise GraphParseError(
            line_no, f"header promises {m} edges but file has {len(body)} edge lines"
        )
    edges = []
    for edge_no, (ln, text) in enumerate(body):
        u, v = _ints(ln, text, 2, "edge")
        edges.append((u, v))
    try:
        return BlackBoxGraph.from_edges(
            n, edges, model=model, directed=bool(directed_flag)
        )
    except GraphError as exc:
        raise GraphParseError(lines[1][0] if body else line_no, str(exc))


def write_graph_file(g: BlackBoxGraph, path: PathLike) -> None:
    pairs = g.edge_pairs()
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"G {g.n} {len(pairs)} {1 if g.directed else 0}\n")
        for u, v in pairs:
            fh.write(f"{u} {v}\n")


def read_network_file(path: PathLike, *, model: Model = Model.LIST) -> IntegerNetwork:
    lines = _content_lines(path)
    line_no, header = lines[0]
    parts = header.split()
    if not parts or parts[0] != "N":
        raise GraphParseError(line_no, "network files start with an 'N' header")
    n, m, source, sink, U = _ints(line_no, " ".join(parts[1:]), 5, "network header")
    if n < 1:
        raise GraphParseError(line_no, f"vertex count {n} must be >= 1")
    if m < 1:
        raise GraphParseError(line_no, f"arc count {m} must be >= 1")
    if U < 1:
        raise GraphParseError(line_no, f"capacity bound {U} must be >= 1")
    body = lines[1:]
    if len(body) != m:
        raise GraphParseError(
            line_no, f"header promises {m} arcs but file has {len(body)} arc lines"
        )
    arcs = []
    capacity = {}
    for ln, text in body:
        u, v, cap = _ints(ln, text, 3, "arc")
        if cap < 1:
            raise GraphParseError(ln, f"arc capacity {cap} must be >= 1")
        if cap > U:
            raise GraphParseError(ln, f"arc capacity {cap} exceeds bound {U}")
        if (u, v) in capacity:
            raise GraphParseError(ln, f"duplicate arc ({u}, {v})")
        arcs.append((u, v))
        capacity[(u, v)] = cap
    try:
        graph = BlackBoxGraph.from_edges(n, arcs, model=model, directed=True)
        return IntegerNetwork(graph, capacity, source, sink, U)
    except GraphError as exc:
        raise GraphParseError(line_no, str(exc))


def write_network_file(net: IntegerNetwork, path: PathLike) -> None:
    arcs = sorted(net.capacity)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"N {net.n} {len(arcs)} {net.source} {net.sink} {net.U}\n")
        for u, v in arcs:
            fh.write(f"{u} {v} {net.capacity[(u, v)]}\n")
