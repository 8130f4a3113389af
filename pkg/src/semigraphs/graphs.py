"""The power, cyclic, enhanced power and commuting graphs of a semigroup.

Adjacency is a tuple of int bitmasks, one per vertex, kept symmetric with
an empty diagonal.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterator

from .core import Semigroup, closure_mask, monogenic_generator_of_mask
from .errors import MalformedTable, SourceMismatch, UnknownFormat


class GraphKind(enum.Enum):
    POWER = "power"
    CYCLIC = "cyclic"
    ENHANCED_POWER = "enhanced"
    COMMUTING = "commuting"


@dataclass(frozen=True)
class SimpleGraph:
    order: int
    adjacency: tuple[int, ...]
    kind: GraphKind
    source: Semigroup | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        adj = self.adjacency
        if len(adj) != self.order:
            raise ValueError("adjacency must have one row per vertex")
        for x, row in enumerate(adj):
            if row >> x & 1:
                raise ValueError(f"loop at vertex {x}")
            if row >> self.order:
                raise ValueError(f"vertex {x} has a neighbour outside 0..{self.order - 1}")
            for y in _bits(row):
                if not adj[y] >> x & 1:
                    raise ValueError(f"adjacency is not symmetric at ({x}, {y})")

    def has_edge(self, x: int, y: int) -> bool:
        return bool(self.adjacency[x] >> y & 1)

    def neighbours(self, x: int) -> list[int]:
        return list(_bits(self.adjacency[x]))

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.order) for y in _bits(self.adjacency[x] >> x + 1 << x + 1)]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _finish(S: Semigroup, adj: list[int], kind: GraphKind) -> SimpleGraph:
    for x in range(S.order):
        adj[x] &= ~(1 << x)
    return SimpleGraph(S.order, tuple(adj), kind, S)


def power_graph(S: Semigroup) -> SimpleGraph:
    adj = [0] * S.order
    for p in S.profiles:
        y = p.generator
        for x in p.orbit:
            adj[x] |= 1 << y
            adj[y] |= 1 << x
    return _finish(S, adj, GraphKind.POWER)


def cyclic_graph(S: Semigroup) -> SimpleGraph:
    adj = [0] * S.order
    for x in range(S.order):
        for y in range(x + 1, S.order):
            closed = closure_mask(S, 1 << x | 1 << y)
            if monogenic_generator_of_mask(S, closed) is not None:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
    return _finish(S, adj, GraphKind.CYCLIC)


def enhanced_power_graph(S: Semigroup) -> SimpleGraph:
    adj = [0] * S.order
    for p in S.profiles:
        mask = p.orbit_set.mask
        for x in p.orbit:
            adj[x] |= mask
    return _finish(S, adj, GraphKind.ENHANCED_POWER)


def commuting_graph(S: Semigroup) -> SimpleGraph:
    t = S.table
    adj = [0] * S.order
    for x in range(S.order):
        for y in range(x + 1, S.order):
            if t[x][y] == t[y][x]:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
    return _finish(S, adj, GraphKind.COMMUTING)


BUILDERS = {
    GraphKind.POWER: power_graph,
    GraphKind.CYCLIC: cyclic_graph,
    GraphKind.ENHANCED_POWER: enhanced_power_graph,
    GraphKind.COMMUTING: commuting_graph,
}


def build_graph(S: Semigroup, kind: GraphKind | str) -> SimpleGraph:
    return BUILDERS[GraphKind(kind)](S)


def is_complete(G: SimpleGraph) -> bool:
    full = (1 << G.order) - 1
    return all(row | 1 << x == full for x, row in enumerate(G.adjacency))


def _same_source(G1: SimpleGraph, G2: SimpleGraph) -> None:
    if G1.order != G2.order:
        raise SourceMismatch(f"graphs have {G1.order} and {G2.order} vertices")
    if G1.source is not None and G2.source is not None and G1.source != G2.source:
        raise SourceMismatch("graphs are built on different semigroups")


def graphs_equal(G1: SimpleGraph, G2: SimpleGraph) -> bool:
    _same_source(G1, G2)
    return G1.adjacency == G2.adjacency


def is_spanning_subgraph(G1: SimpleGraph, G2: SimpleGraph) -> bool:
    """True when every edge of ``G1`` is an edge of ``G2``."""
    _same_source(G1, G2)
    return all(a & ~b == 0 for a, b in zip(G1.adjacency, G2.adjacency))


def edge_difference(G1: SimpleGraph, G2: SimpleGraph) -> list[tuple[int, int]]:
    """Sorted pairs adjacent in exactly one of the two graphs."""
    _same_source(G1, G2)
    out = []
    for x, (a, b) in enumerate(zip(G1.adjacency, G2.adjacency)):
        out.extend((x, y) for y in _bits((a ^ b) >> x + 1 << x + 1))
    return out


def missing_edges(G: SimpleGraph) -> list[tuple[int, int]]:
    full = (1 << G.order) - 1
    out = []
    for x, row in enumerate(G.adjacency):
        out.extend((x, y) for y in _bits(~row & full & ~((1 << x + 1) - 1)))
    return out


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_graph(G: SimpleGraph, format: str = "json") -> str:
    if format == "json":
        doc = {"order": G.order, "kind": G.kind.value, "edges": [list(e) for e in G.edges()]}
        return json.dumps(doc)
    if format == "dot":
        label = G.source.label if G.source is not None else (lambda x: f"e{x}")
        lines = [f"graph {G.kind.value} {{"]
        lines += [f"  {x} [label={_dot_quote(label(x))}];" for x in range(G.order)]
        lines += [f"  {x} -- {y};" for x, y in G.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise UnknownFormat(f"unknown export format {format!r}; expected 'dot' or 'json'")


def graph_from_json(text: str, source: Semigroup | None = None) -> SimpleGraph:
    doc = json.loads(text)
    try:
        n, kind, edges = doc["order"], GraphKind(doc["kind"]), doc["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedTable(f"not a graph document: {exc}") from None
    if source is not None and source.order != n:
        raise SourceMismatch(f"graph has {n} vertices but the semigroup has {source.order}")
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return SimpleGraph(n, tuple(adj), kind, source)
