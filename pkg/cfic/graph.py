"""
Graph module.

Finite simple undirected graphs, incidences, incidence colorings, the conflict
relation and the coloring verifier every constructor is checked against.

Notes:
- Vertex tokens are interned to dense ids in order of first appearance; labels keep
  the original tokens for output.
- Every edge is stored as (u, v) with u < v. The color of incidence (u, uv) lives in
  slot 0 of the edge's color pair, the color of (v, uv) in slot 1.
- Graphs and colorings are immutable after construction.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

import networkx as nx

from .errors import GraphError, PartialColoringError, UnknownVertexError

logger = logging.getLogger(__name__)

Edge = tuple[int, int]
ColorPair = tuple[int | None, int | None]


@dataclass(frozen=True, order=True)
class Incidence:
    vertex: int
    edge: int


@dataclass(frozen=True)
class Graph:
    labels: tuple[str, ...]
    edges: tuple[Edge, ...]

    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(init=False, repr=False, compare=False)
    _ids: dict[str, int] = field(init=False, repr=False, compare=False)
    _edge_ids: dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ids: dict[str, int] = {}
        for i, label in enumerate(self.labels):
            if label in ids:
                raise GraphError(f"duplicate vertex {label!r}", {"vertex": label})
            ids[label] = i

        n = len(self.labels)
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        edge_ids: dict[Edge, int] = {}
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {e} references a missing vertex", {"edge": [u, v]})
            if u == v:
                raise GraphError(f"loop at {self.labels[u]!r}", {"vertex": self.labels[u]})
            if u > v:
                raise GraphError("edge endpoints must be stored in ascending order", {"edge": [u, v]})
            if (u, v) in edge_ids:
                raise GraphError(
                    f"parallel edge {self.labels[u]}-{self.labels[v]}",
                    {"edge": [self.labels[u], self.labels[v]]},
                )
            edge_ids[(u, v)] = e
            adjacency[u].append((v, e))
            adjacency[v].append((u, e))

        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adjacency))
        object.__setattr__(self, "_ids", ids)
        object.__setattr__(self, "_edge_ids", edge_ids)

    # Construction

    @classmethod
    def build(cls, edges: Iterable[tuple[object, object]], vertices: Iterable[object] = ()) -> Graph:
        """Intern tokens (declared vertices first, then edge endpoints) and sort edges canonically."""
        ids: dict[str, int] = {}

        def intern(token: object) -> int:
            key = str(token)
            if key not in ids:
                ids[key] = len(ids)
            return ids[key]

        for token in vertices:
            intern(token)
        pairs: list[Edge] = []
        seen: set[Edge] = set()
        for a, b in edges:
            u, v = intern(a), intern(b)
            if u == v:
                raise GraphError(f"loop at {str(a)!r}", {"vertex": str(a)})
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise GraphError(f"parallel edge {a}-{b}", {"edge": [str(a), str(b)]})
            seen.add(pair)
            pairs.append(pair)
        return cls(tuple(ids), tuple(sorted(pairs)))

    @classmethod
    def from_networkx(cls, h: nx.Graph) -> Graph:
        return cls.build(h.edges(), vertices=h.nodes())

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(self.labels)
        h.add_edges_from((self.labels[u], self.labels[v]) for u, v in self.edges)
        return h

    # Size and degrees

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    # Lookup

    def vertex_id(self, label: object) -> int:
        try:
            return self._ids[str(label)]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {str(label)!r}", {"vertex": str(label)}) from None

    def has_vertex(self, label: object) -> bool:
        return str(label) in self._ids

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return [w for w, _ in self.adjacency[v]]

    def edge_between(self, u: int, v: int) -> int | None:
        key = (u, v) if u < v else (v, u)
        return self._edge_ids.get(key)

    def endpoints(self, e: int) -> Edge:
        return self.edges[e]

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}", {"vertex": v, "edge": e})

    def slot(self, inc: Incidence) -> int:
        """Position of the incidence inside its edge's color pair."""
        a, b = self.edges[inc.edge]
        if inc.vertex == a:
            return 0
        if inc.vertex == b:
            return 1
        raise GraphError("vertex is not an endpoint of the edge", {"vertex": inc.vertex, "edge": inc.edge})

    def incidences(self) -> Iterator[Incidence]:
        for e, (u, v) in enumerate(self.edges):
            yield Incidence(u, e)
            yield Incidence(v, e)

    def edge_labels(self, e: int) -> tuple[str, str]:
        u, v = self.edges[e]
        return self.labels[u], self.labels[v]

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < len(self.labels)):
            raise UnknownVertexError(f"unknown vertex id {v}", {"vertex": v})

    # Structure

    def components(self) -> list[Graph]:
        """Connected components as subgraphs, ordered by their smallest vertex id."""
        h = self.to_networkx()
        parts = sorted(nx.connected_components(h), key=lambda comp: min(self._ids[x] for x in comp))
        return [self.subgraph(part) for part in parts]

    def is_connected(self) -> bool:
        return self.order > 0 and len(self.components()) == 1

    def subgraph(self, labels: Iterable[str]) -> Graph:
        keep = {self.vertex_id(x) for x in labels}
        vertices = [self.labels[v] for v in sorted(keep)]
        edges = [self.edge_labels(e) for e, (u, v) in enumerate(self.edges) if u in keep and v in keep]
        return Graph.build(edges, vertices=vertices)

    def is_cycle(self) -> bool:
        return self.order >= 3 and self.size == self.order and all(len(a) == 2 for a in self.adjacency) and self.is_connected()

    def cycle_order(self) -> list[int]:
        """Vertices of a cycle in walking order, starting at id 0 towards its smaller neighbor."""
        if not self.is_cycle():
            raise GraphError("graph is not a cycle")
        walk = [0]
        prev, cur = 0, min(self.neighbors(0))
        while cur != 0:
            walk.append(cur)
            prev, cur = cur, next(w for w in self.neighbors(cur) if w != prev)
        return walk


@dataclass(frozen=True)
class IncidenceColoring:
    colors: tuple[ColorPair, ...]

    @property
    def palette_size(self) -> int:
        return max((c for pair in self.colors for c in pair if c is not None), default=0)

    def pair(self, e: int) -> frozenset[int]:
        return frozenset(c for c in self.colors[e] if c is not None)

    def color(self, g: Graph, inc: Incidence) -> int | None:
        return self.colors[inc.edge][g.slot(inc)]

    def as_map(self, g: Graph) -> dict[tuple[str, str], int | None]:
        """Label-keyed view: (v, w) -> color of the incidence (v, vw)."""
        out: dict[tuple[str, str], int | None] = {}
        for e, (cu, cv) in enumerate(self.colors):
            a, b = g.edge_labels(e)
            out[(a, b)] = cu
            out[(b, a)] = cv
        return out

    @classmethod
    def from_map(cls, g: Graph, colors: Mapping[tuple[str, str], int]) -> IncidenceColoring:
        """Build a coloring from a label-keyed incidence map; every incidence must be present."""
        pairs: list[ColorPair] = []
        for e in range(g.size):
            a, b = g.edge_labels(e)
            try:
                pairs.append((colors[(a, b)], colors[(b, a)]))
            except KeyError:
                raise PartialColoringError(f"edge {a}-{b} is not colored", {"edge": [a, b]}) from None
        return cls(tuple(pairs))

    @classmethod
    def from_pairs(cls, g: Graph, pairs: Mapping[tuple[str, str], tuple[int, int]]) -> IncidenceColoring:
        """Build from (u, v) -> (color at u, color at v), either orientation per edge."""
        colors: dict[tuple[str, str], int] = {}
        for (a, b), (ca, cb) in pairs.items():
            colors[(str(a), str(b))] = ca
            colors[(str(b), str(a))] = cb
        return cls.from_map(g, colors)


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    witness: int | None = None
    first: Incidence | None = None
    second: Incidence | None = None
    color: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def incidences_at(g: Graph, v: int) -> frozenset[Incidence]:
    """I(v): both incidences of every edge at v."""
    g._check_vertex(v)
    out: set[Incidence] = set()
    for w, e in g.adjacency[v]:
        out.add(Incidence(v, e))
        out.add(Incidence(w, e))
    return frozenset(out)


def _check_incidence(g: Graph, inc: Incidence) -> None:
    if not (0 <= inc.edge < g.size) or inc.vertex not in g.edges[inc.edge]:
        raise GraphError("invalid incidence", {"vertex": inc.vertex, "edge": inc.edge})


def conflicting(g: Graph, i1: Incidence, i2: Incidence) -> bool:
    """Three-rule conflict test for (u, e) and (v, f)."""
    _check_incidence(g, i1)
    _check_incidence(g, i2)
    if i1 == i2:
        return False
    u, e = i1.vertex, i1.edge
    v, f = i2.vertex, i2.edge
    # (i) same vertex
    if u == v:
        return True
    # (ii) uv is e or f
    uv = g.edge_between(u, v)
    if uv is not None and uv in (e, f):
        return True
    # (iii) e = uw and f = vw
    return g.other_end(e, u) == g.other_end(f, v)


def check_total(g: Graph, c: IncidenceColoring) -> None:
    if len(c.colors) != g.size:
        raise PartialColoringError(
            f"coloring covers {len(c.colors)} edges, graph has {g.size}",
            {"expected": g.size, "got": len(c.colors)},
        )
    for e, pair in enumerate(c.colors):
        for color in pair:
            if color is None or color < 1:
                raise PartialColoringError(
                    f"edge {'-'.join(g.edge_labels(e))} lacks a positive color",
                    {"edge": list(g.edge_labels(e))},
                )


def verify(g: Graph, c: IncidenceColoring) -> VerifyResult:
    """Per-vertex rainbow check: every I(w) must carry pairwise distinct colors."""
    check_total(g, c)
    for w in range(g.order):
        seen: dict[int, Incidence] = {}
        for _, e in g.adjacency[w]:
            a, b = g.edges[e]
            for slot, x in enumerate((a, b)):
                color = c.colors[e][slot]
                inc = Incidence(x, e)
                if color in seen:
                    logger.debug("conflict at %s on color %s", g.labels[w], color)
                    return VerifyResult(False, w, seen[color], inc, color)
                seen[color] = inc
    return VerifyResult(True)


def palette_count(c: IncidenceColoring) -> int:
    return len({color for pair in c.colors for color in pair if color is not None})
