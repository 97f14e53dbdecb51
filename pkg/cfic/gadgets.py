"""
Gadgets module.

The configurations G2, G4, G8 and H(t) that grow K4+ into class P members, the two
paste operations, and the extenders that color a freshly pasted configuration from
the colors already sitting on its boundary.

Notes:
- Gadget vertices are named by role (u, v, w, u0, x', y0, ...). The attachment
  roles are identified with the host vertices z1, z2 when pasting.
- Every solid (non-attachment) vertex has exactly its template degree in any graph
  containing the configuration: 3, except the single degree-2 role of G2/G4/G8.
- Extenders return colors for the interior edges only, as role-edge -> (color at
  first role, color at second role); the boundary edges keep the host's pair.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

import networkx as nx

from .errors import PreconditionError
from .graph import Graph, IncidenceColoring

RoleEdge = tuple[str, str]
PairMap = dict[RoleEdge, tuple[int, int]]


class GadgetKind(str, Enum):
    G2 = "g2"
    G4 = "g4"
    G8 = "g8"
    H = "h"


@dataclass(frozen=True)
class Gadget:
    kind: GadgetKind
    t: int
    internal: tuple[str, ...]
    edges: tuple[RoleEdge, ...]
    # (edge at x side, edge at y side); the attachment role is the second entry of each
    boundary: tuple[RoleEdge, RoleEdge]
    attach: tuple[str, str]
    # degree-2 role left behind by a paste at a vertex; None for H(t)
    low: str | None

    @property
    def interior_edges(self) -> tuple[RoleEdge, ...]:
        return tuple(e for e in self.edges if e not in self.boundary)


_G_TEMPLATES: dict[GadgetKind, tuple[tuple[str, ...], tuple[RoleEdge, ...], tuple[RoleEdge, RoleEdge], str]] = {
    GadgetKind.G2: (
        ("u", "v", "w"),
        (("u", "v"), ("u", "w"), ("v", "w"), ("v", "x"), ("w", "y")),
        (("v", "x"), ("w", "y")),
        "u",
    ),
    GadgetKind.G4: (
        ("u0", "u1", "v0", "v1", "w"),
        (("u0", "u1"), ("u0", "v1"), ("u0", "w"), ("u1", "v0"), ("v0", "v1"), ("v0", "w"), ("u1", "x"), ("v1", "y")),
        (("u1", "x"), ("v1", "y")),
        "w",
    ),
    GadgetKind.G8: (
        ("u0", "u1", "u2", "v0", "v1"),
        (("u0", "u1"), ("u1", "u2"), ("u0", "v0"), ("u0", "v1"), ("v0", "v1"), ("u2", "v0"), ("u2", "x"), ("v1", "y")),
        (("u2", "x"), ("v1", "y")),
        "u1",
    ),
}

_T_OF_KIND = {GadgetKind.G2: 2, GadgetKind.G4: 4, GadgetKind.G8: 8}


def gadget(kind: GadgetKind | str, t: int = 1) -> Gadget:
    """Template of a configuration; t is the ladder length of H(t) and ignored otherwise."""
    kind = GadgetKind(kind)
    if kind is not GadgetKind.H:
        internal, edges, boundary, low = _G_TEMPLATES[kind]
        return Gadget(kind, _T_OF_KIND[kind], internal, edges, boundary, ("x", "y"), low)

    if t < 1:
        raise PreconditionError("H(t) needs t >= 1", {"t": t})
    internal = ("x'", "y'") + tuple(f"x{i}" for i in range(t)) + tuple(f"y{i}" for i in range(t))
    edges: list[RoleEdge] = [("x'", "y'"), ("x'", "y0"), ("x0", "y'"), ("x'", "x0"), ("y'", "y0")]
    for i in range(t):
        edges += [(f"x{i}", f"x{i + 1}"), (f"y{i}", f"y{i + 1}")]
    edges += [(f"x{i}", f"y{i}") for i in range(1, t)]
    boundary = ((f"x{t - 1}", f"x{t}"), (f"y{t - 1}", f"y{t}"))
    return Gadget(kind, t, internal, tuple(edges), boundary, (f"x{t}", f"y{t}"), None)


def gadget_graph(kind: GadgetKind | str, t: int = 1) -> Graph:
    """The bare configuration, attachment vertices included as leaves."""
    gd = gadget(kind, t)
    return Graph.build(gd.edges, vertices=gd.internal + gd.attach)


# K4 with the edge ab subdivided by s
K4PLUS_ROLES = ("a", "b", "c", "d", "s")
K4PLUS_EDGES: tuple[RoleEdge, ...] = (("a", "s"), ("s", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d"))
K4PLUS_PAIRS: dict[RoleEdge, tuple[int, int]] = {
    ("a", "s"): (1, 7),
    ("s", "b"): (2, 6),
    ("a", "c"): (3, 4),
    ("a", "d"): (5, 6),
    ("b", "c"): (5, 7),
    ("b", "d"): (3, 4),
    ("c", "d"): (1, 2),
}


def k4_plus() -> Graph:
    return Graph.build(K4PLUS_EDGES, vertices=K4PLUS_ROLES)


def k4_plus_coloring() -> IncidenceColoring:
    """The canonical conflict-free 7-coloring of k4_plus()."""
    return IncidenceColoring.from_pairs(k4_plus(), K4PLUS_PAIRS)


# Pasting

def fresh_labels(h: nx.Graph, gd: Gadget) -> dict[str, str]:
    """Unused vertex tokens for the gadget's internal roles."""
    n = 1
    while True:
        labels = {role: f"{gd.kind.value}.{n}.{role}" for role in gd.internal}
        if not any(label in h for label in labels.values()):
            return labels
        n += 1


def _add_gadget(h: nx.Graph, gd: Gadget, z1: str, z2: str, labels: Mapping[str, str] | None) -> dict[str, str]:
    roles = dict(labels) if labels is not None else fresh_labels(h, gd)
    roles[gd.attach[0]] = z1
    roles[gd.attach[1]] = z2
    h.add_nodes_from(roles[r] for r in gd.internal)
    h.add_edges_from((roles[a], roles[b]) for a, b in gd.edges)
    return roles


def paste_g_nx(
    h: nx.Graph,
    z: str,
    kind: GadgetKind | str,
    z1: str | None = None,
    z2: str | None = None,
    labels: Mapping[str, str] | None = None,
) -> dict[str, str]:
    """In place: replace the degree-2 vertex z by a G2/G4/G8 copy. Returns role -> vertex."""
    gd = gadget(kind)
    if gd.kind is GadgetKind.H:
        raise PreconditionError("paste at a vertex takes G2, G4 or G8")
    if z not in h:
        raise PreconditionError(f"unknown vertex {z!r}", {"vertex": z})
    if h.degree(z) != 2:
        raise PreconditionError(f"vertex {z!r} has degree {h.degree(z)}, not 2", {"vertex": z})
    if z1 is None or z2 is None:
        z1, z2 = list(h.neighbors(z))
    elif set(h.neighbors(z)) != {z1, z2}:
        raise PreconditionError("z1, z2 must be the neighbors of z", {"vertex": z})
    h.remove_node(z)
    return _add_gadget(h, gd, z1, z2, labels)


def paste_h_nx(h: nx.Graph, z1: str, z2: str, t: int, labels: Mapping[str, str] | None = None) -> dict[str, str]:
    """In place: replace the edge z1z2 by an H(t) copy. Returns role -> vertex."""
    gd = gadget(GadgetKind.H, t)
    if not h.has_edge(z1, z2):
        raise PreconditionError(f"{z1}-{z2} is not an edge", {"edge": [z1, z2]})
    h.remove_edge(z1, z2)
    return _add_gadget(h, gd, z1, z2, labels)


def paste_g(g: Graph, z: str, t: int | str) -> Graph:
    """G ⊔_z G_t for t in {2, 4, 8}."""
    kind = _kind_of(t)
    g.vertex_id(z)
    h = g.to_networkx()
    paste_g_nx(h, str(z), kind)
    return Graph.from_networkx(h)


def paste_h(g: Graph, edge: tuple[str, str], t: int) -> Graph:
    """G ∨_{z1z2} H_t for t >= 1."""
    z1, z2 = (str(x) for x in edge)
    g.vertex_id(z1)
    g.vertex_id(z2)
    h = g.to_networkx()
    paste_h_nx(h, z1, z2, t)
    return Graph.from_networkx(h)


def _kind_of(t: int | str) -> GadgetKind:
    try:
        kind = GadgetKind(t) if isinstance(t, str) else {2: GadgetKind.G2, 4: GadgetKind.G4, 8: GadgetKind.G8}[t]
    except (KeyError, ValueError):
        raise PreconditionError(f"unknown configuration {t!r}", {"t": t}) from None
    if kind is GadgetKind.H:
        raise PreconditionError("paste at a vertex takes G2, G4 or G8")
    return kind


# Extenders

def _pair(colors: Iterable[int], palette: int) -> frozenset[int]:
    pair = frozenset(colors)
    if len(pair) != 2 or not all(1 <= c <= palette for c in pair):
        raise PreconditionError(f"expected two distinct colors in 1..{palette}", {"pair": sorted(pair)})
    return pair


def _ordered(pair: frozenset[int]) -> tuple[int, int]:
    a, b = sorted(pair)
    return a, b


def fresh_pair(palette: int, *taken: Iterable[int]) -> tuple[int, int]:
    """The two smallest palette colors outside every taken set."""
    blocked = set().union(*taken)
    free = [c for c in range(1, palette + 1) if c not in blocked]
    if len(free) < 2:
        raise PreconditionError("palette too small for a fresh pair", {"palette": palette, "taken": sorted(blocked)})
    return free[0], free[1]


def _disjoint_boundary(p1: Iterable[int], p2: Iterable[int], palette: int) -> tuple[frozenset[int], frozenset[int]]:
    a, b = _pair(p1, palette), _pair(p2, palette)
    if a & b:
        raise PreconditionError("boundary pairs must be disjoint", {"p1": sorted(a), "p2": sorted(b)})
    return a, b


def extend_g2(p1: Iterable[int], p2: Iterable[int], palette: int = 7) -> PairMap:
    """p1 sits on vx, p2 on wy."""
    a, b = _disjoint_boundary(p1, p2, palette)
    q = fresh_pair(palette, a, b)
    return {("u", "v"): _ordered(b), ("u", "w"): _ordered(a), ("v", "w"): q}


def extend_g4(p1: Iterable[int], p2: Iterable[int], palette: int = 7) -> PairMap:
    """p1 sits on u1x, p2 on v1y."""
    a, b = _disjoint_boundary(p1, p2, palette)
    q = fresh_pair(palette, a, b)
    return {
        ("u0", "v1"): _ordered(a),
        ("v0", "w"): _ordered(a),
        ("u0", "w"): _ordered(b),
        ("u1", "v0"): _ordered(b),
        ("u0", "u1"): q,
        ("v0", "v1"): q,
    }


def extend_g8(p1: Iterable[int], p2: Iterable[int], palette: int = 7) -> PairMap:
    """p1 sits on u2x, p2 on v1y."""
    a, b = _disjoint_boundary(p1, p2, palette)
    q = fresh_pair(palette, a, b)
    return {
        ("v0", "v1"): _ordered(a),
        ("u0", "u1"): _ordered(a),
        ("u0", "v0"): _ordered(b),
        ("u1", "u2"): _ordered(b),
        ("u0", "v1"): q,
        ("u2", "v0"): q,
    }


def extend_h(t: int, rail_x: Iterable[int], rail_y: Iterable[int], palette: int = 7) -> PairMap:
    """Both outer rails of H(t) carry the same pair; color the ladder downwards, then the head."""
    if t < 1:
        raise PreconditionError("H(t) needs t >= 1", {"t": t})
    px, py = _pair(rail_x, palette), _pair(rail_y, palette)
    if px != py:
        raise PreconditionError("rail pairs must be equal", {"x": sorted(px), "y": sorted(py)})

    out: PairMap = {}
    current = _ordered(px)
    for i in range(t - 1, 0, -1):
        below = fresh_pair(palette, current)
        out[(f"x{i - 1}", f"x{i}")] = below
        out[(f"y{i - 1}", f"y{i}")] = below
        out[(f"x{i}", f"y{i}")] = fresh_pair(palette, current, below)
        current = below

    q = fresh_pair(palette, current)
    r = fresh_pair(palette, current, q)
    out[("x'", "y'")] = current
    out[("x'", "y0")] = q
    out[("x0", "y'")] = q
    out[("x'", "x0")] = r
    out[("y'", "y0")] = r
    return out


def extend_gadget(gd: Gadget, p1: Iterable[int], p2: Iterable[int], palette: int = 7) -> PairMap:
    if gd.kind is GadgetKind.G2:
        return extend_g2(p1, p2, palette)
    if gd.kind is GadgetKind.G4:
        return extend_g4(p1, p2, palette)
    if gd.kind is GadgetKind.G8:
        return extend_g8(p1, p2, palette)
    return extend_h(gd.t, p1, p2, palette)
