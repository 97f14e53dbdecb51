"""
Class P module.

Recognition of class P by peeling configurations back off down to K4+, replay of
peel traces, the optimal 7-colorings of P and P+ members, and generators for both.

Notes:
- Peeling works on networkx graphs keyed by the vertex tokens, so every trace step
  names real vertices and replay reproduces the original labels.
- Reversing a G2/G4/G8 paste reuses the token of the gadget's degree-2 vertex for
  the restored vertex z; reversing H(t) restores the edge z1z2.
- A P member has odd order, exactly one degree-2 vertex and all other degrees 3;
  everything else is rejected before any matching is attempted.
"""
from __future__ import annotations

import logging
import random
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .edge_coloring import double, edge_color_exact
from .errors import NotClassOneError, NotInClassError, ParseError, PreconditionError
from .gadgets import (
    K4PLUS_EDGES,
    K4PLUS_PAIRS,
    K4PLUS_ROLES,
    Gadget,
    GadgetKind,
    extend_gadget,
    gadget,
    paste_g_nx,
    paste_h_nx,
)
from .graph import Graph, IncidenceColoring

logger = logging.getLogger(__name__)

PALETTE = 7
ColorMap = dict[tuple[str, str], int]


@dataclass(frozen=True)
class PeelStep:
    """One paste, as seen from the graph it produced.

    For G2/G4/G8, z is the degree-2 vertex the gadget replaced and z1, z2 its former
    neighbors; for H(t), z is None and z1z2 is the edge the ladder replaced. roles
    maps every internal gadget role to its vertex.
    """

    kind: GadgetKind
    t: int
    z: str | None
    z1: str
    z2: str
    roles: dict[str, str] = field(default_factory=dict)

    @property
    def gadget(self) -> Gadget:
        return gadget(self.kind, self.t)


@dataclass(frozen=True)
class PeelTrace:
    steps: tuple[PeelStep, ...]  # outermost first
    base: dict[str, str]  # K4+ role -> vertex

    def base_graph(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(self.base[r] for r in K4PLUS_ROLES)
        h.add_edges_from((self.base[a], self.base[b]) for a, b in K4PLUS_EDGES)
        return h


# Matching

def _template_adjacency(gd: Gadget) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {r: set() for r in gd.internal + gd.attach}
    for a, b in gd.edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def match_g_at(h: nx.Graph, low: str, kind: GadgetKind) -> Iterator[dict[str, str]]:
    """Occurrences of a G2/G4/G8 copy whose degree-2 role sits at low.

    Internal roles must have exactly their template neighborhood in h; the two
    attachment roles only need to be distinct outside vertices.
    """
    gd = gadget(kind)
    adj = _template_adjacency(gd)
    internal = set(gd.internal)
    if h.degree(low) != len(adj[gd.low]):
        return

    order = [gd.low]
    parent: dict[str, str] = {}
    for role in order:
        for nxt in sorted(adj[role]):
            if nxt != gd.low and nxt not in parent:
                parent[nxt] = role
                order.append(nxt)

    mapping = {gd.low: low}
    used = {low}

    def fits(role: str, cand: str) -> bool:
        if role in internal and h.degree(cand) != len(adj[role]):
            return False
        for other, v in mapping.items():
            if role in internal or other in internal:
                if h.has_edge(cand, v) != (other in adj[role]):
                    return False
        return True

    def rec(i: int) -> Iterator[dict[str, str]]:
        if i == len(order):
            yield dict(mapping)
            return
        role = order[i]
        for cand in sorted(h.neighbors(mapping[parent[role]])):
            if cand in used or not fits(role, cand):
                continue
            mapping[role] = cand
            used.add(cand)
            yield from rec(i + 1)
            del mapping[role]
            used.discard(cand)

    yield from rec(1)


def _only(vertices: set[str]) -> str | None:
    return next(iter(vertices)) if len(vertices) == 1 else None


def match_h_heads(h: nx.Graph) -> Iterator[tuple[int, dict[str, str]]]:
    """Occurrences of H(t): a K4-e head followed down its ladder to the first unlinked pair.

    Yields (t, role -> vertex) with the attachment roles x{t}, y{t} included.
    """
    for p, q in sorted(tuple(sorted(e)) for e in h.edges()):
        if h.degree(p) != 3 or h.degree(q) != 3:
            continue
        rest = set(h[p]) - {q}
        if rest != set(h[q]) - {p}:
            continue
        a, b = sorted(rest)
        if h.has_edge(a, b) or h.degree(a) != 3 or h.degree(b) != 3:
            continue

        roles = {"x'": p, "y'": q, "x0": a, "y0": b}
        used = {p, q, a, b}
        prev_x, prev_y = {p, q}, {p, q}
        cur_x, cur_y = a, b
        i = 0
        while True:
            nxt_x = _only(set(h[cur_x]) - prev_x - {cur_y})
            nxt_y = _only(set(h[cur_y]) - prev_y - {cur_x})
            if nxt_x is None or nxt_y is None or nxt_x == nxt_y or nxt_x in used or nxt_y in used:
                break
            i += 1
            if not h.has_edge(nxt_x, nxt_y):
                roles[f"x{i}"] = nxt_x
                roles[f"y{i}"] = nxt_y
                yield i, roles
                break
            if h.degree(nxt_x) != 3 or h.degree(nxt_y) != 3:
                break
            roles[f"x{i}"] = nxt_x
            roles[f"y{i}"] = nxt_y
            used |= {nxt_x, nxt_y}
            prev_x, prev_y = {cur_x}, {cur_y}
            cur_x, cur_y = nxt_x, nxt_y


def _match_k4_plus(h: nx.Graph) -> dict[str, str] | None:
    template = nx.Graph(list(K4PLUS_EDGES))
    gm = GraphMatcher(h, template)
    if not gm.is_isomorphic():
        return None
    return {role: v for v, role in gm.mapping.items()}


# Peeling

def _reversals(h: nx.Graph, low: str) -> Iterator[tuple[PeelStep, nx.Graph]]:
    for kind in (GadgetKind.G2, GadgetKind.G4, GadgetKind.G8):
        gd = gadget(kind)
        for roles in match_g_at(h, low, kind):
            z1, z2 = roles[gd.attach[0]], roles[gd.attach[1]]
            internal = {r: roles[r] for r in gd.internal}
            smaller = h.copy()
            smaller.remove_nodes_from(internal.values())
            smaller.add_edges_from([(low, z1), (low, z2)])
            yield PeelStep(kind, gd.t, low, z1, z2, internal), smaller

    for t, roles in match_h_heads(h):
        gd = gadget(GadgetKind.H, t)
        z1, z2 = roles[gd.attach[0]], roles[gd.attach[1]]
        internal = {r: roles[r] for r in gd.internal}
        smaller = h.copy()
        smaller.remove_nodes_from(internal.values())
        smaller.add_edge(z1, z2)
        yield PeelStep(GadgetKind.H, t, None, z1, z2, internal), smaller


def _shape_ok(h: nx.Graph) -> str | None:
    """The degree-2 vertex when the degree profile allows membership."""
    if h.number_of_nodes() % 2 == 0:
        return None
    lows = [v for v, d in h.degree() if d == 2]
    if len(lows) != 1 or any(d not in (2, 3) for _, d in h.degree()):
        return None
    return lows[0]


def _key(h: nx.Graph) -> frozenset[frozenset[str]]:
    return frozenset(frozenset(e) for e in h.edges())


def _peel_nx(h: nx.Graph, failed: set[frozenset[frozenset[str]]]) -> tuple[list[PeelStep], dict[str, str]] | None:
    if h.number_of_nodes() <= 5:
        if h.number_of_nodes() == 5 and h.number_of_edges() == 7:
            base = _match_k4_plus(h)
            if base is not None:
                return [], base
        return None
    low = _shape_ok(h)
    if low is None:
        return None
    key = _key(h)
    if key in failed:
        return None

    for step, smaller in _reversals(h, low):
        found = _peel_nx(smaller, failed)
        if found is not None:
            steps, base = found
            logger.debug("peeled %s(t=%d) at %s", step.kind.value, step.t, step.z or f"{step.z1}-{step.z2}")
            return [step] + steps, base
    failed.add(key)
    return None


def _peel_graph(h: nx.Graph) -> PeelTrace | None:
    if h.number_of_nodes() == 0 or not nx.is_connected(h):
        return None
    if max(d for _, d in h.degree()) > 3:
        return None
    found = _peel_nx(h, set())
    if found is None:
        return None
    steps, base = found
    return PeelTrace(tuple(steps), base)


def peel(g: Graph) -> PeelTrace:
    """Decompose a class P member down to K4+; raises NotInClassError otherwise."""
    trace = _peel_graph(g.to_networkx())
    if trace is None:
        raise NotInClassError("graph is not in class P", {"order": g.order, "size": g.size})
    return trace


def replay(trace: PeelTrace) -> Graph:
    """Rebuild the peeled graph, with its original vertex tokens, from the trace."""
    h = trace.base_graph()
    for step in reversed(trace.steps):
        _paste_step(h, step)
    return Graph.from_networkx(h)


def _paste_step(h: nx.Graph, step: PeelStep) -> None:
    if step.kind is GadgetKind.H:
        paste_h_nx(h, step.z1, step.z2, step.t, labels=step.roles)
    else:
        assert step.z is not None
        paste_g_nx(h, step.z, step.kind, step.z1, step.z2, labels=step.roles)


def is_in_p(g: Graph) -> bool:
    return _peel_graph(g.to_networkx()) is not None


# P+

@dataclass(frozen=True)
class PSplit:
    """A P member hanging off the rest of the graph through the bridge ux."""

    side: frozenset[str]  # vertices of the P member, u included
    u: str
    x: str
    trace: PeelTrace


def _find_split(h: nx.Graph) -> PSplit | None:
    for a, b in sorted(tuple(sorted(e)) for e in nx.bridges(h)):
        for u, x in ((a, b), (b, a)):
            if h.degree(u) != 3:
                continue
            cut = h.copy()
            cut.remove_edge(u, x)
            side = nx.node_connected_component(cut, u)
            trace = _peel_graph(cut.subgraph(side).copy())
            if trace is not None:
                return PSplit(frozenset(side), u, x, trace)
    return None


def find_p_split(g: Graph) -> PSplit | None:
    """Locate a P subgraph attached to the rest of g by a bridge at its degree-2 vertex.

    With Δ = 3 every vertex of such a subgraph but u is saturated, so the subgraph
    is a whole side of the bridge ux.
    """
    return _find_split(g.to_networkx())


def is_in_p_plus(g: Graph) -> bool:
    if g.order == 0 or not g.is_connected() or g.max_degree != 3:
        return False
    return is_in_p(g) or find_p_split(g) is not None


def classify(g: Graph) -> str:
    """'P', 'P+' or 'other'."""
    if is_in_p(g):
        return "P"
    if is_in_p_plus(g):
        return "P+"
    return "other"


# Coloring

def _boundary_pair(colors: ColorMap, a: str, b: str) -> tuple[int, int]:
    return colors[(a, b)], colors[(b, a)]


def _move_edge(colors: ColorMap, old: tuple[str, str], new: tuple[str, str]) -> None:
    """Hand the pair of old = (keep, gone) to new = (keep, fresh), keep's color staying at keep."""
    keep, gone = old
    _, fresh = new
    colors[(keep, fresh)] = colors.pop((keep, gone))
    colors[(fresh, keep)] = colors.pop((gone, keep))


def _color_step(colors: ColorMap, step: PeelStep) -> None:
    gd = step.gadget
    roles = dict(step.roles)
    roles[gd.attach[0]] = step.z1
    roles[gd.attach[1]] = step.z2
    (sx, ax), (sy, ay) = gd.boundary

    if step.kind is GadgetKind.H:
        pair = _boundary_pair(colors, step.z1, step.z2)
        colors[(roles[sx], step.z1)] = pair[1]
        colors[(step.z1, roles[sx])] = pair[0]
        colors[(roles[sy], step.z2)] = pair[0]
        colors[(step.z2, roles[sy])] = pair[1]
        del colors[(step.z1, step.z2)], colors[(step.z2, step.z1)]
        p1 = p2 = pair
    else:
        assert step.z is not None
        p1 = _boundary_pair(colors, step.z, step.z1)
        p2 = _boundary_pair(colors, step.z, step.z2)
        _move_edge(colors, (step.z1, step.z), (step.z1, roles[sx]))
        _move_edge(colors, (step.z2, step.z), (step.z2, roles[sy]))

    for (a, b), (ca, cb) in extend_gadget(gd, p1, p2, PALETTE).items():
        colors[(roles[a], roles[b])] = ca
        colors[(roles[b], roles[a])] = cb


def _color_trace(trace: PeelTrace) -> ColorMap:
    colors: ColorMap = {}
    for (a, b), (ca, cb) in K4PLUS_PAIRS.items():
        colors[(trace.base[a], trace.base[b])] = ca
        colors[(trace.base[b], trace.base[a])] = cb
    for step in reversed(trace.steps):
        _color_step(colors, step)
    return colors


def color_class_p(g: Graph) -> IncidenceColoring:
    """Optimal 7-coloring of a class P member: color K4+, then extend through each paste."""
    trace = peel(g)
    return IncidenceColoring.from_map(g, _color_trace(trace))


def _color_p_plus_map(h: nx.Graph, budget: int | None) -> ColorMap:
    trace = _peel_graph(h)
    if trace is not None:
        return _color_trace(trace)

    split = _find_split(h)
    if split is None:
        raise NotInClassError("graph is not in class P+", {"order": h.number_of_nodes()}, code="NOT_IN_P_PLUS")
    side = h.subgraph(split.side).copy()
    rest = h.subgraph(set(h) - split.side | {split.u}).copy()
    logger.debug("split P member of order %d off at %s-%s", side.number_of_nodes(), split.u, split.x)

    rest_colors = _color_rest(rest, budget)
    side_colors = _color_trace(split.trace)

    # rename the side's colors so its two pairs at u avoid the pair on ux
    at_u = {side_colors[(split.u, w)] for w in side[split.u]} | {side_colors[(w, split.u)] for w in side[split.u]}
    free = [c for c in range(1, PALETTE + 1) if c not in at_u]
    target = [rest_colors[(split.u, split.x)], rest_colors[(split.x, split.u)]]
    source = free + [c for c in range(1, PALETTE + 1) if c in at_u]
    target += [c for c in range(1, PALETTE + 1) if c not in target]
    rename = dict(zip(source, target))

    merged = {inc: rename[c] for inc, c in side_colors.items()}
    merged.update(rest_colors)
    return merged


def _color_rest(rest: nx.Graph, budget: int | None) -> ColorMap:
    g = Graph.from_networkx(rest)
    if is_in_p_plus(g):
        return _color_p_plus_map(rest, budget)
    ec = edge_color_exact(g, 3, budget=budget)
    if ec is None:
        raise NotClassOneError(
            "the part outside the P member has no proper 3-edge-coloring",
            {"order": g.order, "size": g.size},
        )
    return {k: v for k, v in double(g, ec).as_map(g).items() if v is not None}


def color_class_p_plus(g: Graph, budget: int | None = None) -> IncidenceColoring:
    """Optimal 7-coloring of a P+ member.

    The P member hanging at a bridge ux is colored by color_class_p, the rest plus
    ux recursively or by doubling a 3-edge-coloring, and the P side's colors are
    renamed so the pair on ux is free at u.
    """
    if not g.is_connected() or g.max_degree != 3:
        raise NotInClassError("graph is not in class P+", {"order": g.order, "size": g.size}, code="NOT_IN_P_PLUS")
    return IncidenceColoring.from_map(g, _color_p_plus_map(g.to_networkx(), budget))


# Generators

_STEP = re.compile(r"^(g2|g4|g8|h(\d+))$")


def parse_steps(text: str) -> list[tuple[GadgetKind, int]]:
    """Parse `g2,g4,h3,...` into (kind, t) pairs."""
    ops: list[tuple[GadgetKind, int]] = []
    for token in (s.strip().lower() for s in text.split(",")):
        if not token:
            continue
        m = _STEP.match(token)
        if m is None or (m.group(2) is not None and int(m.group(2)) < 1):
            raise ParseError(f"unknown paste step {token!r}; expected g2, g4, g8 or h<t>", details={"step": token})
        if m.group(2) is not None:
            ops.append((GadgetKind.H, int(m.group(2))))
        else:
            kind = GadgetKind(token)
            ops.append((kind, gadget(kind).t))
    return ops


def _unique_low(h: nx.Graph) -> str:
    lows = [v for v, d in h.degree() if d == 2]
    if len(lows) != 1:
        raise PreconditionError("expected exactly one degree-2 vertex", {"found": sorted(lows)})
    return lows[0]


def build_p_member(ops: Sequence[tuple[GadgetKind, int]], rng: random.Random | None = None) -> Graph:
    """Paste the given configurations onto K4+ in order.

    G pastes go to the unique degree-2 vertex; H pastes go to the first edge in
    canonical order, or a random one when rng is given.
    """
    h = nx.Graph(list(K4PLUS_EDGES))
    for kind, t in ops:
        if kind is GadgetKind.H:
            edges = sorted(tuple(sorted(e)) for e in h.edges())
            z1, z2 = rng.choice(edges) if rng is not None else edges[0]
            paste_h_nx(h, z1, z2, t)
        else:
            paste_g_nx(h, _unique_low(h), kind)
    return Graph.from_networkx(h)


_APPENDAGE = re.compile(r"^(path(\d+)|cycle4)$")


def attach_appendage(g: Graph, appendage: str) -> Graph:
    """Hang a class-one graph (`path<L>` or `cycle4`) off the unique degree-2 vertex by a new bridge."""
    m = _APPENDAGE.match(appendage.strip().lower())
    if m is None or (m.group(2) is not None and int(m.group(2)) < 1):
        raise ParseError(f"unknown appendage {appendage!r}; expected path<L> or cycle4", details={"appendage": appendage})
    h = g.to_networkx()
    u = _unique_low(h)

    n = 1
    while any(str(v).startswith(f"app{n}.") for v in h):
        n += 1
    if m.group(2) is not None:
        chain = [u] + [f"app{n}.{i}" for i in range(1, int(m.group(2)) + 1)]
        h.add_edges_from(zip(chain, chain[1:]))
    else:
        ring = [f"app{n}.{i}" for i in range(4)]
        h.add_edge(u, ring[0])
        h.add_edges_from(zip(ring, ring[1:] + ring[:1]))
    return Graph.from_networkx(h)
