# Proper edge coloring by exact backtracking, and the doubling construction into incidence colorings.
from __future__ import annotations

import logging
from dataclasses import dataclass

from .errors import BudgetExceeded, GraphError, ImproperEdgeColoringError, PreconditionError
from .graph import Graph, IncidenceColoring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]
    k: int


def find_clash(g: Graph, ec: EdgeColoring) -> tuple[int, int] | None:
    """Return two adjacent edges sharing a color, if any."""
    for v in range(g.order):
        seen: dict[int, int] = {}
        for _, e in g.adjacency[v]:
            c = ec.colors[e]
            if c in seen:
                return seen[c], e
            seen[c] = e
    return None


def edge_color_exact(g: Graph, k: int, budget: int | None = None) -> EdgeColoring | None:
    """A proper edge k-coloring, or None when none exists.

    Edges are visited by descending endpoint-degree sum (ties by edge id) and colors
    are tried ascending; a new color is only opened as the next unused one, which
    loses no solutions since colors are interchangeable.
    """
    if k < 0:
        raise PreconditionError("k must be non-negative", {"k": k})
    m = g.size
    if m == 0:
        return EdgeColoring((), k)
    if g.max_degree > k:
        return None

    order = sorted(range(m), key=lambda e: (-(len(g.adjacency[g.edges[e][0]]) + len(g.adjacency[g.edges[e][1]])), e))
    colors = [0] * m
    used = [0] * g.order
    nodes = 0

    def search(i: int, top: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(budget, "edge coloring")
        e = order[i]
        u, v = g.edges[e]
        blocked = used[u] | used[v]
        for c in range(1, min(k, top + 1) + 1):
            bit = 1 << c
            if blocked & bit:
                continue
            colors[e] = c
            used[u] |= bit
            used[v] |= bit
            if search(i + 1, max(top, c)):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
        colors[e] = 0
        return False

    found = search(0, 0)
    logger.debug("edge coloring k=%d: %s after %d nodes", k, "found" if found else "infeasible", nodes)
    return EdgeColoring(tuple(colors), k) if found else None


def chromatic_index(g: Graph, budget: int | None = None) -> int:
    """χ′(g); only Δ and Δ+1 are tried (Vizing)."""
    if g.size == 0:
        return 0
    delta = g.max_degree
    for k in (delta, delta + 1):
        if edge_color_exact(g, k, budget=budget) is not None:
            return k
    raise GraphError("no edge coloring with Δ+1 colors; graph is not simple")


def optimal_edge_coloring(g: Graph, budget: int | None = None) -> EdgeColoring:
    k = chromatic_index(g, budget=budget)
    ec = edge_color_exact(g, k, budget=budget)
    assert ec is not None
    return ec


def is_class_one(g: Graph, budget: int | None = None) -> bool:
    return chromatic_index(g, budget=budget) == g.max_degree


def double(g: Graph, ec: EdgeColoring) -> IncidenceColoring:
    """Each edge e becomes the incidence pair (ec(e), ec(e) + k)."""
    if len(ec.colors) != g.size:
        raise ImproperEdgeColoringError(
            f"edge coloring covers {len(ec.colors)} edges, graph has {g.size}",
            {"expected": g.size, "got": len(ec.colors)},
        )
    for e, c in enumerate(ec.colors):
        if not 1 <= c <= ec.k:
            raise ImproperEdgeColoringError(f"color {c} outside 1..{ec.k}", {"edge": list(g.edge_labels(e))})
    clash = find_clash(g, ec)
    if clash is not None:
        e, f = clash
        raise ImproperEdgeColoringError(
            "adjacent edges share a color",
            {"edges": [list(g.edge_labels(e)), list(g.edge_labels(f))], "color": ec.colors[e]},
        )
    return IncidenceColoring(tuple((c, c + ec.k) for c in ec.colors))
