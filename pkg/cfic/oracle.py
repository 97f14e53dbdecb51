# Exact conflict-free incidence chromatic number by backtracking over per-edge color pairs.
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import networkx as nx

from .errors import BudgetExceeded, GraphError, PreconditionError
from .graph import Graph, IncidenceColoring, conflicting, verify

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChiResult:
    chi: int
    witness: IncidenceColoring


@lru_cache(maxsize=512)
def counting_bound(g: Graph) -> int:
    """Least k the matching count allows.

    Each color class of a conflict-free incidence coloring sits on a matching, so a
    k-coloring of any subgraph H needs k * ν(H) >= 2|E(H)|. Checked on the whole
    graph and on every biconnected block.
    """
    h = g.to_networkx()
    parts = [h] + [h.edge_subgraph(block) for block in nx.biconnected_component_edges(h)]
    bound = 0
    for part in parts:
        m = part.number_of_edges()
        if m == 0:
            continue
        nu = len(nx.max_weight_matching(part, maxcardinality=True))
        bound = max(bound, -(-2 * m // nu))
    return bound


def _solutions(g: Graph, k: int, budget: int | None) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every assignment of disjoint color pairs, one representative per color renaming.

    The next edge is the unassigned one with the fewest free colors (ties by id);
    a pair may only open the next one or two unused colors.
    """
    m = g.size
    full = ((1 << (k + 1)) - 1) & ~1
    used = [0] * g.order
    pairs: list[tuple[int, int] | None] = [None] * m
    nodes = 0

    def pick() -> tuple[int, int, int]:
        best, best_avail, best_count = -1, 0, k + 1
        for e in range(m):
            if pairs[e] is not None:
                continue
            u, v = g.edges[e]
            avail = full & ~(used[u] | used[v])
            count = avail.bit_count()
            if count < best_count:
                best, best_avail, best_count = e, avail, count
        return best, best_avail, best_count

    def rec(assigned: int, top: int) -> Iterator[tuple[tuple[int, int], ...]]:
        nonlocal nodes
        if assigned == m:
            yield tuple(pairs)  # type: ignore[arg-type]
            return
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(budget, "incidence coloring")

        e, avail, count = pick()
        if count < 2:
            return
        u, v = g.edges[e]
        candidates = [c for c in range(1, min(k, top + 2) + 1) if avail >> c & 1]
        for a, b in combinations(candidates, 2):
            if a > top + 1:
                break
            if a <= top and b == top + 2:
                continue
            bits = (1 << a) | (1 << b)
            pairs[e] = (a, b)
            used[u] |= bits
            used[v] |= bits
            yield from rec(assigned + 1, max(top, b))
            used[u] &= ~bits
            used[v] &= ~bits
        pairs[e] = None

    yield from rec(0, 0)
    logger.debug("pair search k=%d finished after %d nodes", k, nodes)


def iter_colorings(g: Graph, k: int, budget: int | None = None) -> Iterator[IncidenceColoring]:
    """All conflict-free k-colorings up to renaming of colors and swapping within an edge."""
    if k < 0:
        raise PreconditionError("k must be non-negative", {"k": k})
    if g.size == 0:
        yield IncidenceColoring(())
        return
    for pairs in _solutions(g, k, budget):
        yield IncidenceColoring(pairs)


def feasible(g: Graph, k: int, budget: int | None = None) -> IncidenceColoring | None:
    """A verified conflict-free k-coloring, or None when none exists."""
    if k < 0:
        raise PreconditionError("k must be non-negative", {"k": k})
    if g.size == 0:
        return IncidenceColoring(())
    if k < 2 * g.max_degree:
        return None
    if k < counting_bound(g):
        logger.debug("k=%d refuted by the matching count", k)
        return None

    coloring = next(iter_colorings(g, k, budget=budget), None)
    if coloring is not None and not verify(g, coloring):
        raise GraphError("pair search produced an invalid coloring")
    return coloring


def chi_exact(g: Graph, budget: int | None = None) -> ChiResult:
    """Tries 2Δ, 2Δ+1, 2Δ+2 in order; one of them always succeeds for simple graphs."""
    delta = g.max_degree
    for k in (2 * delta, 2 * delta + 1, 2 * delta + 2):
        coloring = feasible(g, k, budget=budget)
        if coloring is not None:
            return ChiResult(k, coloring)
        logger.debug("no conflict-free %d-coloring", k)
    raise GraphError("no coloring within 2Δ+2 colors; graph is not simple")


def incidence_label(g: Graph, vertex: int, edge: int) -> str:
    a, b = g.edge_labels(edge)
    return f"{g.labels[vertex]}@{a}-{b}"


def conflict_graph(g: Graph) -> Graph:
    """Incidences as vertices, conflicting pairs as edges."""
    incs = list(g.incidences())
    labels = [incidence_label(g, i.vertex, i.edge) for i in incs]
    edges = [
        (labels[i], labels[j])
        for i, j in combinations(range(len(incs)), 2)
        if conflicting(g, incs[i], incs[j])
    ]
    return Graph.build(edges, vertices=labels)
