# Direct optimal colorings of cycles and complete graphs.
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import PreconditionError
from .graph import Graph, IncidenceColoring


def _vertex(i: int) -> str:
    return f"v{i}"


def cycle_pairs(n: int) -> list[tuple[int, int]]:
    """Color pair of edge v_i v_{i+1} for i = 1..n (v_{n+1} = v_1), in that order."""
    if n < 3:
        raise PreconditionError("a cycle needs at least 3 vertices", {"n": n})
    if n == 3:
        return [(1, 2), (3, 4), (5, 6)]

    def alternating(count: int) -> list[tuple[int, int]]:
        return [(1, 2) if i % 2 == 1 else (3, 4) for i in range(1, count + 1)]

    if n % 2 == 0:
        return alternating(n)
    # odd n = 2p + 1: alternate on the first 2p - 2 edges, then close with 1,5 / 2,3 / 4,5
    return alternating(n - 3) + [(1, 5), (2, 3), (4, 5)]


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("a cycle needs at least 3 vertices", {"n": n})
    return Graph.build(
        [(_vertex(i), _vertex(i % n + 1)) for i in range(1, n + 1)],
        vertices=[_vertex(i) for i in range(1, n + 1)],
    )


def color_cycle(n: int) -> tuple[Graph, IncidenceColoring]:
    g = cycle_graph(n)
    pairs = {(_vertex(i), _vertex(i % n + 1)): pair for i, pair in enumerate(cycle_pairs(n), start=1)}
    return g, IncidenceColoring.from_pairs(g, pairs)


def color_cycle_on(g: Graph) -> IncidenceColoring:
    """Cycle coloring laid along the walking order of an arbitrary cycle graph."""
    walk = g.cycle_order()
    n = len(walk)
    pairs = {
        (g.labels[walk[i]], g.labels[walk[(i + 1) % n]]): pair
        for i, pair in enumerate(cycle_pairs(n))
    }
    return IncidenceColoring.from_pairs(g, pairs)


def complete_classes(n: int) -> list[list[tuple[int, int]]]:
    """Polygon-method edge classes E_1.. of K_n as 1-based vertex index pairs.

    Even n: E_i = {v_{i-j} v_{i+j} : j = 1..(n-2)/2} + {v_i v_n}, indices mod n-1.
    Odd n:  E_i = {v_{i-j} v_{i+j+1} : j = 0..(n-3)/2}, indices mod n.
    """
    if n < 2:
        raise PreconditionError("a complete graph needs at least 2 vertices", {"n": n})

    def wrap(x: int, mod: int) -> int:
        r = x % mod
        return mod if r == 0 else r

    if n % 2 == 0:
        mod = n - 1
        return [
            [(wrap(i - j, mod), wrap(i + j, mod)) for j in range(1, (n - 2) // 2 + 1)] + [(i, n)]
            for i in range(1, n)
        ]
    return [[(wrap(i - j, n), wrap(i + j + 1, n)) for j in range((n - 3) // 2 + 1)] for i in range(1, n + 1)]


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("a complete graph needs at least 1 vertex", {"n": n})
    vertices = [_vertex(i) for i in range(1, n + 1)]
    return Graph.build(combinations(vertices, 2), vertices=vertices)


def color_complete(n: int) -> tuple[Graph, IncidenceColoring]:
    """Class E_i gets the pair (2i-1, 2i): 2n-2 colors for even n, 2n for odd n."""
    classes = complete_classes(n)
    g = complete_graph(n)
    pairs = {
        (_vertex(a), _vertex(b)): (2 * i - 1, 2 * i)
        for i, edges in enumerate(classes, start=1)
        for a, b in edges
    }
    return g, IncidenceColoring.from_pairs(g, pairs)


def odd_complete_minus(n: int, removed: Sequence[tuple[int, int]] = ()) -> Graph:
    """K_{2n+1} without the given edges (1-based index pairs); fewer than n/2 may be removed."""
    if n < 1:
        raise PreconditionError("n must be positive", {"n": n})
    if 2 * len(removed) >= n:
        raise PreconditionError("fewer than n/2 edges may be removed", {"n": n, "removed": len(removed)})
    drop = {frozenset((_vertex(a), _vertex(b))) for a, b in removed}
    vertices = [_vertex(i) for i in range(1, 2 * n + 2)]
    return Graph.build(
        (pair for pair in combinations(vertices, 2) if frozenset(pair) not in drop),
        vertices=vertices,
    )
