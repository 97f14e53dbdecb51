# Edge-list / coloring text formats and DOT export.
from __future__ import annotations

from typing import TYPE_CHECKING

from .errors import ParseError
from .graph import ColorPair, Graph, IncidenceColoring, palette_count

if TYPE_CHECKING:
    from .edge_coloring import EdgeColoring


def parse_graph_text(text: str) -> tuple[Graph, IncidenceColoring | None]:
    """Parse an edge-list file, optionally carrying incidence colors.

    Line shapes (after stripping `#` comments): `<v>` declares a vertex, `<u> <v>` an
    edge, `<u> <v> <color-at-u> <color-at-v>` a colored edge. The coloring is returned
    when at least one edge is colored; uncolored edges then show up as None entries
    and are rejected by the verifier as a partial coloring.
    """
    order: list[str] = []
    known: set[str] = set()
    edges: list[tuple[str, str]] = []
    seen: dict[frozenset[str], int] = {}
    colored: dict[tuple[str, str], tuple[int, int]] = {}

    def declare(token: str) -> None:
        if token not in known:
            known.add(token)
            order.append(token)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) == 1:
            declare(tokens[0])
            continue
        if len(tokens) not in (2, 4):
            raise ParseError(f"expected 1, 2 or 4 fields, found {len(tokens)}", line=lineno)

        u, v = tokens[0], tokens[1]
        if u == v:
            raise ParseError(f"loop at {u!r}", line=lineno, details={"vertex": u})
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(
                f"parallel edge {u}-{v} (first seen on line {seen[key]})",
                line=lineno,
                details={"edge": [u, v]},
            )
        seen[key] = lineno
        declare(u)
        declare(v)
        edges.append((u, v))

        if len(tokens) == 4:
            try:
                cu, cv = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError(f"colors must be integers, got {tokens[2]!r} {tokens[3]!r}", line=lineno) from None
            if cu < 1 or cv < 1:
                raise ParseError("colors must be positive", line=lineno, details={"edge": [u, v]})
            colored[(u, v)] = (cu, cv)

    g = Graph.build(edges, vertices=order)
    if not colored:
        return g, None

    pairs: list[ColorPair] = []
    for e in range(g.size):
        a, b = g.edge_labels(e)
        if (a, b) in colored:
            pairs.append(colored[(a, b)])
        elif (b, a) in colored:
            cb, ca = colored[(b, a)]
            pairs.append((ca, cb))
        else:
            pairs.append((None, None))
    return g, IncidenceColoring(tuple(pairs))


def _declared(g: Graph) -> list[str]:
    """Vertex lines to print first so that reading the file back interns the same order."""
    isolated = [g.labels[v] for v in range(g.order) if not g.adjacency[v]]
    order = list(isolated)
    seen = set(order)
    for u, v in g.edges:
        for x in (u, v):
            if g.labels[x] not in seen:
                seen.add(g.labels[x])
                order.append(g.labels[x])
    return isolated if tuple(order) == g.labels else list(g.labels)


def format_graph(g: Graph) -> str:
    lines = _declared(g)
    lines += [f"{a} {b}" for a, b in (g.edge_labels(e) for e in range(g.size))]
    return "\n".join(lines) + "\n"


def format_coloring(g: Graph, c: IncidenceColoring) -> str:
    """One `<u> <v> <color-at-u> <color-at-v>` line per edge plus a trailing palette line."""
    lines = _declared(g)
    for e in range(g.size):
        a, b = g.edge_labels(e)
        cu, cv = c.colors[e]
        lines.append(f"{a} {b} {cu} {cv}")
    lines.append(f"# palette {palette_count(c)}")
    return "\n".join(lines) + "\n"


def format_edge_coloring(g: Graph, ec: EdgeColoring) -> str:
    lines = []
    for e in range(g.size):
        a, b = g.edge_labels(e)
        lines.append(f"{a} {b} {ec.colors[e]}")
    lines.append(f"# palette {ec.k}")
    return "\n".join(lines) + "\n"


def _quote(token: str) -> str:
    return '"' + token.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Graph, c: IncidenceColoring | None = None) -> str:
    """Graphviz text; edges are labeled `"cu|cv"` when a coloring is supplied."""
    out = ["graph G {"]
    for label in g.labels:
        out.append(f"  {_quote(label)};")
    for e in range(g.size):
        a, b = g.edge_labels(e)
        line = f"  {_quote(a)} -- {_quote(b)}"
        if c is not None:
            cu, cv = c.colors[e]
            line += f' [label="{cu}|{cv}"]'
        out.append(line + ";")
    out.append("}")
    return "\n".join(out) + "\n"
