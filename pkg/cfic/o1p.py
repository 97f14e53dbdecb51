# Top-level colorer for connected outer-1-planar graphs, plus a per-component wrapper.
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from .class_p import color_class_p_plus, is_in_p_plus
from .closed_form import color_cycle_on
from .edge_coloring import EdgeColoring, double, edge_color_exact
from .errors import DisconnectedGraphError, NotClassOneError
from .graph import Graph, IncidenceColoring, palette_count

logger = logging.getLogger(__name__)


class Case(str, Enum):
    CYCLE_C3 = "cycle-C3"
    CYCLE_EVEN = "cycle-even"
    CYCLE_ODD = "cycle-odd"
    CLASS_P_PLUS = "class-p-plus"
    CLASS_ONE = "class-one"


@dataclass(frozen=True)
class O1PVerdict:
    case: Case
    chi: int
    coloring: IncidenceColoring


def _cycle_case(n: int) -> Case:
    if n == 3:
        return Case.CYCLE_C3
    return Case.CYCLE_EVEN if n % 2 == 0 else Case.CYCLE_ODD


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError(
            "graph must be connected",
            {"components": len(g.components()) if g.order else 0},
        )


def _class_one_edge_coloring(g: Graph, budget: int | None) -> EdgeColoring:
    ec = edge_color_exact(g, g.max_degree, budget=budget)
    if ec is None:
        raise NotClassOneError(
            f"no proper {g.max_degree}-edge-coloring; the graph is not outer-1-planar",
            {"max_degree": g.max_degree},
        )
    return ec


def color_o1p(g: Graph, budget: int | None = None) -> O1PVerdict:
    """Optimal coloring of a connected outer-1-planar graph.

    Outer-1-planarity is assumed, not checked; a graph breaking that contract
    surfaces as NotClassOneError or BudgetExceeded.
    """
    _require_connected(g)
    if g.size == 0:
        return O1PVerdict(Case.CLASS_ONE, 0, IncidenceColoring(()))

    if g.is_cycle():
        case = _cycle_case(g.order)
        coloring = color_cycle_on(g)
    elif is_in_p_plus(g):
        case = Case.CLASS_P_PLUS
        coloring = color_class_p_plus(g, budget=budget)
    else:
        case = Case.CLASS_ONE
        coloring = double(g, _class_one_edge_coloring(g, budget))

    logger.debug("dispatched %d-vertex graph to %s", g.order, case.value)
    return O1PVerdict(case, palette_count(coloring), coloring)


def chi_o1p(g: Graph, budget: int | None = None) -> int:
    """The value of χ for a connected outer-1-planar graph, without building the coloring.

    The class-one case still searches for a Δ-edge-coloring, so input outside the
    graph family raises NotClassOneError instead of yielding 2Δ.
    """
    _require_connected(g)
    if g.size == 0:
        return 0
    if g.is_cycle():
        n = g.order
        return 6 if n == 3 else 4 if n % 2 == 0 else 5
    delta = g.max_degree
    if is_in_p_plus(g):
        return 2 * delta + 1
    _class_one_edge_coloring(g, budget)
    return 2 * delta


@dataclass(frozen=True)
class ComponentsResult:
    chi: int
    verdicts: tuple[tuple[Graph, O1PVerdict], ...]
    coloring: IncidenceColoring


def color_components(g: Graph, budget: int | None = None) -> ComponentsResult:
    """Color each component with color_o1p and merge; χ is the maximum over components."""
    verdicts = tuple((part, color_o1p(part, budget=budget)) for part in g.components())
    merged: dict[tuple[str, str], int] = {}
    for part, verdict in verdicts:
        merged.update({k: v for k, v in verdict.coloring.as_map(part).items() if v is not None})
    chi = max((v.chi for _, v in verdicts), default=0)
    return ComponentsResult(chi, verdicts, IncidenceColoring.from_map(g, merged))


def chi_components(g: Graph, budget: int | None = None) -> int:
    return max((chi_o1p(part, budget=budget) for part in g.components()), default=0)
