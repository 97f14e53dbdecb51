# Router for coloring, verification and channel reports of posted graphs.
from fastapi import APIRouter, Depends

from .. import schemas
from ..channels import channel_report
from ..deps import domain_errors, get_budget
from ..graph import Graph, IncidenceColoring, palette_count, verify
from ..hateoas import coloring_links
from ..o1p import color_components

router = APIRouter(prefix="/api", tags=["coloring"])


def colored_edges(g: Graph, c: IncidenceColoring) -> list[schemas.ColoredEdge]:
    out = []
    for e in range(g.size):
        u, v = g.edge_labels(e)
        cu, cv = c.colors[e]
        out.append(schemas.ColoredEdge(u=u, v=v, cu=cu, cv=cv))
    return out


def to_coloring_out(g: Graph, c: IncidenceColoring, chi: int, self_href: str, method: str = "POST",
                    components: list[schemas.ComponentOut] | None = None) -> schemas.ColoringOut:
    return schemas.ColoringOut(
        chi=chi,
        palette=palette_count(c),
        components=components or [],
        vertices=list(g.labels),
        edges=colored_edges(g, c),
        _links=coloring_links(self_href, method),
    )


@router.post("/color", response_model=schemas.ColoringOut)
def color_graph(payload: schemas.GraphIn, budget: int = Depends(get_budget)):
    """Color every component optimally and return the merged coloring."""
    with domain_errors():
        g = payload.to_graph()
        result = color_components(g, budget=budget)
    components = [
        schemas.ComponentOut(vertices=list(part.labels), case=verdict.case.value, chi=verdict.chi)
        for part, verdict in result.verdicts
    ]
    return to_coloring_out(g, result.coloring, result.chi, "/api/color", components=components)


@router.post("/verify", response_model=schemas.VerifyOut)
def verify_coloring(payload: schemas.ColoredGraphIn):
    """Check a colored graph; a conflict is reported in the body, not as an error status."""
    with domain_errors():
        g = payload.to_graph()
        result = verify(g, payload.to_coloring(g))
    incidences = []
    if not result.ok:
        for inc in (result.first, result.second):
            incidences.append(schemas.IncidenceOut(vertex=g.labels[inc.vertex], edge=g.edge_labels(inc.edge)))
    return schemas.VerifyOut(
        ok=result.ok,
        witness=g.labels[result.witness] if result.witness is not None else None,
        color=result.color,
        incidences=incidences,
        _links=coloring_links("/api/verify"),
    )


@router.post("/channels", response_model=schemas.ChannelsOut)
def channels(payload: schemas.ColoredGraphIn):
    """Per-node channel boxes of a colored graph."""
    with domain_errors():
        g = payload.to_graph()
        report = channel_report(g, payload.to_coloring(g))
    return schemas.ChannelsOut(
        rainbow=report.rainbow,
        boxes=[schemas.BoxOut(node=b.node, channels=list(b.channels), rainbow=b.rainbow) for b in report.boxes],
        _links=coloring_links("/api/channels"),
    )
