# Router for the numeric invariants of posted graphs.
from fastapi import APIRouter, Depends

from .. import schemas
from ..class_p import classify
from ..deps import domain_errors, get_budget
from ..edge_coloring import chromatic_index
from ..hateoas import analysis_links
from ..o1p import chi_components
from ..oracle import chi_exact

router = APIRouter(prefix="/api", tags=["analysis"])


@router.post("/chi", response_model=schemas.ChiOut)
def chi(payload: schemas.ChiRequest, budget: int = Depends(get_budget)):
    """Closed-form value by default; `exact` runs the exhaustive search instead."""
    with domain_errors():
        g = payload.to_graph()
        if payload.exact:
            value, method = chi_exact(g, budget=budget).chi, "exact"
        else:
            value, method = chi_components(g, budget=budget), "closed-form"
    return schemas.ChiOut(chi=value, max_degree=g.max_degree, method=method, _links=analysis_links("/api/chi"))


@router.post("/chromatic-index", response_model=schemas.ChromaticIndexOut)
def chromatic_index_of(payload: schemas.GraphIn, budget: int = Depends(get_budget)):
    with domain_errors():
        g = payload.to_graph()
        k = chromatic_index(g, budget=budget)
    return schemas.ChromaticIndexOut(
        chromatic_index=k,
        max_degree=g.max_degree,
        class_one=k == g.max_degree,
        _links=analysis_links("/api/chromatic-index"),
    )


@router.post("/classify", response_model=schemas.ClassifyOut)
def classify_graph(payload: schemas.GraphIn):
    with domain_errors():
        verdict = classify(payload.to_graph())
    return schemas.ClassifyOut(verdict=schemas.Verdict(verdict), _links=analysis_links("/api/classify"))
