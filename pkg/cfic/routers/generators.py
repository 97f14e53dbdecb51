# Router for the closed-form generators; each returns a colored graph.
from fastapi import APIRouter

from .. import schemas
from ..closed_form import color_complete, color_cycle
from ..deps import domain_errors
from ..errors import http_error
from ..gadgets import k4_plus, k4_plus_coloring
from ..graph import palette_count
from .coloring import to_coloring_out

router = APIRouter(prefix="/api/gen", tags=["generators"])

# Largest n served.
MAX_ORDER = 200


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise http_error(400, "BAD_SIZE", f"n must be at most {MAX_ORDER}", {"n": n})


@router.get("/cycle/{n}", response_model=schemas.ColoringOut)
def gen_cycle(n: int):
    _check_order(n)
    with domain_errors():
        g, c = color_cycle(n)
    return to_coloring_out(g, c, palette_count(c), f"/api/gen/cycle/{n}", "GET")


@router.get("/complete/{n}", response_model=schemas.ColoringOut)
def gen_complete(n: int):
    _check_order(n)
    with domain_errors():
        g, c = color_complete(n)
    return to_coloring_out(g, c, palette_count(c), f"/api/gen/complete/{n}", "GET")


@router.get("/k4plus", response_model=schemas.ColoringOut)
def gen_k4plus():
    g, c = k4_plus(), k4_plus_coloring()
    return to_coloring_out(g, c, palette_count(c), "/api/gen/k4plus", "GET")
