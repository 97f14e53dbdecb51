# Main application entry point for the conflict-free incidence coloring API.

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from . import __version__
from .config import INSTANCE_ID
from .hateoas import root_links
from .routers import analysis as analysis_router
from .routers import coloring as coloring_router
from .routers import generators as generators_router

# FastAPI application metadata (used by OpenAPI docs)
app = FastAPI(
    title="Conflict-Free Incidence Coloring API",
    version=__version__,
    description="Optimal conflict-free incidence colorings, verification and graph invariants (HATEOAS).",
)


@app.middleware("http")
async def add_instance_header(request: Request, call_next):
    """Tag every response with INSTANCE_ID so replicas behind one proxy can be told apart."""
    response = await call_next(request)
    response.headers["X-Instance-Id"] = INSTANCE_ID
    return response


app.include_router(coloring_router.router)
app.include_router(analysis_router.router)
app.include_router(generators_router.router)


@app.exception_handler(RequestValidationError)
def validation_exception_handler(request: Request, exc: RequestValidationError):
    """Convert FastAPI validation errors into a consistent JSON error shape."""
    return JSONResponse(
        status_code=422,
        content={
            "error": {
                "code": "VALIDATION_ERROR",
                "message": "Request validation failed",
                "details": jsonable_errors(exc),
            }
        },
    )


def jsonable_errors(exc: RequestValidationError) -> list:
    # ctx may carry exception objects that JSONResponse cannot encode
    return [{k: v for k, v in err.items() if k != "ctx"} for err in exc.errors()]


@app.get("/api", tags=["root"])
def api_root():
    """Root resource that exposes top-level HATEOAS links for the API."""
    return {"name": "Conflict-Free Incidence Coloring API", "_links": root_links()}
