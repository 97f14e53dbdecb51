# Dependency utilities for FastAPI routes: the search budget and domain error translation.
from contextlib import contextmanager
from typing import Iterator

from . import config
from .errors import CficError, to_http_error


def get_budget() -> int:
    """Node budget for exact searches started by a request."""
    return config.SEARCH_BUDGET


@contextmanager
def domain_errors() -> Iterator[None]:
    """Re-raise domain errors as structured http_error responses."""
    try:
        yield
    except CficError as exc:
        raise to_http_error(exc) from exc
