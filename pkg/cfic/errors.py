# Error types shared by the library, the CLI and the HTTP API, all rendering one JSON envelope shape.
import json
from typing import Any

from fastapi import HTTPException


class CficError(Exception):
    """Base domain error. Carries a stable code, a message and structured details."""

    code = "DOMAIN_ERROR"
    status_code = 400
    exit_code = 1

    def __init__(self, message: str, details: dict[str, Any] | None = None, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code
        self.message = message
        self.details = details or {}

    def payload(self) -> dict:
        """Return the standardized error payload."""
        return {
            "error": {
                "code": self.code,
                "message": self.message,
                "details": self.details,
            }
        }

    def to_json(self) -> str:
        return json.dumps(self.payload(), sort_keys=True)


class ParseError(CficError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, line: int | None = None, details: dict[str, Any] | None = None):
        details = dict(details or {})
        if line is not None:
            details["line"] = line
            message = f"line {line}: {message}"
        super().__init__(message, details)
        self.line = line


class GraphError(CficError):
    code = "INVALID_GRAPH"


class UnknownVertexError(CficError):
    code = "UNKNOWN_VERTEX"


class PartialColoringError(CficError):
    code = "PARTIAL_COLORING"


class ConflictError(CficError):
    code = "COLORING_CONFLICT"
    status_code = 409


class PreconditionError(CficError):
    code = "PRECONDITION_FAILED"
    status_code = 422


class ImproperEdgeColoringError(PreconditionError):
    code = "IMPROPER_EDGE_COLORING"


class NotInClassError(PreconditionError):
    code = "NOT_IN_P"


class DisconnectedGraphError(PreconditionError):
    code = "DISCONNECTED"


class NotClassOneError(CficError):
    """A Δ-edge-coloring the classification promises does not exist (input contract violated)."""

    code = "NOT_CLASS_ONE"
    status_code = 422


class BudgetExceeded(CficError):
    code = "BUDGET_EXCEEDED"
    status_code = 503
    exit_code = 2

    def __init__(self, budget: int, what: str = "search"):
        super().__init__(f"{what} exceeded its node budget of {budget}", {"budget": budget, "search": what})
        self.budget = budget


def http_error(status_code: int, code: str, message: str, details: dict | None = None) -> HTTPException:
    """Return an HTTPException with a standardized error payload shape."""
    return HTTPException(
        status_code=status_code,
        detail={
            "error": {
                "code": code,
                "message": message,
                "details": details or {},
            }
        },
    )


def to_http_error(exc: CficError) -> HTTPException:
    """Translate a domain error into the HTTP error envelope."""
    return http_error(exc.status_code, exc.code, exc.message, exc.details)
