"""Exception types and raise helpers for consistent error handling."""

import logging
from typing import Any, NoReturn

from src.models.errors import ErrorCode, ErrorRecord

logger = logging.getLogger(__name__)


class GraphToolError(Exception):
    """Base error carrying an ErrorCode and structured details."""

    code: ErrorCode = ErrorCode.PRECONDITION_FAILED

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details

    def to_record(self, line: int) -> ErrorRecord:
        """Convert to the per-line error record written by the CLI."""
        return ErrorRecord(line=line, code=self.code, message=self.message, details=self.details)


class Graph6ParseError(GraphToolError):
    code = ErrorCode.PARSE_ERROR


class UnsupportedSizeError(GraphToolError):
    code = ErrorCode.UNSUPPORTED_SIZE


class DisconnectedGraphError(GraphToolError):
    code = ErrorCode.DISCONNECTED


class SearchCapExceededError(GraphToolError):
    code = ErrorCode.CAP_EXCEEDED


class VertexIndexError(GraphToolError):
    code = ErrorCode.INVALID_VERTEX


class InvalidParameterError(GraphToolError):
    code = ErrorCode.INVALID_PARAMETER


class PreconditionError(GraphToolError):
    code = ErrorCode.PRECONDITION_FAILED


class TemplateError(GraphToolError):
    code = ErrorCode.TEMPLATE_INVALID


def raise_graph_error(
    error_type: type[GraphToolError],
    message: str,
    details: dict[str, Any] | None = None,
    log_error: bool = False,
) -> NoReturn:
    """
    Raise a GraphToolError subclass with a standardized message.

    Args:
        error_type: Concrete GraphToolError subclass
        message: Human-readable error message
        details: Optional additional error context
        log_error: Whether to log the error before raising

    Raises:
        GraphToolError: Always raises the requested subclass

    Example:
        raise_graph_error(
            Graph6ParseError,
            "byte 2 out of range",
            {"offset": 2},
        )
    """
    if log_error:
        logger.error(f"{error_type.code.value}: {message}", extra={"details": details})
    raise error_type(message, details)


def raise_parse_error(message: str, offset: int) -> NoReturn:
    """Raise a graph6 parse error naming the byte offset."""
    raise_graph_error(Graph6ParseError, f"{message} (byte offset {offset})", {"offset": offset})


def raise_disconnected(operation: str, n: int) -> NoReturn:
    """Raise for operations that require a connected graph."""
    raise_graph_error(
        DisconnectedGraphError,
        f"{operation} requires a connected graph",
        {"n": n},
    )


def raise_cap_exceeded(operation: str, n: int, cap: int) -> NoReturn:
    """Raise when an exact search would exceed its configured vertex cap."""
    raise_graph_error(
        SearchCapExceededError,
        f"{operation} refuses n={n}: cap is {cap}",
        {"n": n, "cap": cap},
        log_error=True,
    )


def raise_invalid_vertex(vertex: int, n: int) -> NoReturn:
    """Raise for a vertex index outside 0..n-1."""
    raise_graph_error(
        VertexIndexError, f"vertex {vertex} out of range for n={n}", {"vertex": vertex}
    )


def raise_invalid_parameter(message: str, details: dict[str, Any] | None = None) -> NoReturn:
    """Raise for non-positive sizes and similar bad arguments."""
    raise_graph_error(InvalidParameterError, message, details)
