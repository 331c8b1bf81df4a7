"""Error codes and the per-line error record emitted by the CLI."""

from enum import Enum
from typing import Any, Optional

from src.models.base import ReportModel


class ErrorCode(str, Enum):
    """Standard error codes for graph tool failures."""

    PARSE_ERROR = "PARSE_ERROR"
    UNSUPPORTED_SIZE = "UNSUPPORTED_SIZE"
    DISCONNECTED = "DISCONNECTED"
    CAP_EXCEEDED = "CAP_EXCEEDED"
    INVALID_VERTEX = "INVALID_VERTEX"
    INVALID_PARAMETER = "INVALID_PARAMETER"
    PRECONDITION_FAILED = "PRECONDITION_FAILED"
    TEMPLATE_INVALID = "TEMPLATE_INVALID"
    IO_ERROR = "IO_ERROR"


class ErrorRecord(ReportModel):
    """Error record written in place of a report for a bad input line.

    Attributes:
        line: 1-based input line number
        code: Error code from ErrorCode enum
        message: Human-readable error message
        details: Optional additional error context

    Example:
        ErrorRecord(
            line=7,
            code=ErrorCode.PARSE_ERROR,
            message="byte 3 out of range",
            details={"offset": 3},
        )

    JSON Output:
        {"line": 7, "code": "PARSE_ERROR", "message": "byte 3 out of range",
         "details": {"offset": 3}}
    """

    line: int
    code: ErrorCode
    message: str
    details: Optional[dict[str, Any]] = None
