"""Report writers for the CLI output formats."""

from src.utils.exceptions import raise_invalid_parameter

from .base import BaseReportWriter
from .jsonl_writer import JsonLinesWriter
from .tsv_writer import TsvWriter

_WRITERS: dict[str, type[BaseReportWriter]] = {
    "json": JsonLinesWriter,
    "tsv": TsvWriter,
}


def get_writer(output_format: str) -> BaseReportWriter:
    """
    Writer for an output format name.

    Raises:
        InvalidParameterError: Unknown format
    """
    writer = _WRITERS.get(output_format)
    if writer is None:
        raise_invalid_parameter(
            f"unknown output format {output_format!r}", {"format": output_format}
        )
    return writer()


__all__ = ["BaseReportWriter", "JsonLinesWriter", "TsvWriter", "get_writer"]
