"""Base report writer abstract class."""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import Any


class BaseReportWriter(ABC):
    """Abstract base class for all report output formats.

    Rows are plain dicts keyed by column name (camelCase aliases);
    a missing key means the command did not compute that field.
    """

    @abstractmethod
    def header(self, columns: Sequence[str]) -> str | None:
        """Header line for the format, or None if it has none."""

    @abstractmethod
    def row(self, columns: Sequence[str], row: dict[str, Any]) -> str:
        """
        Format one record as a single line without trailing newline.

        Args:
            columns: Output columns in order
            row: Record values keyed by column name

        Returns:
            The formatted line
        """
