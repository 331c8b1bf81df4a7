"""Tab-separated report writer."""

import csv
import io
import json
from collections.abc import Sequence
from typing import Any

from .base import BaseReportWriter


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list) and all(isinstance(v, (int, str)) for v in value):
        return ",".join(str(v) for v in value)
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


class TsvWriter(BaseReportWriter):
    """Header row plus one tab-separated row per record.

    Lists of scalars are joined with commas; nested values are compact
    JSON; missing values are empty cells.
    """

    def _line(self, cells: Sequence[str]) -> str:
        output = io.StringIO()
        writer = csv.writer(output, delimiter="\t", quoting=csv.QUOTE_MINIMAL, lineterminator="")
        writer.writerow(cells)
        return output.getvalue()

    def header(self, columns: Sequence[str]) -> str | None:
        return self._line(columns)

    def row(self, columns: Sequence[str], row: dict[str, Any]) -> str:
        return self._line([_cell(row.get(c)) for c in columns])
