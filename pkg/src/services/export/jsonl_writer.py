"""JSON-lines report writer."""

import json
from collections.abc import Sequence
from typing import Any

from .base import BaseReportWriter


class JsonLinesWriter(BaseReportWriter):
    """One compact JSON object per line, keys in column order."""

    def header(self, columns: Sequence[str]) -> str | None:
        return None

    def row(self, columns: Sequence[str], row: dict[str, Any]) -> str:
        """
        Serialize one record.

        Notes:
            - Keys not in columns follow in their original order
            - Absent and None values are dropped
            - ensure_ascii=False keeps the output byte-identical across runs
        """
        ordered = {c: row[c] for c in columns if row.get(c) is not None}
        ordered.update((k, v) for k, v in row.items() if k not in ordered and v is not None)
        return json.dumps(ordered, ensure_ascii=False, separators=(",", ":"))
