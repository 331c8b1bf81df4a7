"""Per-graph reports and the verification summary written by the CLI."""

from enum import Enum
from typing import Any, Optional

from pydantic import Field

from src.models.base import ReportModel


class Flag(str, Enum):
    VIOLATION = "VIOLATION"
    INCONSISTENT = "INCONSISTENT"


class MatchRecord(ReportModel):
    """One characterization matched by a graph."""

    structure: str
    predicted_beta: int
    roles: Optional[dict[str, int]] = None
    params: Optional[dict[str, int]] = None


class GraphReport(ReportModel):
    """One output line per input graph.

    Fields a command does not compute stay None and are omitted from
    JSON-lines output.

    Example:
        GraphReport(line=1, graph6="Dhc", n=5, beta=2, basis=[0, 1])

    JSON Output:
        {"line": 1, "graph6": "Dhc", "n": 5, "beta": 2, "basis": [0, 1]}
    """

    line: int
    graph6: str
    n: int
    diameter: Optional[int] = None
    beta: Optional[int] = None
    basis: Optional[list[int]] = None
    twin_classes: Optional[list[str]] = None
    quotient: Optional[str] = None
    alpha: Optional[int] = None
    matches: Optional[list[MatchRecord]] = None
    predicted_beta: Optional[int] = None
    consistent: Optional[bool] = None
    flags: Optional[list[Flag]] = None


class Check(str, Enum):
    """Checks the verification harness runs on every graph."""

    FAMILY_MISMATCH = "FAMILY_MISMATCH"
    INCONSISTENT = "INCONSISTENT"
    BOUNDS = "BOUNDS"
    QUOTIENT_DISTANCE = "QUOTIENT_DISTANCE"
    QUOTIENT_DIMENSION = "QUOTIENT_DIMENSION"


class Failure(ReportModel):
    check: Check
    message: str


class GraphVerdict(ReportModel):
    """Outcome of checking one graph against the oracle."""

    line: int
    graph6: str
    n: int
    beta: int
    structures: list[str] = Field(default_factory=list)
    failures: list[Failure] = Field(default_factory=list)
    quotient_has_twins: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures


class StructureCount(ReportModel):
    n: int
    family: str
    structure: str
    hits: int


class VerificationSummary(ReportModel):
    """Final JSON object of a verify run.

    counts holds the number of graphs matching each (n, family,
    structure); counterexamples lists every graph that failed a check.
    """

    graphs: int = 0
    skipped: int = 0
    errors: int = 0
    mismatches: int = 0
    inconsistent: int = 0
    violations: int = 0
    quotient_with_twins: int = 0
    counts: list[StructureCount] = Field(default_factory=list)
    counterexamples: list[GraphVerdict] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_record(self) -> dict[str, Any]:
        return {"summary": self.model_dump(by_alias=True, exclude_none=True, mode="json")}
