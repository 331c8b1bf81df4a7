"""Twin decomposition models."""

from enum import Enum

from pydantic import Field

from src.models.base import DomainModel
from src.models.graph import Graph


class VertexType(str, Enum):
    """Type of a twin class: singleton, clique, or independent set."""

    ONE = "1"
    K = "K"
    N = "N"


ONE_K = frozenset({VertexType.ONE, VertexType.K})
ONE_N = frozenset({VertexType.ONE, VertexType.N})
K_N = frozenset({VertexType.K, VertexType.N})


class TwinDecomposition(DomainModel):
    """Partition of V(G) into twin classes together with the twin graph G*.

    Class i is quotient vertex i; classes are sorted and ordered by their
    smallest member.
    """

    graph: Graph
    classes: tuple[tuple[int, ...], ...]
    quotient: Graph
    types: tuple[VertexType, ...]
    class_of: tuple[int, ...] = Field(..., description="Quotient vertex of each original vertex")

    @property
    def alpha(self) -> int:
        """Number of quotient vertices of type K or N."""
        return sum(1 for t in self.types if t is not VertexType.ONE)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def summary(self) -> list[str]:
        """Per-class "size:type" strings, e.g. ["1:1", "2:K", "1:1"]."""
        return [f"{len(c)}:{t.value}" for c, t in zip(self.classes, self.types)]
