"""Twin-graph templates: a structure graph plus class types and sizes."""

import sys
from typing import NewType

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

from pydantic import model_validator

from src.models.base import DomainModel
from src.models.graph import Graph
from src.models.structure import StructureId
from src.models.twin import VertexType

CanonicalForm = NewType("CanonicalForm", str)


class Template(DomainModel):
    """Blueprint of a graph by its twin graph.

    Vertex i of the structure graph expands to a class of sizes[i]
    vertices: a clique for K, an independent set for N, a single vertex
    for ONE.
    """

    structure: StructureId
    quotient_edges: tuple[tuple[int, int], ...]
    types: tuple[VertexType, ...]
    sizes: tuple[int, ...]

    @model_validator(mode="after")
    def check_sizes(self) -> Self:
        """Sizes must agree with types: 1 for ONE, at least 2 otherwise."""
        if len(self.types) != len(self.sizes):
            raise ValueError("types and sizes differ in length")
        for i, (t, size) in enumerate(zip(self.types, self.sizes)):
            if (t is VertexType.ONE) != (size == 1) or size < 1:
                raise ValueError(f"class {i}: size {size} does not fit type {t.value}")
        return self

    @property
    def order(self) -> int:
        return sum(self.sizes)


class SufficiencyFixture(DomainModel):
    """A named witness graph whose metric dimension is known in advance."""

    name: str
    template: Template
    graph: Graph
    expected_beta: int
