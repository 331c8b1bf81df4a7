"""Resolving-set models."""

from pydantic import Field

from src.models.base import DomainModel

Representation = tuple[int, ...]


class BasisResult(DomainModel):
    """Outcome of an exact metric dimension search."""

    beta: int = Field(..., ge=0, description="Metric dimension")
    basis: tuple[int, ...] = Field(..., description="One minimum resolving set, sorted")
    explored: int = Field(0, ge=0, description="Candidate sets examined")
