"""Pydantic base classes shared by domain objects and reports."""

from pydantic import BaseModel, ConfigDict
from pydantic.alias_generators import to_camel


class DomainModel(BaseModel):
    """Immutable, strictly validated base for graph-domain values.

    Instances are frozen so they can be hashed, cached and shared
    between worker processes without copying concerns.
    """

    model_config = ConfigDict(
        frozen=True,
        strict=True,
        arbitrary_types_allowed=True,
    )


class ReportModel(BaseModel):
    """Base model for machine-readable output with camelCase keys.

    Example:
        class GraphLine(ReportModel):
            line_number: int

        GraphLine(line_number=3).model_dump(by_alias=True)  # {"lineNumber": 3}
    """

    model_config = ConfigDict(
        alias_generator=to_camel,
        populate_by_name=True,
        from_attributes=True,
    )
