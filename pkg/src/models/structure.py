"""Characterization structures and classification results."""

from enum import Enum

from pydantic import Field

from src.models.base import DomainModel


class Family(str, Enum):
    """Metric dimension value predicted by a family of structures."""

    PATH = "PATH"
    COMPLETE = "COMPLETE"
    N_MINUS_2 = "N_MINUS_2"
    N_MINUS_3 = "N_MINUS_3"

    def beta_for(self, n: int) -> int:
        return {
            Family.PATH: 1,
            Family.COMPLETE: n - 1,
            Family.N_MINUS_2: n - 2,
            Family.N_MINUS_3: n - 3,
        }[self]


class StructureId(str, Enum):
    PATH = "PATH"
    COMPLETE = "COMPLETE"
    NM2_KST = "NM2_Kst"
    NM2_JOIN_EMPTY = "NM2_JoinEmpty"
    NM2_JOIN_KT_K1 = "NM2_JoinKtK1"
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    G4 = "G4"
    G5 = "G5"
    G6 = "G6"
    G7 = "G7"
    G8 = "G8"
    G9 = "G9"
    G10 = "G10"
    D3_P4A = "D3_P4a"
    D3_P4B = "D3_P4b"
    D3_P4C = "D3_P4c"
    D3_P4D = "D3_P4d"
    D3_PPRIME = "D3_Pprime"

    @property
    def family(self) -> Family:
        if self is StructureId.PATH:
            return Family.PATH
        if self is StructureId.COMPLETE:
            return Family.COMPLETE
        if self.value.startswith("NM2_"):
            return Family.N_MINUS_2
        return Family.N_MINUS_3


DIAMETER_2_STRUCTURES = tuple(StructureId(f"G{i}") for i in range(1, 11))
DIAMETER_3_STRUCTURES = (
    StructureId.D3_P4A,
    StructureId.D3_P4B,
    StructureId.D3_P4C,
    StructureId.D3_P4D,
    StructureId.D3_PPRIME,
)
N_MINUS_3_STRUCTURES = DIAMETER_2_STRUCTURES + DIAMETER_3_STRUCTURES


class StructureMatch(DomainModel):
    """One structure a graph matches, with its witness.

    roles maps template role names to quotient vertices; params holds the
    family parameters (s, t) of the n-2 families.
    """

    structure: StructureId
    predicted_beta: int
    roles: dict[str, int] = Field(default_factory=dict)
    params: dict[str, int] = Field(default_factory=dict)


class Classification(DomainModel):
    """All structures matched by a graph and whether their predictions agree."""

    n: int
    matches: tuple[StructureMatch, ...]

    @property
    def consistent(self) -> bool:
        return len({m.predicted_beta for m in self.matches}) <= 1

    @property
    def predicted_beta(self) -> int | None:
        return self.matches[0].predicted_beta if self.matches else None

    def families(self) -> set[Family]:
        return {m.structure.family for m in self.matches}
