"""Catalogue of twin-graph structures for metric dimension n-3.

Each entry is a small structure graph with named roles and a predicate
over the vertex types assigned to those roles. The same entries drive
recognition (characterize) and construction (generate).

Composite types: (1K) = ONE or K, (1N) = ONE or N, (KN) = K or N.
"""

from collections.abc import Callable, Sequence
from itertools import permutations

from pydantic import Field

from src.models.base import DomainModel
from src.models.graph import Graph
from src.models.structure import StructureId
from src.models.twin import K_N, ONE_K, ONE_N, TwinDecomposition, VertexType

TypePredicate = Callable[[tuple[VertexType, ...]], bool]

ONE = VertexType.ONE
K = VertexType.K
N = VertexType.N


class StructureTemplate(DomainModel):
    """Structure graph on len(roles) vertices plus its type constraint."""

    structure: StructureId
    roles: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    predicate: TypePredicate = Field(..., exclude=True)

    @property
    def graph(self) -> Graph:
        return Graph.from_edges(len(self.roles), self.edges)

    def admits(self, types: Sequence[VertexType]) -> bool:
        return len(types) == len(self.roles) and self.predicate(tuple(types))


def _k3(ts: tuple[VertexType, ...]) -> bool:
    # at most one vertex of type (1K)
    return sum(1 for t in ts if t is N) >= 2


def _p3(ts: tuple[VertexType, ...]) -> bool:
    leaf_a, center, leaf_b = ts
    case_a = center is N and leaf_a is K
    case_b = leaf_a is K and leaf_b in K_N
    return case_a or case_b


def _paw(ts: tuple[VertexType, ...]) -> bool:
    degree3, degree2_n, degree2_other, leaf = ts
    if degree2_n is not N or degree2_other not in ONE_K or leaf not in ONE_N:
        return False
    return not (degree2_other is K and (leaf is N or degree3 is N))


def _c5(ts: tuple[VertexType, ...]) -> bool:
    return all(t is ONE for t in ts)


def _c5_chord(ts: tuple[VertexType, ...]) -> bool:
    return ts[3] is ONE and ts[4] is ONE and all(t in ONE_K for t in ts[:3])


_C5_TWO_CHORDS = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3))


def _c5_two_chords(ts: tuple[VertexType, ...]) -> bool:
    if not all(t in ONE_K for t in ts[1:]):
        return False
    adjacent = {frozenset(e) for e in _C5_TWO_CHORDS}
    for i in range(5):
        for j in range(i + 1, 5):
            pair = {ts[i], ts[j]}
            if frozenset((i, j)) in adjacent:
                if pair == {K, N}:
                    return False
            elif ts[i] is K and ts[j] is K:
                return False
    return True


def _kite_pendant(ts: tuple[VertexType, ...]) -> bool:
    degree4, degree3, degree2_k, degree2_one, leaf = ts
    return (
        leaf is ONE
        and degree4 in ONE_K
        and degree3 in ONE_K
        and degree2_k is K
        and degree2_one is ONE
    )


def _kite(ts: tuple[VertexType, ...]) -> bool:
    degree3_n, degree3_other, degree2_k, degree2_one = ts
    return degree3_n is N and degree3_other in ONE_K and degree2_k is K and degree2_one is ONE


def _c4(ts: tuple[VertexType, ...]) -> bool:
    return ts[0] is K and ts[1] is K and ts[2] is ONE and ts[3] is ONE


def _wheel(ts: tuple[VertexType, ...]) -> bool:
    hub, rim_k_a, rim_k_b, rim_one_b, rim_one_a = ts
    return hub in ONE_K and rim_k_a is K and rim_k_b is K and rim_one_b is ONE and rim_one_a is ONE


def _blown_up(ts: tuple[VertexType, ...]) -> list[int]:
    return [i for i, t in enumerate(ts) if t is not ONE]


def _p4_few(ts: tuple[VertexType, ...]) -> bool:
    return len(_blown_up(ts)) <= 1


def _p4_adjacent_pair(ts: tuple[VertexType, ...]) -> bool:
    pair = _blown_up(ts)
    if len(pair) != 2 or pair[1] - pair[0] != 1:
        return False
    for x, y in (pair, pair[::-1]):
        if x in (0, 3) and ts[x] is K and ts[y] is not K:
            return False
    return True


def _p4_distance_two_pair(ts: tuple[VertexType, ...]) -> bool:
    pair = _blown_up(ts)
    return len(pair) == 2 and pair[1] - pair[0] == 2 and all(ts[i] is N for i in pair)


def _p4_three(ts: tuple[VertexType, ...]) -> bool:
    if len(_blown_up(ts)) != 3:
        return False
    return any(ts[i] in K_N and ts[i - 1] is N and ts[i + 1] is N for i in (1, 2))


def _p4_triangle(ts: tuple[VertexType, ...]) -> bool:
    end_a, cycle_a, cycle_b, end_b, apex = ts
    return end_a is ONE and end_b is ONE and all(t in ONE_K for t in (cycle_a, cycle_b, apex))


_P4 = ((0, 1), (1, 2), (2, 3))
_P4_ROLES = ("end_a", "inner_a", "inner_b", "end_b")


STRUCTURE_TEMPLATES: dict[StructureId, StructureTemplate] = {
    t.structure: t
    for t in (
        StructureTemplate(
            structure=StructureId.G1,
            roles=("v0", "v1", "v2"),
            edges=((0, 1), (1, 2), (0, 2)),
            predicate=_k3,
        ),
        StructureTemplate(
            structure=StructureId.G2,
            roles=("leaf_a", "center", "leaf_b"),
            edges=((0, 1), (1, 2)),
            predicate=_p3,
        ),
        StructureTemplate(
            structure=StructureId.G3,
            roles=("degree3", "degree2_n", "degree2_other", "leaf"),
            edges=((0, 1), (0, 2), (1, 2), (0, 3)),
            predicate=_paw,
        ),
        StructureTemplate(
            structure=StructureId.G4,
            roles=("c0", "c1", "c2", "c3", "c4"),
            edges=((0, 1), (1, 2), (2, 3), (3, 4), (4, 0)),
            predicate=_c5,
        ),
        StructureTemplate(
            structure=StructureId.G5,
            roles=("chord_a", "apex", "chord_b", "far_b", "far_a"),
            edges=((0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)),
            predicate=_c5_chord,
        ),
        StructureTemplate(
            structure=StructureId.G6,
            roles=("degree4", "rim_1", "rim_2", "rim_3", "rim_4"),
            edges=_C5_TWO_CHORDS,
            predicate=_c5_two_chords,
        ),
        StructureTemplate(
            structure=StructureId.G7,
            roles=("degree4", "degree3", "degree2_k", "degree2_one", "leaf"),
            edges=((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)),
            predicate=_kite_pendant,
        ),
        StructureTemplate(
            structure=StructureId.G8,
            roles=("degree3_n", "degree3_other", "degree2_k", "degree2_one"),
            edges=((0, 1), (0, 2), (0, 3), (1, 2), (1, 3)),
            predicate=_kite,
        ),
        StructureTemplate(
            structure=StructureId.G9,
            roles=("k_a", "k_b", "one_b", "one_a"),
            edges=((0, 1), (1, 2), (2, 3), (3, 0)),
            predicate=_c4,
        ),
        StructureTemplate(
            structure=StructureId.G10,
            roles=("hub", "rim_k_a", "rim_k_b", "rim_one_b", "rim_one_a"),
            edges=((1, 2), (2, 3), (3, 4), (4, 1), (0, 1), (0, 2), (0, 3), (0, 4)),
            predicate=_wheel,
        ),
        StructureTemplate(
            structure=StructureId.D3_P4A, roles=_P4_ROLES, edges=_P4, predicate=_p4_few
        ),
        StructureTemplate(
            structure=StructureId.D3_P4B, roles=_P4_ROLES, edges=_P4, predicate=_p4_adjacent_pair
        ),
        StructureTemplate(
            structure=StructureId.D3_P4C,
            roles=_P4_ROLES,
            edges=_P4,
            predicate=_p4_distance_two_pair,
        ),
        StructureTemplate(
            structure=StructureId.D3_P4D, roles=_P4_ROLES, edges=_P4, predicate=_p4_three
        ),
        StructureTemplate(
            structure=StructureId.D3_PPRIME,
            roles=("end_a", "cycle_a", "cycle_b", "end_b", "apex"),
            edges=((0, 1), (1, 2), (2, 3), (1, 4), (2, 4)),
            predicate=_p4_triangle,
        ),
    )
}


def match_template(template: StructureTemplate, td: TwinDecomposition) -> dict[str, int] | None:
    """
    Find an isomorphism template graph -> G* under which the types satisfy
    the template predicate.

    Permutations are tried in lexicographic order, so the witness is
    deterministic. Returns role name -> quotient vertex, or None.
    """
    k = len(template.roles)
    quotient = td.quotient
    if quotient.n != k or quotient.edge_count() != len(template.edges):
        return None
    shape = template.graph
    for image in permutations(range(k)):
        if any(
            shape.has_edge(i, j) != quotient.has_edge(image[i], image[j])
            for i in range(k)
            for j in range(i + 1, k)
        ):
            continue
        if template.admits(tuple(td.types[image[i]] for i in range(k))):
            return {role: image[i] for i, role in enumerate(template.roles)}
    return None
