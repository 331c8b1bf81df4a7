"""Structural decision procedures for β ∈ {1, n-1, n-2, n-3}.

Routing for n-3: β(G) <= n - diam(G) leaves diameters 2 and 3 (diameter
1 is K_n). Diameter 2 is decided by the ten twin-graph structures G1-G10,
diameter 3 by the P_4 cases and the P_4-with-triangle case.
"""

import logging

from src.models.graph import Graph
from src.models.structure import (
    DIAMETER_2_STRUCTURES,
    DIAMETER_3_STRUCTURES,
    Classification,
    StructureId,
    StructureMatch,
)
from src.models.twin import TwinDecomposition
from src.services.metrics import diameter, require_connected
from src.services.structures import STRUCTURE_TEMPLATES, match_template
from src.services.twins import twin_decomposition
from src.utils.bitset import from_vertices, popcount
from src.utils.exceptions import PreconditionError, raise_graph_error

logger = logging.getLogger(__name__)


def is_path(g: Graph) -> bool:
    """Connected, n-1 edges, two leaves and every other vertex of degree 2."""
    require_connected(g, "is_path")
    if g.n == 1:
        return True
    degrees = g.degrees()
    return (
        g.edge_count() == g.n - 1
        and degrees.count(1) == 2
        and degrees.count(2) == g.n - 2
    )


def is_complete(g: Graph) -> bool:
    require_connected(g, "is_complete")
    return all(d == g.n - 1 for d in g.degrees())


def match_n_minus_2(g: Graph) -> StructureMatch | None:
    """
    Recognize the n-2 families constructively.

    K_{s,t} (s,t >= 1) by a complete-bipartite test; K_s ∨ ~K_t (t >= 2)
    and K_s ∨ (K_t ∪ K_1) (t >= 1) by splitting off the universal
    vertices and inspecting what remains.

    Raises:
        PreconditionError: If n < 4
        DisconnectedGraphError: If g is not connected
    """
    require_connected(g, "match_n_minus_2")
    if g.n < 4:
        raise_graph_error(PreconditionError, "match_n_minus_2 needs n >= 4", {"n": g.n})
    predicted = g.n - 2

    if g.is_bipartite_complete():
        s, t = sorted((popcount(g.adj[0]), g.n - popcount(g.adj[0])))
        return StructureMatch(
            structure=StructureId.NM2_KST,
            predicted_beta=predicted,
            params={"s": s, "t": t},
        )

    universal = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    rest = [v for v in range(g.n) if g.degree(v) != g.n - 1]
    if not universal or not rest:
        return None
    rest_mask = from_vertices(rest)
    inner = {v: g.adj[v] & rest_mask for v in rest}

    if len(rest) >= 2 and not any(inner.values()):
        return StructureMatch(
            structure=StructureId.NM2_JOIN_EMPTY,
            predicted_beta=predicted,
            params={"s": len(universal), "t": len(rest)},
        )

    isolated = [v for v in rest if not inner[v]]
    if len(isolated) == 1:
        clique_mask = rest_mask & ~(1 << isolated[0])
        if all(inner[v] == clique_mask & ~(1 << v) for v in rest if v != isolated[0]):
            return StructureMatch(
                structure=StructureId.NM2_JOIN_KT_K1,
                predicted_beta=predicted,
                params={"s": len(universal), "t": len(rest) - 1},
            )
    return None


def _match_structures(
    td: TwinDecomposition, structures: tuple[StructureId, ...]
) -> StructureMatch | None:
    for structure in structures:
        roles = match_template(STRUCTURE_TEMPLATES[structure], td)
        if roles is not None:
            return StructureMatch(
                structure=structure, predicted_beta=td.graph.n - 3, roles=roles
            )
    return None


def _require_diameter(td: TwinDecomposition, expected: int, operation: str) -> None:
    actual = diameter(td.graph)
    if actual != expected:
        raise_graph_error(
            PreconditionError,
            f"{operation} needs diameter {expected}, got {actual}",
            {"diameter": actual},
        )


def match_diam2_structure(td: TwinDecomposition) -> StructureMatch | None:
    """
    Match G* against G1-G10 for a graph of diameter exactly 2.

    Raises:
        PreconditionError: If diam(G) != 2
    """
    _require_diameter(td, 2, "match_diam2_structure")
    return _match_structures(td, DIAMETER_2_STRUCTURES)


def match_diam3_structure(td: TwinDecomposition) -> StructureMatch | None:
    """
    Match G* against the P_4 cases and P'_{4,2} for diameter exactly 3.

    Raises:
        PreconditionError: If diam(G) != 3
    """
    _require_diameter(td, 3, "match_diam3_structure")
    return _match_structures(td, DIAMETER_3_STRUCTURES)


def classify(g: Graph) -> Classification:
    """
    Collect every characterization g matches with its predicted β.

    PATH predicts 1, COMPLETE n-1, the n-2 families n-2 (n >= 4) and the
    n-3 structures n-3. Coinciding predictions (P_4 is both PATH and
    D3_P4a) are kept; disagreeing ones make the result inconsistent.

    Raises:
        DisconnectedGraphError: If g is not connected
        PreconditionError: If n < 2
    """
    require_connected(g, "classify")
    if g.n < 2:
        raise_graph_error(PreconditionError, "classify needs n >= 2", {"n": g.n})

    matches: list[StructureMatch] = []
    if is_path(g):
        matches.append(StructureMatch(structure=StructureId.PATH, predicted_beta=1))
    if is_complete(g):
        matches.append(StructureMatch(structure=StructureId.COMPLETE, predicted_beta=g.n - 1))
    if g.n >= 4:
        family = match_n_minus_2(g)
        if family is not None:
            matches.append(family)

        td = twin_decomposition(g)
        diam = diameter(g)
        structure = None
        if diam == 2:
            structure = match_diam2_structure(td)
        elif diam == 3:
            structure = match_diam3_structure(td)
        if structure is not None:
            matches.append(structure)

    result = Classification(n=g.n, matches=tuple(matches))
    if not result.consistent:
        logger.warning(
            f"inconsistent predictions for n={g.n}: "
            f"{[(m.structure.value, m.predicted_beta) for m in matches]}"
        )
    return result
