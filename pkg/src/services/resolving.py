"""Representations, resolving sets and exact metric dimension."""

import logging
from collections.abc import Iterable, Sequence
from itertools import combinations

from src.config import get_settings
from src.models.graph import DistanceMatrix, Graph
from src.models.resolving import BasisResult, Representation
from src.models.twin import TwinDecomposition
from src.services.metrics import all_pairs_distances, diameter, require_connected
from src.services.twins import twin_decomposition
from src.utils.exceptions import (
    PreconditionError,
    raise_cap_exceeded,
    raise_disconnected,
    raise_graph_error,
    raise_invalid_vertex,
)

logger = logging.getLogger(__name__)


def representation(dm: DistanceMatrix, v: int, landmarks: Sequence[int]) -> Representation:
    """r(v|W): the distances from v to each landmark, in landmark order."""
    if not dm.connected:
        raise_disconnected("representation", dm.n)
    for w in (v, *landmarks):
        if not 0 <= w < dm.n:
            raise_invalid_vertex(w, dm.n)
    row = dm.d[v]
    return tuple(row[w] for w in landmarks)


def resolves(dm: DistanceMatrix, landmarks: Sequence[int], targets: Iterable[int]) -> bool:
    """True iff the vertices in targets have pairwise distinct representations."""
    vectors = sorted(tuple(dm.d[v][w] for w in landmarks) for v in targets)
    return all(a != b for a, b in zip(vectors, vectors[1:]))


def is_resolving_set(dm: DistanceMatrix, landmarks: Iterable[int]) -> bool:
    """
    True iff W resolves G.

    Only V \\ W needs checking: a landmark w is the one vertex at
    distance 0 from itself.
    """
    ordered = sorted(set(landmarks))
    chosen = set(ordered)
    return resolves(dm, ordered, (v for v in range(dm.n) if v not in chosen))


def forced_landmarks(td: TwinDecomposition) -> list[int]:
    """Each twin class minus its lowest-index member; every resolving set holds |v*|-1 of v*."""
    return sorted(v for members in td.classes for v in members[1:])


def metric_dimension_naive(g: Graph, cap: int | None = None) -> BasisResult:
    """
    Exact metric dimension by testing every vertex subset.

    Subsets are tried by ascending cardinality, lexicographically within
    a cardinality; the first resolving one is the basis.

    Raises:
        DisconnectedGraphError: If g is not connected
        SearchCapExceededError: If n exceeds the cap (default naive_cap)
    """
    cap = cap if cap is not None else get_settings().naive_cap
    if g.n > cap:
        raise_cap_exceeded("metric_dimension_naive", g.n, cap)
    require_connected(g, "metric_dimension_naive")

    dm = all_pairs_distances(g)
    explored = 0
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            explored += 1
            if is_resolving_set(dm, subset):
                return BasisResult(beta=k, basis=subset, explored=explored)
    raise AssertionError("V(G) always resolves G")


def metric_dimension(g: Graph, cap: int | None = None) -> BasisResult:
    """
    Exact metric dimension with twin-based pruning.

    Every resolving set holds all but at most one vertex of each twin
    class, and the excluded vertex can be swapped for any class member.
    So the search fixes M = forced_landmarks and only chooses among the
    class representatives (lowest index of each class).

    Raises:
        DisconnectedGraphError: If g is not connected
        SearchCapExceededError: If n exceeds the cap (default pruned_cap)
    """
    cap = cap if cap is not None else get_settings().pruned_cap
    if g.n > cap:
        raise_cap_exceeded("metric_dimension", g.n, cap)
    require_connected(g, "metric_dimension")

    dm = all_pairs_distances(g)
    td = twin_decomposition(g)
    forced = forced_landmarks(td)
    representatives = [members[0] for members in td.classes]
    logger.debug(
        f"metric_dimension n={g.n}: {len(forced)} forced, {len(representatives)} representatives"
    )

    explored = 0
    for k in range(len(representatives) + 1):
        for subset in combinations(representatives, k):
            explored += 1
            candidate = forced + list(subset)
            if is_resolving_set(dm, candidate):
                return BasisResult(
                    beta=len(candidate), basis=tuple(sorted(candidate)), explored=explored
                )
    raise AssertionError("V(G) always resolves G")


def verify_bounds(g: Graph, result: BasisResult) -> bool:
    """
    Check n - n(G*) <= β <= n - diam(G) and 1 <= β <= n - 1.

    Raises:
        DisconnectedGraphError: If g is not connected
        PreconditionError: If n < 2
    """
    if g.n < 2:
        raise_graph_error(PreconditionError, "verify_bounds needs n >= 2", {"n": g.n})
    td = twin_decomposition(g)
    n = g.n
    return (
        n - td.quotient.n <= result.beta <= n - diameter(g)
        and 1 <= result.beta <= n - 1
    )
