"""Twin relation, twin graph G* and the quotient-metric propositions."""

import logging
from collections.abc import Sequence

from src.models.graph import UNREACHABLE, DistanceMatrix, Graph
from src.models.twin import TwinDecomposition, VertexType
from src.services.metrics import all_pairs_distances, diameter, require_connected
from src.utils.bitset import from_vertices, iter_bits
from src.utils.exceptions import PreconditionError, raise_graph_error, raise_invalid_vertex

logger = logging.getLogger(__name__)


def are_twins(g: Graph, u: int, v: int) -> bool:
    """True iff N(u) \\ {v} = N(v) \\ {u}; covers adjacent and non-adjacent twins."""
    for w in (u, v):
        if not 0 <= w < g.n:
            raise_invalid_vertex(w, g.n)
    if u == v:
        raise_graph_error(PreconditionError, "are_twins needs two distinct vertices", {"u": u})
    return g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u)


def _class_type(g: Graph, members: Sequence[int]) -> VertexType:
    if len(members) == 1:
        return VertexType.ONE
    mask = from_vertices(members)
    inside = [g.adj[u] & mask for u in members]
    if all(row == mask & ~(1 << u) for u, row in zip(members, inside)):
        return VertexType.K
    if not any(inside):
        return VertexType.N
    raise_graph_error(
        PreconditionError,
        f"twin class {list(members)} is not homogeneous",
        {"class": list(members)},
    )


def twin_decomposition(g: Graph) -> TwinDecomposition:
    """
    Partition V(G) into twin classes and build the twin graph.

    Classes are sorted and ordered by smallest member; quotient vertex i
    is class i, and u*v* is an edge iff u and v are adjacent in G.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[max(ru, rv)] = min(ru, rv)

    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    classes = sorted((tuple(members) for members in groups.values()), key=lambda c: c[0])

    class_of = [0] * g.n
    for index, members in enumerate(classes):
        for v in members:
            class_of[v] = index

    quotient_rows = [0] * len(classes)
    for i, members in enumerate(classes):
        for v in iter_bits(g.adj[members[0]]):
            if class_of[v] != i:
                quotient_rows[i] |= 1 << class_of[v]

    types = tuple(_class_type(g, members) for members in classes)
    logger.debug(f"twin classes {classes} with types {[t.value for t in types]}")

    return TwinDecomposition(
        graph=g,
        classes=tuple(classes),
        quotient=Graph(n=len(classes), adj=tuple(quotient_rows)),
        types=types,
        class_of=tuple(class_of),
    )


def shell(dm: DistanceMatrix, v: int, i: int) -> list[int]:
    """Γ_i(v): the vertices at distance exactly i from v, ascending."""
    if not 0 <= v < dm.n:
        raise_invalid_vertex(v, dm.n)
    return [u for u in range(dm.n) if dm.d[v][u] == i]


def quotient_distance_check(g: Graph, td: TwinDecomposition) -> bool:
    """
    Check diam(G*) <= diam(G) and d_G*(u*, v*) = d_G(u, v) for non-twins.

    Requires g connected and n >= 2.
    """
    require_connected(g, "quotient_distance_check")
    if g.n < 2:
        raise_graph_error(PreconditionError, "quotient_distance_check needs n >= 2", {"n": g.n})

    dm = all_pairs_distances(g)
    dq = all_pairs_distances(td.quotient)
    if diameter(td.quotient, dq) > diameter(g, dm):
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            cu, cv = td.class_of[u], td.class_of[v]
            if cu != cv and dq.d[cu][cv] != dm.d[u][v]:
                logger.warning(f"quotient distance mismatch for pair ({u}, {v})")
                return False
    return True


def quotient_dimension_bound(g: Graph) -> bool:
    """With t = n(G*) - β(G*), check β(G) <= n(G) - t."""
    from src.services.resolving import metric_dimension

    td = twin_decomposition(g)
    t = td.quotient.n - metric_dimension(td.quotient).beta
    return metric_dimension(g).beta <= g.n - t


def isometric_subgraph_bound(g: Graph, vertices: Sequence[int]) -> bool | None:
    """
    Distance-preserving subgraph bound.

    If H = G[vertices] keeps every distance of G and β(H) = n(H) - t,
    then β(G) <= n(G) - t. Returns None when H is disconnected or does
    not preserve distances, otherwise whether the bound holds.
    """
    from src.services.resolving import metric_dimension

    h = g.induced(vertices)
    dg = all_pairs_distances(g)
    dh = all_pairs_distances(h)
    for i, u in enumerate(vertices):
        for j, v in enumerate(vertices):
            if dh.d[i][j] == UNREACHABLE or dh.d[i][j] != dg.d[u][v]:
                return None
    t = h.n - metric_dimension(h).beta
    return metric_dimension(g).beta <= g.n - t
