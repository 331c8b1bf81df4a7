"""Breadth-first metric computations over bitset adjacency."""

from src.models.graph import UNREACHABLE, DistanceMatrix, Graph
from src.utils.bitset import iter_bits
from src.utils.exceptions import raise_disconnected


def _bfs_layers(g: Graph, source: int) -> list[int]:
    """Hop counts from source; frontier expansion ORs neighbourhood bitsets."""
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    depth = 0
    while frontier:
        depth += 1
        reached = 0
        for u in iter_bits(frontier):
            reached |= g.adj[u]
        frontier = reached & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = depth
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; pairs in different components are UNREACHABLE."""
    return DistanceMatrix(n=g.n, d=tuple(tuple(_bfs_layers(g, v)) for v in range(g.n)))


def is_connected(g: Graph) -> bool:
    """True iff one BFS from vertex 0 reaches all n vertices."""
    full = (1 << g.n) - 1
    seen = 1
    frontier = 1
    while frontier:
        reached = 0
        for u in iter_bits(frontier):
            reached |= g.adj[u]
        frontier = reached & ~seen
        seen |= frontier
    return seen == full


def require_connected(g: Graph, operation: str) -> None:
    if not is_connected(g):
        raise_disconnected(operation, g.n)


def diameter(g: Graph, dm: DistanceMatrix | None = None) -> int:
    """
    Largest distance between two vertices.

    Raises:
        DisconnectedGraphError: If g is not connected
    """
    dm = dm or all_pairs_distances(g)
    if not dm.connected:
        raise_disconnected("diameter", g.n)
    return dm.max_finite()
