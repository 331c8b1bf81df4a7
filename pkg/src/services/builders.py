"""Constructors for the named graphs used throughout the characterization.

Vertex order of binary operations: first operand's vertices, then the
second's.
"""

from collections.abc import Sequence
from enum import Enum

from src.models.graph import Graph
from src.utils.exceptions import raise_invalid_parameter


class GraphKind(str, Enum):
    COMPLETE = "complete"
    EMPTY = "empty"
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE_BIPARTITE = "complete_bipartite"
    STAR = "star"
    PAW = "paw"
    DIAMOND = "diamond"
    WHEEL = "wheel"
    PETERSEN = "petersen"


def _require_positive(name: str, value: int, minimum: int = 1) -> None:
    if value < minimum:
        raise_invalid_parameter(f"{name} must be >= {minimum}, got {value}", {name: value})


def complete(n: int) -> Graph:
    _require_positive("n", n)
    full = (1 << n) - 1
    return Graph(n=n, adj=tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    _require_positive("n", n)
    return Graph(n=n, adj=(0,) * n)


def path(n: int) -> Graph:
    _require_positive("n", n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require_positive("n", n, 3)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union G ∪ H."""
    shifted = tuple(row << g.n for row in h.adj)
    return Graph(n=g.n + h.n, adj=g.adj + shifted)


def join(g: Graph, h: Graph) -> Graph:
    """Join G ∨ H: the disjoint union plus every edge between G and H."""
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = tuple(row | h_mask for row in g.adj) + tuple((row << g.n) | g_mask for row in h.adj)
    return Graph(n=g.n + h.n, adj=rows)


def complete_bipartite(s: int, t: int) -> Graph:
    _require_positive("s", s)
    _require_positive("t", t)
    return join(empty(s), empty(t))


def star(t: int) -> Graph:
    return complete_bipartite(1, t)


def paw() -> Graph:
    """Triangle with a pendant edge: hub 0, triangle pair 1-2, leaf 3."""
    return join(complete(1), union(complete(2), complete(1)))


def diamond() -> Graph:
    """K_4 minus an edge (the kite); 0-1 is the missing edge."""
    return join(empty(2), complete(2))


def wheel() -> Graph:
    """C_4 ∨ K_1: rim 0..3 in cycle order, hub 4."""
    return join(cycle(4), complete(1))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def build(kind: GraphKind | str, params: Sequence[int] = ()) -> Graph:
    """
    Build a named graph.

    Args:
        kind: GraphKind or its string value
        params: Integer parameters: n for complete/empty/path/cycle,
            (s, t) for complete_bipartite, t for star, none otherwise

    Raises:
        InvalidParameterError: Unknown kind, wrong arity or non-positive size
    """
    try:
        kind = GraphKind(kind)
    except ValueError:
        raise_invalid_parameter(f"unknown graph kind {kind!r}", {"kind": str(kind)})

    arity = {
        GraphKind.COMPLETE: 1,
        GraphKind.EMPTY: 1,
        GraphKind.PATH: 1,
        GraphKind.CYCLE: 1,
        GraphKind.COMPLETE_BIPARTITE: 2,
        GraphKind.STAR: 1,
    }.get(kind, 0)
    if len(params) != arity:
        raise_invalid_parameter(
            f"{kind.value} takes {arity} parameter(s), got {len(params)}",
            {"kind": kind.value},
        )

    if kind is GraphKind.COMPLETE:
        return complete(params[0])
    if kind is GraphKind.EMPTY:
        return empty(params[0])
    if kind is GraphKind.PATH:
        return path(params[0])
    if kind is GraphKind.CYCLE:
        return cycle(params[0])
    if kind is GraphKind.COMPLETE_BIPARTITE:
        return complete_bipartite(params[0], params[1])
    if kind is GraphKind.STAR:
        return star(params[0])
    if kind is GraphKind.PAW:
        return paw()
    if kind is GraphKind.DIAMOND:
        return diamond()
    if kind is GraphKind.WHEEL:
        return wheel()
    return petersen()
