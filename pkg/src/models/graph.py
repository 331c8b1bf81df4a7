"""Graph and distance-matrix models."""

import sys
from collections.abc import Iterable, Sequence

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

from pydantic import Field, model_validator

from src.models.base import DomainModel
from src.utils.bitset import iter_bits

UNREACHABLE = -1


class Graph(DomainModel):
    """Simple undirected graph on vertices 0..n-1.

    adj[u] is a bitset: bit v is set iff uv is an edge. Disconnected
    graphs are representable; operations that need connectivity check it.
    """

    n: int = Field(..., ge=1, description="Vertex count")
    adj: tuple[int, ...] = Field(..., description="Per-vertex neighbourhood bitsets")

    @model_validator(mode="after")
    def check_simple(self) -> Self:
        """Reject loops, asymmetric rows and bits beyond n."""
        if len(self.adj) != self.n:
            raise ValueError(f"adj has {len(self.adj)} rows, expected {self.n}")
        limit = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row < 0 or row & ~limit:
                raise ValueError(f"row {u} references vertices outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"edge {u}-{v} is not symmetric")
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list over 0..n-1."""
        rows = [0] * n
        for u, v in edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n=n, adj=tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def is_bipartite_complete(self) -> bool:
        """True iff G is K_{s,t} with s, t >= 1; the parts are N(0) and its complement."""
        side_b = self.adj[0]
        side_a = ((1 << self.n) - 1) & ~side_b
        if not side_b:
            return False
        return all(
            row == (side_b if side_a >> v & 1 else side_a) for v, row in enumerate(self.adj)
        )

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertices[i] becomes vertex i."""
        position = {v: i for i, v in enumerate(vertices)}
        edges = [
            (position[u], position[v])
            for u in vertices
            for v in iter_bits(self.adj[u])
            if v in position and position[u] < position[v]
        ]
        return Graph.from_edges(len(vertices), edges)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex i is the original vertex order[i]."""
        return self.induced(order)


class DistanceMatrix(DomainModel):
    """All-pairs hop counts; UNREACHABLE marks pairs in different components."""

    n: int = Field(..., ge=1)
    d: tuple[tuple[int, ...], ...]

    def distance(self, u: int, v: int) -> int:
        return self.d[u][v]

    @property
    def connected(self) -> bool:
        return all(x != UNREACHABLE for x in self.d[0])

    def max_finite(self) -> int:
        return max(max(x for x in row if x != UNREACHABLE) for row in self.d)
