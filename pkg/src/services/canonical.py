"""Canonical forms and ground-truth enumeration of small connected graphs."""

import logging
from functools import lru_cache
from itertools import combinations

from src.config import get_settings
from src.models.graph import Graph
from src.models.template import CanonicalForm
from src.services.graph6 import parse_graph6, to_graph6
from src.services.metrics import is_connected
from src.utils.bitset import iter_bits
from src.utils.exceptions import raise_cap_exceeded, raise_invalid_parameter

logger = logging.getLogger(__name__)


class _CanonicalSearch:
    """
    Branch-and-bound search for the relabeling with the smallest graph6.

    The graph6 payload is the sequence of columns j = 1..n-1, column j
    holding the bits of rows 0..j-1. With fixed column widths, comparing
    payloads is comparing the column values as a list of integers, so at
    each position only the candidates with the smallest column value can
    lead to the minimum.
    """

    def __init__(self, g: Graph) -> None:
        self.adj = g.adj
        self.n = g.n
        self.twins = [0] * g.n
        for u, v in combinations(range(g.n), 2):
            if g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u):
                self.twins[u] |= 1 << v
                self.twins[v] |= 1 << u
        self.best: list[int] | None = None
        self.best_order: list[int] = []
        self.nodes = 0

    def _column(self, v: int, order: list[int]) -> int:
        row = self.adj[v]
        depth = len(order)
        value = 0
        for i, u in enumerate(order):
            if row >> u & 1:
                value |= 1 << (depth - 1 - i)
        return value

    def run(self) -> list[int]:
        self._extend([], [], (1 << self.n) - 1)
        return self.best_order

    def _extend(self, order: list[int], columns: list[int], remaining: int) -> None:
        self.nodes += 1
        if not remaining:
            if self.best is None or columns < self.best:
                self.best = list(columns)
                self.best_order = list(order)
            return

        if order:
            values = {v: self._column(v, order) for v in iter_bits(remaining)}
            smallest = min(values.values())
            prefix = columns + [smallest]
            if self.best is not None and prefix > self.best[: len(prefix)]:
                return
            candidates = [v for v, value in values.items() if value == smallest]
        else:
            prefix = []
            candidates = list(iter_bits(remaining))

        tried = 0
        for v in candidates:
            # swapping two unplaced twins is an automorphism fixing the prefix
            if self.twins[v] & tried:
                continue
            tried |= 1 << v
            order.append(v)
            self._extend(order, prefix, remaining & ~(1 << v))
            order.pop()


def canonical_form(g: Graph, cap: int | None = None) -> CanonicalForm:
    """
    Lexicographically smallest graph6 string over all relabelings of g.

    Args:
        g: Any graph, connected or not
        cap: Vertex cap; defaults to settings.canonical_cap

    Returns:
        CanonicalForm equal for isomorphic graphs and distinct otherwise

    Raises:
        SearchCapExceededError: If n exceeds the cap
    """
    cap = cap if cap is not None else get_settings().canonical_cap
    if g.n > cap:
        raise_cap_exceeded("canonical_form", g.n, cap)
    search = _CanonicalSearch(g)
    order = search.run()
    logger.debug(f"canonical_form n={g.n}: {search.nodes} search nodes")
    return CanonicalForm(to_graph6(g.relabel(order)))


def _check_order(operation: str, n: int) -> None:
    if n < 1:
        raise_invalid_parameter(f"{operation} needs n >= 1, got {n}", {"n": n})
    cap = get_settings().verify_max_n
    if n > cap:
        raise_cap_exceeded(operation, n, cap)


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[CanonicalForm, ...]:
    if n == 1:
        return (canonical_form(Graph(n=1, adj=(0,))),)

    forms: set[CanonicalForm] = set()
    new_vertex = 1 << (n - 1)
    for parent in _connected_classes(n - 1):
        h = parse_graph6(parent)
        for neighbourhood in range(1, 1 << (n - 1)):
            rows = list(h.adj)
            for v in iter_bits(neighbourhood):
                rows[v] |= new_vertex
            rows.append(neighbourhood)
            forms.add(canonical_form(Graph(n=n, adj=tuple(rows))))
    logger.info(f"{len(forms)} connected graphs of order {n}")
    return tuple(sorted(forms))


def connected_graphs(n: int) -> list[CanonicalForm]:
    """
    All connected graphs of order n up to isomorphism, as sorted canonical forms.

    Every connected graph of order n >= 2 has a vertex whose removal
    leaves it connected, so extending each order-(n-1) class by one
    vertex with every non-empty neighbourhood reaches all classes.

    Raises:
        InvalidParameterError: If n < 1
        SearchCapExceededError: If n exceeds settings.verify_max_n
    """
    _check_order("connected_graphs", n)
    return list(_connected_classes(n))


def labeled_connected_graphs(n: int) -> list[CanonicalForm]:
    """
    Connected graphs of order n by sweeping all 2^C(n,2) labeled graphs.

    Slow beyond n = 6; kept as an independent check on connected_graphs.

    Raises:
        InvalidParameterError: If n < 1
        SearchCapExceededError: If n exceeds settings.verify_max_n
    """
    _check_order("labeled_connected_graphs", n)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    forms: set[CanonicalForm] = set()
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k in iter_bits(mask):
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        g = Graph(n=n, adj=tuple(rows))
        if is_connected(g):
            forms.add(canonical_form(g))
    return sorted(forms)
