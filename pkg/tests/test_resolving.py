"""Tests for representations, resolving sets and exact metric dimension."""

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.models.graph import Graph
from src.models.resolving import BasisResult
from src.services.builders import complete, complete_bipartite, cycle, empty, path, petersen
from src.services.canonical import connected_graphs
from src.services.graph6 import parse_graph6
from src.services.metrics import all_pairs_distances
from src.services.resolving import (
    forced_landmarks,
    is_resolving_set,
    metric_dimension,
    metric_dimension_naive,
    representation,
    resolves,
    verify_bounds,
)
from src.services.twins import twin_decomposition
from src.utils.exceptions import (
    DisconnectedGraphError,
    PreconditionError,
    SearchCapExceededError,
    VertexIndexError,
)
from tests.strategies import PROPERTY_SETTINGS, connected_graphs as connected_strategy


def test_representation_on_c5(c5: Graph):
    """r(v|W) lists distances in landmark order."""
    dm = all_pairs_distances(c5)
    assert representation(dm, 2, [0, 1]) == (2, 1)
    assert representation(dm, 4, [1, 0]) == (2, 1)


def test_representation_errors():
    """Bad vertices and disconnected graphs are rejected."""
    with pytest.raises(VertexIndexError):
        representation(all_pairs_distances(path(3)), 3, [0])
    with pytest.raises(DisconnectedGraphError):
        representation(all_pairs_distances(empty(2)), 0, [1])


def test_resolving_sets_on_c5(c5: Graph):
    """Two adjacent vertices resolve C_5, one vertex does not."""
    dm = all_pairs_distances(c5)
    assert is_resolving_set(dm, [0, 1])
    assert not is_resolving_set(dm, [0])
    assert resolves(dm, [0], [0, 1, 2])
    assert not resolves(dm, [0], [1, 4])


def test_forced_landmarks(k23: Graph):
    """Each class contributes all members but the lowest."""
    assert forced_landmarks(twin_decomposition(k23)) == [1, 3, 4]


@pytest.mark.parametrize(
    "g, beta, basis",
    [
        (cycle(5), 2, (0, 1)),
        (path(4), 1, (0,)),
        (complete(4), 3, (1, 2, 3)),
        (complete_bipartite(2, 3), 3, (1, 3, 4)),
    ],
)
def test_metric_dimension_examples(g: Graph, beta: int, basis: tuple[int, ...]):
    """Known values and the deterministic basis of the pruned search."""
    result = metric_dimension(g)
    assert result.beta == beta
    assert result.basis == basis


def test_point_values():
    """β(K_n) = n-1, β(P_n) = 1, β(K_{s,t}) = s+t-2, β(Petersen) = 3."""
    for n in range(2, 9):
        assert metric_dimension(complete(n)).beta == n - 1
    for n in range(2, 11):
        assert metric_dimension(path(n)).beta == 1
    for s in range(1, 5):
        for t in range(s, 5):
            if s + t >= 4:
                assert metric_dimension(complete_bipartite(s, t)).beta == s + t - 2
    assert metric_dimension(petersen()).beta == 3


def test_single_vertex_has_dimension_zero():
    """The empty set resolves K_1."""
    assert metric_dimension(complete(1)) == BasisResult(beta=0, basis=(), explored=1)


def test_naive_basis_is_lexicographic(c5: Graph):
    """Unpruned search returns the first resolving set in cardinality-lex order."""
    assert metric_dimension_naive(complete(4)).basis == (0, 1, 2)
    assert metric_dimension_naive(c5).basis == (0, 1)


def test_search_caps():
    """Caps come from settings unless given explicitly."""
    with pytest.raises(SearchCapExceededError, match="cap is 12"):
        metric_dimension_naive(path(13))
    with pytest.raises(SearchCapExceededError, match="cap is 4"):
        metric_dimension(path(5), cap=4)


def test_cap_from_environment(monkeypatch: pytest.MonkeyPatch):
    """METRIC_DIM_PRUNED_CAP lowers the pruned search cap."""
    from src.config import get_settings

    monkeypatch.setenv("METRIC_DIM_PRUNED_CAP", "5")
    get_settings.cache_clear()
    with pytest.raises(SearchCapExceededError):
        metric_dimension(path(6))


def test_disconnected_rejected():
    """Metric dimension needs a connected graph."""
    with pytest.raises(DisconnectedGraphError):
        metric_dimension(empty(3))
    with pytest.raises(DisconnectedGraphError):
        metric_dimension_naive(empty(3))


def test_verify_bounds_examples(c5: Graph):
    """Tight and slack bounds."""
    assert verify_bounds(complete(5), metric_dimension(complete(5)))
    assert verify_bounds(path(6), metric_dimension(path(6)))
    assert verify_bounds(c5, metric_dimension(c5))
    assert not verify_bounds(c5, BasisResult(beta=4, basis=(0, 1, 2, 3)))
    with pytest.raises(PreconditionError):
        verify_bounds(complete(1), metric_dimension(complete(1)))


def test_pruned_matches_naive_on_all_small_graphs():
    """Exhaustive over every connected graph with 2..6 vertices."""
    for n in range(2, 7):
        for form in connected_graphs(n):
            g = parse_graph6(form)
            pruned = metric_dimension(g)
            assert pruned.beta == metric_dimension_naive(g).beta, form
            assert verify_bounds(g, pruned), form


@pytest.mark.slow
def test_bounds_hold_at_order_seven():
    """n - n(G*) <= β <= n - diam(G) over all 853 connected graphs of order 7."""
    for form in connected_graphs(7):
        g = parse_graph6(form)
        assert verify_bounds(g, metric_dimension(g)), form


class TestResolvingProperties:
    @PROPERTY_SETTINGS
    @given(g=connected_strategy(min_n=2, max_n=8))
    def test_basis_resolves_and_is_minimum(self, g: Graph) -> None:
        result = metric_dimension(g)
        dm = all_pairs_distances(g)
        assert is_resolving_set(dm, result.basis)
        assert len(result.basis) == result.beta
        assert not any(
            is_resolving_set(dm, subset) for subset in combinations(range(g.n), result.beta - 1)
        )

    @PROPERTY_SETTINGS
    @given(g=connected_strategy(min_n=2, max_n=8))
    def test_basis_contains_all_but_one_of_each_twin_class(self, g: Graph) -> None:
        basis = set(metric_dimension(g).basis)
        for members in twin_decomposition(g).classes:
            assert len(basis & set(members)) >= len(members) - 1

    @PROPERTY_SETTINGS
    @given(g=connected_strategy(min_n=2, max_n=10), data=st.data())
    def test_supersets_of_resolving_sets_resolve(self, g: Graph, data: st.DataObject) -> None:
        dm = all_pairs_distances(g)
        basis = list(metric_dimension(g).basis)
        extra = data.draw(st.lists(st.integers(0, g.n - 1), max_size=g.n))
        assert is_resolving_set(dm, basis + extra)
