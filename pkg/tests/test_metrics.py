"""Tests for BFS distances, connectivity and diameter."""

import networkx as nx
import pytest
from hypothesis import given

from src.models.graph import UNREACHABLE, Graph
from src.services.builders import complete, cycle, empty, path, petersen, union
from src.services.metrics import all_pairs_distances, diameter, is_connected
from src.utils.exceptions import DisconnectedGraphError
from tests.strategies import PROPERTY_SETTINGS, connected_graphs, graphs


def test_path_distances():
    """d(i, j) = |i - j| on a path."""
    dm = all_pairs_distances(path(5))
    assert dm.d[0] == (0, 1, 2, 3, 4)
    assert dm.distance(3, 1) == 2
    assert dm.connected


def test_disconnected_distances_marked():
    """Pairs in different components are UNREACHABLE."""
    dm = all_pairs_distances(union(complete(2), complete(1)))
    assert dm.d[0] == (0, 1, UNREACHABLE)
    assert not dm.connected


def test_connectivity():
    """Single vertex is connected; empty graphs on 2+ vertices are not."""
    assert is_connected(complete(1))
    assert is_connected(cycle(6))
    assert not is_connected(empty(2))


def test_diameter_values():
    """Known diameters."""
    assert diameter(complete(1)) == 0
    assert diameter(complete(4)) == 1
    assert diameter(cycle(7)) == 3
    assert diameter(path(6)) == 5
    assert diameter(petersen()) == 2


def test_diameter_requires_connected():
    """Disconnected graphs have no diameter."""
    with pytest.raises(DisconnectedGraphError, match="diameter requires a connected graph"):
        diameter(empty(3))


def _to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class TestMetricProperties:
    @PROPERTY_SETTINGS
    @given(g=graphs(max_n=9))
    def test_distances_match_networkx(self, g: Graph) -> None:
        reference = dict(nx.all_pairs_shortest_path_length(_to_networkx(g)))
        dm = all_pairs_distances(g)
        for u in range(g.n):
            for v in range(g.n):
                assert dm.d[u][v] == reference[u].get(v, UNREACHABLE)

    @PROPERTY_SETTINGS
    @given(g=graphs(max_n=9))
    def test_connectivity_matches_networkx(self, g: Graph) -> None:
        assert is_connected(g) == nx.is_connected(_to_networkx(g))

    @PROPERTY_SETTINGS
    @given(g=connected_graphs(max_n=9))
    def test_diameter_matches_networkx(self, g: Graph) -> None:
        assert diameter(g) == nx.diameter(_to_networkx(g))
