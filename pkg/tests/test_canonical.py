"""Tests for canonical forms and connected-graph enumeration."""

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.models.graph import Graph
from src.services.builders import complete, cycle, path, petersen, star
from src.services.canonical import canonical_form, connected_graphs, labeled_connected_graphs
from src.services.graph6 import parse_graph6
from src.utils.exceptions import InvalidParameterError, SearchCapExceededError
from tests.strategies import PROPERTY_SETTINGS, graphs


def test_isomorphic_labelings_agree():
    """Relabeled paths and cycles share one form."""
    assert canonical_form(path(4)) == canonical_form(path(4).relabel([2, 0, 3, 1]))
    assert canonical_form(cycle(6)) == canonical_form(cycle(6).relabel([0, 2, 4, 1, 3, 5]))


def test_non_isomorphic_graphs_differ():
    """P_4 and K_{1,3} have the same size but different forms."""
    assert canonical_form(path(4)) != canonical_form(star(3))
    assert canonical_form(cycle(6)) != canonical_form(path(6))


def test_form_decodes_to_isomorphic_graph():
    """Parsing a form gives a graph with the same form."""
    form = canonical_form(petersen())
    g = parse_graph6(form)
    assert g.n == 10
    assert g.edge_count() == 15
    assert canonical_form(g) == form


def test_complete_graph_form():
    """K_n has a single labeling."""
    assert canonical_form(complete(4)) == "C~"
    assert canonical_form(complete(1)) == "@"


def test_canonical_cap():
    """Explicit and configured caps."""
    with pytest.raises(SearchCapExceededError):
        canonical_form(path(5), cap=4)
    with pytest.raises(SearchCapExceededError):
        canonical_form(path(11))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_connected_counts(n: int, count: int):
    """Known numbers of connected graphs up to isomorphism."""
    forms = connected_graphs(n)
    assert len(forms) == count
    assert forms == sorted(set(forms))


@pytest.mark.slow
def test_connected_count_order_seven():
    assert len(connected_graphs(7)) == 853


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_extension_matches_labeled_sweep(n: int):
    """One-vertex extension reaches every class the full sweep finds."""
    assert connected_graphs(n) == labeled_connected_graphs(n)


def _atlas_forms(n: int) -> set[str]:
    forms = set()
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n and nx.is_connected(h):
            forms.add(canonical_form(Graph.from_edges(n, list(h.edges()))))
    return forms


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_connected_graphs_match_networkx_atlas(n: int):
    """Same classes as the networkx atlas of small graphs."""
    assert set(connected_graphs(n)) == _atlas_forms(n)


@pytest.mark.slow
def test_connected_graphs_match_networkx_atlas_order_seven():
    assert set(connected_graphs(7)) == _atlas_forms(7)


def test_order_errors():
    """n < 1 is invalid; n above verify_max_n is capped."""
    with pytest.raises(InvalidParameterError, match="n >= 1"):
        connected_graphs(0)
    with pytest.raises(SearchCapExceededError):
        connected_graphs(8)


class TestCanonicalProperties:
    @PROPERTY_SETTINGS
    @given(g=graphs(max_n=8), data=st.data())
    def test_invariant_under_relabeling(self, g: Graph, data: st.DataObject) -> None:
        order = data.draw(st.permutations(list(range(g.n))))
        assert canonical_form(g.relabel(order)) == canonical_form(g)

    @PROPERTY_SETTINGS
    @given(g=graphs(max_n=7))
    def test_form_is_a_relabeling(self, g: Graph) -> None:
        h = parse_graph6(canonical_form(g))
        assert h.n == g.n
        assert sorted(h.degrees()) == sorted(g.degrees())
        gm = nx.Graph(g.edges())
        gm.add_nodes_from(range(g.n))
        hm = nx.Graph(h.edges())
        hm.add_nodes_from(range(h.n))
        assert nx.is_isomorphic(gm, hm)
