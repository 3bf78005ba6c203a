import pytest
from hypothesis import given, strategies as st

from graph.generators import clique, cycle, empty
from graph.side_info_graph import (
    SideInfoGraph,
    complement,
    disjoint_union,
    induced,
    join,
    out_neighborhood,
    partial_clique_deficiency,
)
from tests.strategies import graphs
from utils.exceptions import InputException


@given(graphs(max_n=12))
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g


@given(graphs(max_n=8))
def test_complement_has_exactly_the_missing_arcs(g):
    h = complement(g)
    for i in range(g.n):
        for j in range(g.n):
            if i != j:
                assert h.has_arc(i, j) != g.has_arc(i, j)


def test_induced_relabels_in_order():
    sub = induced(cycle(5, directed=True), [1, 2, 4])
    assert sub.n == 3
    assert sub.arcs() == [(0, 1)]


def test_induced_rejects_out_of_range(c5):
    with pytest.raises(InputException):
        induced(c5, [0, 5])


def test_out_neighborhood(directed_c3):
    assert out_neighborhood(directed_c3, 2) == (0,)
    with pytest.raises(InputException):
        out_neighborhood(directed_c3, 3)


def test_deficiency_examples(directed_c3, k4, c5):
    assert partial_clique_deficiency(k4, range(4)) == 0
    assert partial_clique_deficiency(directed_c3, range(3)) == 1
    assert partial_clique_deficiency(c5, range(5)) == 2
    assert partial_clique_deficiency(empty(4), range(4)) == 3


def test_deficiency_of_empty_set_is_undefined(c5):
    with pytest.raises(InputException):
        partial_clique_deficiency(c5, [])


@given(graphs(max_n=7))
def test_deficiency_zero_iff_bidirected_clique(g):
    is_clique = all(g.has_arc(i, j) for i in range(g.n) for j in range(g.n) if i != j)
    assert (partial_clique_deficiency(g, range(g.n)) == 0) == is_clique


@given(graphs(min_n=2, max_n=7), st.data())
def test_deficiency_never_grows_when_arcs_are_added(g, data):
    missing = [(i, j) for i in range(g.n) for j in range(g.n) if i != j and not g.has_arc(i, j)]
    if not missing:
        return
    extra = data.draw(st.sampled_from(missing))
    h = SideInfoGraph.from_arcs(g.n, g.arcs() + [extra])
    subset = data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, unique=True))
    assert partial_clique_deficiency(h, subset) <= partial_clique_deficiency(g, subset)


def test_edge_counts(c5, directed_c3):
    assert c5.is_undirected and c5.edge_count == 5
    assert not directed_c3.is_undirected and directed_c3.edge_count == 3
    assert c5.max_degree == 2


def test_invalid_graphs_are_rejected():
    with pytest.raises(InputException):
        SideInfoGraph.from_arcs(3, [(0, 0)])
    with pytest.raises(InputException):
        SideInfoGraph.from_arcs(3, [(0, 3)])
    with pytest.raises(InputException):
        empty(65)


def test_vertex_limit_follows_settings(monkeypatch):
    monkeypatch.setenv("ICX_MAX_VERTICES", "4")
    with pytest.raises(InputException):
        clique(5)


def test_join_and_union():
    g = join(cycle(3, directed=True), clique(2), mutual=False)
    assert g.has_arc(0, 3) and not g.has_arc(3, 0)
    u = disjoint_union(clique(2), clique(2))
    assert u.edges() == [(0, 1), (2, 3)]


def test_networkx_view(c5, directed_c3):
    assert c5.to_networkx().number_of_edges() == 5
    assert directed_c3.to_networkx().is_directed()
