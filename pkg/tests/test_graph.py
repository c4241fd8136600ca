import networkx as nx
import pytest
from hypothesis import given

from chordal_extremal.errors import DuplicateEdge, EdgeAbsent, EdgePresent, LoopEdge, VertexOutOfRange
from chordal_extremal.graph import (
    add_edge,
    complete_graph,
    cut_edges,
    delete_edge,
    disjoint_union,
    edge,
    empty_graph,
    from_edges,
    induced_subgraph,
    is_connected,
    join,
    min_degree,
    path_graph,
    validate,
)

from conftest import any_graphs, two_k3


def test_from_edges_path():
    g = from_edges(3, [(0, 1), (1, 2)])
    assert g.order == 3 and g.size == 2
    assert g.edges() == [(0, 1), (1, 2)]


def test_from_edges_single_vertex():
    g = from_edges(1, [])
    assert g.order == 1 and g.size == 0


def test_from_edges_k4():
    g = from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert g.size == 6
    assert g.degrees() == [3, 3, 3, 3]


def test_from_edges_normalizes():
    assert from_edges(3, [(2, 1), (1, 0)]) == from_edges(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize(
    "edges, exc",
    [
        ([(0, 3)], VertexOutOfRange),
        ([(-1, 0)], VertexOutOfRange),
        ([(1, 1)], LoopEdge),
        ([(0, 1), (1, 0)], DuplicateEdge),
    ],
)
def test_from_edges_errors(edges, exc):
    with pytest.raises(exc):
        from_edges(3, edges)


def test_edge_normalization():
    assert edge(5, 2) == (2, 5)
    with pytest.raises(LoopEdge):
        edge(3, 3)


@pytest.mark.parametrize(
    "g, expected",
    [(complete_graph(4), 3), (path_graph(3), 1), (two_k3(), 2), (empty_graph(3), 0)],
)
def test_min_degree(g, expected):
    assert min_degree(g) == expected


@pytest.mark.parametrize(
    "g, expected",
    [(two_k3(), False), (path_graph(3), True), (empty_graph(2), False), (empty_graph(1), True)],
)
def test_is_connected(g, expected):
    assert is_connected(g) is expected


def test_cut_edges_examples():
    assert cut_edges(path_graph(3)) == [(0, 1), (1, 2)]
    assert cut_edges(complete_graph(3)) == []
    assert cut_edges(add_edge(two_k3(), (2, 3))) == [(2, 3)]


def test_add_delete_examples():
    p = path_graph(3)
    assert add_edge(p, (0, 2)) == complete_graph(3)
    assert delete_edge(complete_graph(3), (0, 1)) == from_edges(3, [(0, 2), (1, 2)])
    k3 = complete_graph(3)
    assert add_edge(delete_edge(k3, (0, 1)), (1, 0)) == k3


def test_edits_leave_input_untouched():
    k3 = complete_graph(3)
    before = k3.edges()
    delete_edge(k3, (0, 1))
    assert k3.edges() == before


def test_edit_errors():
    with pytest.raises(EdgePresent):
        add_edge(complete_graph(3), (0, 1))
    with pytest.raises(EdgeAbsent):
        delete_edge(path_graph(3), (0, 2))


def test_join_and_union_examples():
    assert join(empty_graph(1), empty_graph(2)) == from_edges(3, [(0, 1), (0, 2)])
    u = disjoint_union(complete_graph(3), complete_graph(3))
    assert u == two_k3() and u.size == 6
    # K_{2k-n+2} v (K_{n-k-1} + K_{n-k-1}) at n=5, k=2
    n, k = 5, 2
    wing = complete_graph(n - k - 1)
    g = join(complete_graph(2 * k - n + 2), disjoint_union(wing, wing))
    assert g.order == 5 and g.size == 6


@given(any_graphs(), any_graphs())
def test_composition_sizes(g1, g2):
    u = disjoint_union(g1, g2)
    j = join(g1, g2)
    validate(u)
    validate(j)
    assert u.size == g1.size + g2.size
    assert j.size == g1.size + g2.size + g1.order * g2.order


@given(any_graphs())
def test_degree_sum(g):
    validate(g)
    assert sum(g.degrees()) == 2 * g.size


@given(any_graphs())
def test_cut_edges_match_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    assert cut_edges(g) == sorted(edge(*e) for e in nx.bridges(h))


def test_degree_sum_on_corpus(corpus):
    for g in corpus:
        validate(g)
        assert sum(g.degrees()) == 2 * g.size


def test_induced_subgraph_relabels():
    g = path_graph(4)
    h, keep = induced_subgraph(g, [3, 1, 2])
    assert keep == [1, 2, 3]
    assert h == path_graph(3)
