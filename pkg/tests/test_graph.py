import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nestgraphs.graph import (
    HUB,
    INFINITY,
    RIM,
    EdgeKind,
    GraphError,
    LabeledGraph,
    Spoke,
    canonical_cycle,
    cycles_through_edge,
    distance_profile,
    from_graph6,
    girth,
    is_bipartite,
    is_connected,
    neighbors,
    to_graph6,
    triangle_count,
    triangles_through_edge,
)


def small_graphs():
    return st.integers(2, 12).flatmap(
        lambda n: st.sets(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
            max_size=n * (n - 1) // 2,
        ).map(lambda es: (n, sorted({(min(e), max(e)) for e in es})))
    )


def test_from_edges_rejects_bad_input():
    with pytest.raises(GraphError):
        LabeledGraph.from_edges(3, [(0, 0, RIM)])
    with pytest.raises(GraphError):
        LabeledGraph.from_edges(3, [(0, 1, RIM), (1, 0, HUB)])
    with pytest.raises(GraphError):
        LabeledGraph.from_edges(3, [(0, 3, RIM)])
    with pytest.raises(GraphError):
        EdgeKind("spoke")


def test_labels_and_names(nest):
    g = nest(7, 1, 2, 4, 2)
    assert g.label(0, 1) == RIM
    assert g.label(7, 9) == HUB
    assert g.label(0, 7 + 4) == Spoke(4)
    assert g.vertex_name(9) == "v2"
    assert g.edge_count == 42
    with pytest.raises(GraphError):
        g.label(0, 3)
    with pytest.raises(GraphError):
        neighbors(g, 14)


def test_triangles_and_girth(nest):
    g = nest(4, 1, 2, 3, 1)  # K8 minus a perfect matching
    assert all(g.degree(x) == 6 for x in range(8))
    assert triangles_through_edge(g, 0, 1) == 4
    assert triangle_count(g) == 32
    assert girth(g) == 3
    assert girth(nest(36, 3, 10, 25, 17)) == 5
    assert girth(nest(108, 9, 34, 79, 53)) == 6
    assert girth(LabeledGraph.from_unlabeled(3, [(0, 1), (1, 2)])) == INFINITY


def test_bipartite(nest):
    assert is_bipartite(nest(10, 2, 4, 6, 3))
    assert not is_bipartite(nest(10, 2, 5, 7, 1))


@settings(max_examples=80, deadline=None)
@given(small_graphs())
def test_girth_bipartite_match_networkx(data):
    n, edges = data
    g = LabeledGraph.from_unlabeled(n, edges)
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    expected = nx.girth(h)
    assert girth(g) == (INFINITY if expected == float("inf") else expected)
    assert is_bipartite(g) == nx.is_bipartite(h)
    assert is_connected(g) == nx.is_connected(h)


@settings(max_examples=80, deadline=None)
@given(small_graphs())
def test_graph6_round_trip(data):
    n, edges = data
    g = LabeledGraph.from_unlabeled(n, edges)
    text = to_graph6(g)
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    assert text == nx.to_graph6_bytes(h, header=False).decode().strip()
    assert from_graph6(text).edges() == g.edges()


def test_graph6_large_size():
    g = LabeledGraph.from_unlabeled(100, [(i, i + 1) for i in range(99)])
    assert to_graph6(g)[0] == "~"
    assert from_graph6(">>graph6<<" + to_graph6(g)).edges() == g.edges()


def test_canonical_cycle():
    assert canonical_cycle([3, 1, 2]) == (1, 2, 3)
    assert canonical_cycle([1, 3, 2]) == (1, 2, 3)


def test_cycles_through_edge_counts(nest):
    g = nest(28, 1, 6, 19, 13)
    assert len(cycles_through_edge(g, (0, 1), 3)) == 1
    assert cycles_through_edge(g, (0, 1), 4) == []
    assert len(cycles_through_edge(g, (0, 1), 5)) == 5
    with pytest.raises(GraphError):
        cycles_through_edge(g, (0, 2), 3)


def test_distance_profile(nest):
    prof = distance_profile(nest(4, 1, 2, 3, 1), 0)
    assert prof == (1, 6, 1)
