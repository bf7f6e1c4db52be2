import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from nestgraphs import kernels
from nestgraphs.autgroup import (
    are_isomorphic,
    automorphism_group,
    canonical_form,
    orbits,
    search,
    stabilizer_order,
    vertex_invariants,
)
from nestgraphs.bicirculant import NestParams, build, is_automorphism
from nestgraphs.graph import LabeledGraph

from .test_graph import small_graphs


def relabel(g, perm):
    return LabeledGraph.from_unlabeled(g.vertex_count, [(perm[x], perm[y]) for x, y in g.edge_labels])


@pytest.mark.parametrize(
    "t, order",
    [
        ((7, 1, 2, 4, 2), 7),
        ((4, 1, 2, 3, 1), 384),
        ((5, 1, 2, 3, 2), 120),
        ((28, 1, 6, 19, 13), 168),
        ((12, 1, 3, 10, 5), 144),
    ],
)
def test_group_orders(nest, t, order):
    g = nest(*t)
    grp = automorphism_group(g)
    assert grp.order == order
    assert all(is_automorphism(g, p) for p in grp.generators)
    assert grp.order % t[0] == 0


def test_orbit_examples(nest):
    g = nest(7, 1, 2, 4, 2)
    assert orbits(automorphism_group(g), "vertices", g) == [list(range(7)), list(range(7, 14))]
    g = nest(28, 1, 6, 19, 13)
    grp = automorphism_group(g)
    assert len(orbits(grp, "edges", g)) == 1
    assert len(orbits(grp, "arcs", g)) == 2
    g = nest(12, 1, 3, 10, 5)
    assert len(orbits(automorphism_group(g), "arcs", g)) == 1
    with pytest.raises(ValueError):
        orbits(grp, "faces", nest(28, 1, 6, 19, 13))


@pytest.mark.parametrize("t, stab", [((8, 1, 3, 4, 3), 72), ((36, 3, 10, 25, 17), 3), ((7, 1, 2, 4, 2), 1)])
def test_stabilizer_examples(nest, t, stab):
    assert stabilizer_order(automorphism_group(nest(*t)), 0) == stab


def test_orbit_stabilizer_all_vertices(nest):
    g = nest(10, 2, 5, 7, 1)
    grp = automorphism_group(g)
    for x in range(g.vertex_count):
        assert len(grp.orbit(x)) * stabilizer_order(grp, x) == grp.order


def test_canonical_form_examples(nest):
    assert canonical_form(nest(28, 1, 6, 19, 13)) == canonical_form(nest(28, 1, 19, 6, 13))
    k8 = LabeledGraph.from_unlabeled(8, [(i, j) for i in range(8) for j in range(i + 1, 8) if j != i + 4])
    assert canonical_form(nest(4, 1, 2, 3, 1)) == canonical_form(k8)
    assert canonical_form(nest(8, 1, 3, 4, 3)) != canonical_form(nest(8, 1, 2, 5, 3))
    assert are_isomorphic(nest(28, 1, 6, 19, 13), nest(28, 1, 19, 6, 13))


def test_certificate_relabel_invariance(nest):
    rng = random.Random(7)
    for t in [(28, 1, 6, 19, 13), (12, 1, 3, 10, 5), (30, 2, 15, 17, 1)]:
        g = nest(*t)
        cert = canonical_form(g)
        for _ in range(5):
            perm = list(range(g.vertex_count))
            rng.shuffle(perm)
            assert canonical_form(relabel(g, perm)) == cert


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_group_order_matches_networkx(data):
    n, edges = data
    if n > 9:
        return
    g = LabeledGraph.from_unlabeled(n, edges)
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    count = sum(1 for _ in GraphMatcher(h, h).isomorphisms_iter())
    assert automorphism_group(g).order == count


@settings(max_examples=60, deadline=None)
@given(small_graphs(), small_graphs())
def test_certificate_equality_is_isomorphism(a, b):
    ga = LabeledGraph.from_unlabeled(*a)
    gb = LabeledGraph.from_unlabeled(*b)
    ha, hb = nx.Graph(), nx.Graph()
    ha.add_nodes_from(range(a[0]))
    ha.add_edges_from(a[1])
    hb.add_nodes_from(range(b[0]))
    hb.add_edges_from(b[1])
    assert (canonical_form(ga) == canonical_form(gb)) == nx.is_isomorphic(ha, hb)


@pytest.mark.parametrize(
    "maker, order",
    [
        (lambda: nx.petersen_graph(), 120),
        (lambda: nx.hypercube_graph(4), 384),
        (lambda: nx.heawood_graph(), 336),
        (lambda: nx.paley_graph(13).to_undirected(), 78),
        (lambda: nx.disjoint_union_all([nx.complete_graph(3)] * 3), 1296),
        (lambda: nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5), 1440),
    ],
)
def test_classic_graphs(maker, order):
    h = nx.convert_node_labels_to_integers(maker())
    g = LabeledGraph.from_unlabeled(h.number_of_nodes(), h.edges())
    assert automorphism_group(g).order == order


def test_vertex_invariants_are_invariant(nest):
    g = nest(10, 2, 5, 7, 1)
    colors = vertex_invariants(g)
    grp = automorphism_group(g)
    for p in grp.generators:
        assert all(colors[p(x)] == colors[x] for x in range(g.vertex_count))


@pytest.mark.skipif(kernels.get_backend("auto").BACKEND != "compiled", reason="compiled kernels not built")
def test_backends_agree(nest):
    py = kernels.get_backend("python")
    cc = kernels.get_backend("compiled")
    for t in [(28, 1, 6, 19, 13), (12, 1, 3, 10, 5), (30, 1, 4, 9, 7), (84, 1, 10, 51, 41)]:
        g = nest(*t)
        a, b = search(g, py), search(g, cc)
        assert a.certificate == b.certificate
        assert a.group.order == b.group.order
