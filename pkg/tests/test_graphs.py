from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import group
from superintegral.graphs import (
    CliqueDecomposition,
    SimpleGraph,
    clique_decomposition,
    clique_union_planarity,
    commuting_graph,
    complete_graph,
    connected_components,
    disjoint_cliques,
)
from superintegral.structure import center, centralizer, is_ac_group, noncentral_centralizers

CORPUS = [
    "D:6", "D:8", "D:14", "Q:8", "Q:12", "QD:16", "M:4,2", "PQ:3,7", "SZ20", "S:4", "A:4",
    "SL2:3", "GL2:3", "A:5", "HA:2", "HP:1,3", "M16", "SG16_3", "prod(D:6,Z:3)", "prod(A:4,Z:2)",
]


def test_graph_validation():
    with pytest.raises(ValueError, match="loop"):
        SimpleGraph(1, (1,))
    with pytest.raises(ValueError, match="asymmetric"):
        SimpleGraph(2, (2, 0))
    with pytest.raises(ValueError, match="loop"):
        SimpleGraph.from_edges(3, [(1, 1)])


def test_commuting_graph_q8():
    g = commuting_graph(group("Q:8"))
    assert g.vertex_count == 6
    assert len(g.edges()) == 3
    assert sorted(len(c) for c in connected_components(g)) == [2, 2, 2]


@pytest.mark.parametrize(
    "desc,text",
    [("A:4", "K3 + 4K2"), ("SL2:3", "4K4 + 3K2"), ("SZ20", "K4 + 5K3"), ("HA:2", "3K4"), ("D:14", "K6 + 7K1")],
)
def test_commuting_graph_decompositions(desc, text):
    assert str(clique_decomposition(commuting_graph(group(desc)))) == text


def test_s4_is_not_a_clique_union():
    g = commuting_graph(group("S:4"))
    assert clique_decomposition(g) is None
    comps = connected_components(g)
    assert any(len(g.induced(c).edges()) < len(c) * (len(c) - 1) // 2 for c in comps)


@pytest.mark.parametrize("desc", CORPUS)
def test_commuting_graph_matches_brute_force(desc):
    grp = group(desc)
    g = commuting_graph(grp)
    verts, edges = oracles.commuting_edges(grp)
    assert list(g.vertex_labels) == verts
    assert set(g.edges()) == edges


@pytest.mark.parametrize("desc", CORPUS)
def test_degree_equals_centralizer_size(desc):
    grp = group(desc)
    g = commuting_graph(grp)
    z = len(center(grp))
    assert g.vertex_count == grp.order - z
    for v, x in enumerate(g.vertex_labels):
        assert g.degree(v) == len(centralizer(grp, x)) - z - 1


@pytest.mark.parametrize("desc", CORPUS)
def test_ac_iff_clique_union(desc):
    grp = group(desc)
    d = clique_decomposition(commuting_graph(grp))
    assert (d is not None) == is_ac_group(grp)
    if d is not None:
        assert d.clique_count == len(noncentral_centralizers(grp))
        assert d.vertex_count == grp.order - len(center(grp))


def test_commuting_graph_rejects_abelian():
    with pytest.raises(ValueError):
        commuting_graph(group("Z:6"))


def test_components_examples():
    assert connected_components(SimpleGraph(0, ())) == []
    g = disjoint_cliques(CliqueDecomposition.normalized([(2, 3)]))
    assert [len(c) for c in connected_components(g)] == [2, 2, 2]
    assert clique_decomposition(complete_graph(1)) == CliqueDecomposition(((1, 1),))


@given(st.integers(1, 25), st.lists(st.tuples(st.integers(0, 24), st.integers(0, 24)), max_size=40))
def test_components_match_union_find(n, raw):
    edges = {(min(u, v), max(u, v)) for u, v in raw if u != v and u < n and v < n}
    g = SimpleGraph.from_edges(n, edges)
    ours = sorted(map(sorted, connected_components(g)))
    ref = sorted(map(sorted, oracles.components(n, edges)))
    assert ours == ref


@given(st.lists(st.tuples(st.integers(1, 8), st.integers(1, 4)), min_size=1, max_size=6))
def test_disjoint_cliques_round_trip(parts):
    d = CliqueDecomposition.normalized(parts)
    assert clique_decomposition(disjoint_cliques(d)) == d
    sizes = [s for s, _ in d.parts]
    assert sizes == sorted(set(sizes), reverse=True)


def test_planarity_rule():
    assert clique_union_planarity(CliqueDecomposition.normalized([(4, 1), (3, 5)]))
    assert clique_union_planarity(CliqueDecomposition.normalized([(6, 1), (1, 7)])) is False
    assert clique_union_planarity(CliqueDecomposition.normalized([(2, 3), (4, 1)]))
    assert not clique_union_planarity(CliqueDecomposition.normalized([(5, 1)]))


def test_exports():
    g = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    assert g.to_edge_list() == "0 1\n1 2\n"
    assert g.to_adjacency_list() == "0: 1\n1: 0 2\n2: 1\n"


def test_decomposition_text():
    assert str(CliqueDecomposition.normalized([(3, 5), (4, 1), (3, 0)])) == "K4 + 5K3"
    with pytest.raises(ValueError):
        CliqueDecomposition.normalized([(0, 1)])
