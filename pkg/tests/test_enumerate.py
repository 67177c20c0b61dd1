import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyncolor.enumerate import all_graphs, canonical_form, canonical_graph, connected_graphs
from dyncolor.graph import Graph, is_isomorphic

from .oracles import nx_graph
from .strategies import graphs

# OEIS A001349 (connected graphs) and A000088 (all graphs)
CONNECTED = [1, 1, 1, 2, 6, 21, 112]
ALL = [1, 1, 2, 4, 11, 34, 156]


@pytest.mark.parametrize("n", range(7))
def test_counts(n):
    gs = all_graphs(n)
    assert len(gs) == ALL[n]
    assert sum(1 for _ in connected_graphs(n)) == CONNECTED[n]


def test_subcubic_connected_counts():
    # connected graphs with max degree 3, OEIS A112410
    assert [sum(1 for _ in connected_graphs(n, 3)) for n in range(1, 8)] == [1, 1, 2, 6, 10, 29, 64]


def test_matches_graph_atlas():
    # the atlas lists every graph on up to 7 vertices once
    for n in range(1, 6):
        ours = all_graphs(n)
        atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
        assert len(ours) == len(atlas)
        for a in atlas:
            h = Graph.from_networkx(a) if a.number_of_nodes() else Graph(range(n))
            h = Graph(range(n), h.edges)
            matches = [g for g in ours if g.m == h.m and is_isomorphic(g, h)]
            assert len(matches) == 1


@settings(max_examples=60)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(g, rnd):
    ids = list(range(g.n))
    rnd.shuffle(ids)
    h = g.relabel(dict(zip(g.sorted_vertices(), ids)))
    assert canonical_form(g) == canonical_form(h)
    assert is_isomorphic(canonical_graph(g), g)


@settings(max_examples=60)
@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_form_separates(g, h):
    if g.n == h.n:
        same = nx.is_isomorphic(nx_graph(g), nx_graph(h))
        assert (canonical_form(g) == canonical_form(h)) == same
