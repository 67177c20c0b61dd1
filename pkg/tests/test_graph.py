from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyncolor import named
from dyncolor.exceptions import CycleInput, PreconditionError
from dyncolor.graph import (
    Graph,
    Separation,
    add_edge,
    components,
    contract_edge,
    cut_vertices,
    enumerate_separations,
    find_isomorphism,
    is_isomorphic,
    suppress_degree_two,
)

from .oracles import brute_cut_vertices, brute_is_isomorphic, nx_graph
from .strategies import graphs


def test_graph_rejects_loops_and_normalizes_edges():
    with pytest.raises(PreconditionError):
        Graph([0], [(0, 0)])
    g = Graph([], [(2, 1), (1, 2)])
    assert g.edges == {(1, 2)}
    assert g.vertices == {1, 2}


def test_graph_rejects_negative_ids():
    with pytest.raises(PreconditionError):
        Graph([-1])


class TestContractEdge:
    def test_triangle_to_k2(self):
        h = contract_edge(named.complete(3), 0, 1)
        assert h.n == 2 and h.edges == {(0, 2)}

    def test_c5_to_c4(self):
        h = contract_edge(named.cycle(5), 2, 3)
        assert is_isomorphic(h, named.cycle(4))

    def test_k4_to_k3(self):
        h = contract_edge(named.complete(4), 1, 3)
        assert h.vertices == {0, 1, 2}
        assert h.edges == {(0, 1), (0, 2), (1, 2)}

    def test_keeps_smaller_id(self):
        h = contract_edge(named.path(3), 2, 1)
        assert h.vertices == {0, 1}

    def test_non_edge(self):
        with pytest.raises(PreconditionError):
            contract_edge(named.path(3), 0, 2)

    @given(graphs(min_n=2, max_n=8), st.data())
    def test_counts(self, g, data):
        if not g.m:
            return
        u, v = data.draw(st.sampled_from(g.edge_list()))
        h = contract_edge(g, u, v)
        assert h.n == g.n - 1
        assert h.m <= g.m - 1
        expected = nx.contracted_nodes(nx_graph(g), min(u, v), max(u, v), self_loops=False)
        assert h.edges == {tuple(sorted(e)) for e in expected.edges}


class TestAddEdge:
    def test_idempotent(self):
        g = named.cycle(4)
        assert add_edge(g, 0, 1) == g

    def test_path_to_triangle(self):
        assert add_edge(named.path(3), 0, 2) == named.complete(3)

    def test_c4_diagonal(self):
        h = add_edge(named.cycle(4), 0, 2)
        assert h.m == 5 and h.degree_sequence() == [3, 3, 2, 2]

    def test_loop(self):
        with pytest.raises(PreconditionError):
            add_edge(named.cycle(4), 1, 1)


class TestComponents:
    def test_empty(self):
        assert components(named.empty(3)) == [{0}, {1}, {2}]

    def test_c5(self):
        assert components(named.cycle(5)) == [set(range(5))]

    def test_union(self):
        g = named.disjoint_union(named.complete(3), named.complete(2))
        assert components(g) == [{0, 1, 2}, {3, 4}]

    @given(graphs(max_n=9))
    def test_against_networkx(self, g):
        ours = components(g)
        theirs = sorted((frozenset(c) for c in nx.connected_components(nx_graph(g))), key=min)
        assert ours == theirs


class TestCutVertices:
    def test_p3(self):
        assert cut_vertices(named.path(3)) == {1}

    def test_c5(self):
        assert cut_vertices(named.cycle(5)) == set()

    def test_bowtie(self):
        g = Graph(range(5), [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        assert cut_vertices(g) == {2}

    def test_disconnected(self):
        with pytest.raises(PreconditionError):
            cut_vertices(named.empty(2))

    @given(graphs(min_n=1, max_n=9, connected=True))
    def test_against_brute_force(self, g):
        assert set(cut_vertices(g)) == brute_cut_vertices(g)

    @given(graphs(min_n=2, max_n=8, connected=True))
    def test_empty_iff_no_order1_separation(self, g):
        assert (not cut_vertices(g)) == (not enumerate_separations(g, 1))


class TestSeparations:
    def test_p3(self):
        seps = enumerate_separations(named.path(3), 1)
        assert seps == [Separation(frozenset({0, 1}), frozenset({1, 2}))]

    def test_c4(self):
        seps = enumerate_separations(named.cycle(4), 2)
        assert {s.separator for s in seps} == {frozenset({0, 2}), frozenset({1, 3})}
        assert len(seps) == 2

    @pytest.mark.parametrize("order", [1, 2, 3])
    def test_k4_none(self, order):
        assert enumerate_separations(named.complete(4), order) == []

    def test_bad_order(self):
        with pytest.raises(PreconditionError):
            enumerate_separations(named.cycle(4), 4)

    @settings(max_examples=60)
    @given(graphs(min_n=3, max_n=8, connected=True), st.sampled_from([1, 2, 3]))
    def test_valid_and_complete(self, g, order):
        seps = enumerate_separations(g, order)
        assert len(set(seps)) == len(seps)
        h = nx_graph(g)
        for s in seps:
            assert s.order == order and s.is_valid(g)
            rest = h.subgraph(g.vertices - s.separator)
            for a in s.A - s.B:
                for b in s.B - s.A:
                    assert not nx.has_path(rest, a, b)
            # canonical orientation: smallest vertex off the cut is on the A side
            assert min(g.vertices - s.separator) in s.A
        # brute force: every cover (A, B) of exactly this order
        brute = set()
        verts = g.sorted_vertices()
        for X in combinations(verts, order):
            others = [v for v in verts if v not in X]
            for mask in range(1, 2 ** len(others) - 1):
                a = {v for i, v in enumerate(others) if mask >> i & 1}
                if min(others) not in a:
                    continue
                sep = Separation(frozenset(a) | set(X), frozenset(set(others) - a) | set(X))
                if sep.is_valid(g):
                    brute.add(sep)
        assert set(seps) == brute


class TestSuppression:
    def test_subdivided_k4(self):
        sup = suppress_degree_two(named.subdivided_complete(4))
        assert sup.suppressed == named.complete(4)

    def test_v8_three_subdivided(self):
        v8 = named.v8()
        edges = set(v8.edges) - {(0, 1), (2, 6), (3, 4)}
        edges |= {(0, 8), (8, 1), (2, 9), (9, 10), (10, 6), (3, 11), (11, 4)}
        sup = suppress_degree_two(Graph(range(12), edges))
        assert sup.suppressed == v8

    def test_cycle_rejected(self):
        with pytest.raises(CycleInput):
            suppress_degree_two(named.cycle(6))

    def test_leaf_rejected(self):
        with pytest.raises(PreconditionError):
            suppress_degree_two(named.star(3))

    def test_parallel_paths_kept_simple(self):
        # theta graph: two branch vertices joined by three paths
        g = Graph(range(6), [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1)])
        sup = suppress_degree_two(g)
        assert sup.suppressed.edges == {(0, 1)}
        assert len(sup.path_map[(0, 1)]) == 3
        assert sup.expand() == g

    @settings(max_examples=50)
    @given(st.integers(1, 3), st.integers(0, 10**6))
    def test_round_trip(self, times, seed):
        import random

        rng = random.Random(seed)
        base = rng.choice([named.complete(4), named.v8(), named.complete_bipartite(3, 3), named.petersen()])
        g = named.subdivide(base, times)
        sup = suppress_degree_two(g)
        assert is_isomorphic(sup.suppressed, base)
        assert sup.expand() == g
        assert all(sup.suppressed.degree(v) != 2 for v in sup.suppressed.vertices)


class TestIsomorphism:
    def test_c5_relabelled(self):
        g = named.cycle(5).relabel({0: 3, 1: 0, 2: 4, 3: 1, 4: 2})
        assert is_isomorphic(named.cycle(5), g)

    def test_c5_p5(self):
        assert not is_isomorphic(named.cycle(5), named.path(5))

    def test_v8_rotated_chords(self):
        # C8 on a shifted labelling with the four long diagonals
        h = Graph(range(8), [((i + 1) % 8, (i + 2) % 8) for i in range(8)] + [((i + 1) % 8, (i + 5) % 8) for i in range(4)])
        f = find_isomorphism(named.v8(), h)
        assert f is not None
        assert all(h.has_edge(f[u], f[v]) for u, v in named.v8().edges)

    def test_v8_not_cube(self):
        cube = Graph.from_networkx(nx.convert_node_labels_to_integers(nx.hypercube_graph(3)))
        assert not is_isomorphic(named.v8(), cube)

    @settings(max_examples=80)
    @given(graphs(max_n=6), graphs(max_n=6))
    def test_against_brute_force(self, g, h):
        if g.n != h.n:
            return
        assert is_isomorphic(g, h) == brute_is_isomorphic(g, h)

    @settings(max_examples=40)
    @given(graphs(max_n=10), st.randoms(use_true_random=False))
    def test_permutation_invariant(self, g, rnd):
        ids = list(range(g.n))
        rnd.shuffle(ids)
        h = g.relabel(dict(zip(range(g.n), ids)))
        assert is_isomorphic(g, h)
        assert is_isomorphic(g, h) == nx.is_isomorphic(nx_graph(g), nx_graph(h))
