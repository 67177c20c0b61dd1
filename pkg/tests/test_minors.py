import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyncolor import named
from dyncolor.exceptions import PreconditionError
from dyncolor.generators import clique_sum
from dyncolor.graph import Graph, components_without, contract_edge
from dyncolor.minors import (
    HalinTag,
    classify_3connected,
    has_complete_minor,
    has_minor,
    has_topological_minor,
    is_k_connected,
    is_planar,
)

from .oracles import brute_has_minor, nx_graph
from .strategies import graphs

K5 = named.complete(5)
K33 = named.complete_bipartite(3, 3)


class TestHasMinor:
    def test_k5_in_k5(self):
        assert has_minor(K5, K5)

    def test_v8_has_no_k5(self):
        assert not has_minor(named.v8(), K5)

    def test_petersen_has_k5(self):
        assert has_minor(named.petersen(), K5)

    def test_petersen_spoke_contraction_is_k5(self):
        g = named.petersen()
        for i in range(5):
            g = contract_edge(g, i, i + 5)
        assert g == K5

    def test_v8_has_k33(self):
        assert has_minor(named.v8(), K33)

    def test_k5_has_no_k33(self):
        assert not has_minor(K5, K33)

    def test_subdivided_k5(self):
        assert has_minor(named.subdivided_complete(5), K5)

    def test_planar_graphs_have_no_k5(self):
        g = Graph.from_networkx(nx.convert_node_labels_to_integers(nx.icosahedral_graph()))
        assert not has_minor(g, K5)
        assert has_minor(g, named.complete(4))

    @settings(max_examples=40, deadline=None)
    @given(graphs(min_n=5, max_n=7))
    def test_k5_against_brute_force(self, g):
        assert has_minor(g, K5) == brute_has_minor(g, K5)

    @settings(max_examples=30, deadline=None)
    @given(graphs(min_n=4, max_n=7), st.sampled_from(["k4", "c4", "k13", "diamond"]))
    def test_small_patterns_against_brute_force(self, g, which):
        h = {
            "k4": named.complete(4),
            "c4": named.cycle(4),
            "k13": named.star(3),
            "diamond": Graph(range(4), [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        }[which]
        assert has_minor(g, h) == brute_has_minor(g, h)

    @settings(max_examples=25, deadline=None)
    @given(graphs(min_n=5, max_n=9, connected=True), st.randoms(use_true_random=False))
    def test_monotone_under_minor_operations(self, g, rnd):
        """A minor of g containing K5 forces g to contain K5 as well."""
        chain = [g]
        cur = g
        for _ in range(3):
            if not cur.m:
                break
            u, v = rnd.choice(cur.edge_list())
            op = rnd.choice(["delete_edge", "contract", "delete_vertex"])
            if op == "delete_edge":
                cur = Graph(cur.vertices, cur.edges - {(u, v)})
            elif op == "contract":
                cur = contract_edge(cur, u, v)
            else:
                cur = cur.remove_vertices([u])
            chain.append(cur)
        flags = [has_complete_minor(h, 5) for h in chain]
        for bigger, smaller in zip(flags, flags[1:]):
            assert bigger or not smaller

    @pytest.mark.parametrize("seed", range(15))
    def test_clique_sums_are_k5_free(self, seed):
        assert not has_complete_minor(clique_sum(seed, pieces=4), 5)


class TestTopologicalMinor:
    def test_subdivided_k5(self):
        assert has_topological_minor(named.subdivided_complete(5), K5)

    def test_c6_no_k4(self):
        assert not has_topological_minor(named.cycle(6), named.complete(4))

    def test_v8_has_k4_subdivision(self):
        assert has_topological_minor(named.v8(), named.complete(4))

    def test_petersen_has_k5_minor_but_no_k5_subdivision(self):
        # 3-regular, so no vertex can host a degree-4 branch vertex
        assert not has_topological_minor(named.petersen(), K5)
        assert has_topological_minor(named.petersen(), K33)

    @settings(max_examples=40, deadline=None)
    @given(graphs(min_n=4, max_n=8), st.sampled_from(["k4", "k33", "c4", "k5"]))
    def test_implies_minor(self, g, which):
        h = {"k4": named.complete(4), "k33": K33, "c4": named.cycle(4), "k5": K5}[which]
        if has_topological_minor(g, h):
            assert has_minor(g, h)

    @settings(max_examples=40, deadline=None)
    @given(graphs(min_n=4, max_n=7))
    def test_k4_topological_equals_k4_minor(self, g):
        # max degree 3 patterns: minor and topological minor coincide
        assert has_topological_minor(g, named.complete(4)) == brute_has_minor(g, named.complete(4))


class TestPlanarity:
    @pytest.mark.parametrize("method", ["lr", "kuratowski"])
    def test_examples(self, method):
        assert is_planar(named.complete(4), method)
        assert not is_planar(named.v8(), method)
        assert not is_planar(K33, method)
        assert not is_planar(K5, method)
        assert is_planar(named.cycle(5), method)

    def test_k33_is_its_own_witness(self):
        assert has_topological_minor(K33, K33)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=9))
    def test_two_routes_agree(self, g):
        lr = is_planar(g)
        assert lr == is_planar(g, method="kuratowski")
        assert lr == nx.check_planarity(nx_graph(g))[0]

    @settings(max_examples=60)
    @given(graphs(min_n=3, max_n=10))
    def test_euler_bound(self, g):
        if is_planar(g):
            assert g.m <= 3 * g.n - 6

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            is_planar(K5, method="guess")


class TestClassify:
    def test_k4(self):
        assert classify_3connected(named.complete(4)).tag is HalinTag.PLANAR

    def test_v8(self):
        assert classify_3connected(named.v8()).tag is HalinTag.IS_V8

    def test_k33(self):
        verdict = classify_3connected(K33)
        assert verdict.tag is HalinTag.THREE_CUT
        assert verdict.cut in ({0, 1, 2}, {3, 4, 5})
        assert len(components_without(K33, verdict.cut)) == 3

    def test_not_3connected(self):
        with pytest.raises(PreconditionError):
            classify_3connected(named.cycle(5))

    @pytest.mark.parametrize("seed", range(30))
    def test_never_violates_on_3connected_k5_free(self, seed):
        rng = random.Random(seed)
        # three or more apexes over a triangle-free 3-sum skeleton: K3,3-like graphs
        arms = rng.randint(3, 5)
        X = [0, 1, 2]
        edges = []
        nxt = 3
        for _ in range(arms):
            size = rng.randint(1, 3)
            arm = list(range(nxt, nxt + size))
            nxt += size
            edges += [(a, b) for a, b in zip(arm, arm[1:])]
            for x in X:
                edges.append((x, rng.choice(arm)))
            if size == 3:
                edges.append((arm[0], arm[2]))
        g = Graph(range(nxt), edges)
        if not is_k_connected(g, 3) or has_complete_minor(g, 5):
            return
        verdict = classify_3connected(g)
        if verdict.tag is HalinTag.THREE_CUT:
            assert len(components_without(g, verdict.cut)) >= 3
