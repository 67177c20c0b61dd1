import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyncolor import named
from dyncolor.budget import BudgetMode, Mode, budget, color_apex, color_degenerate, color_no_kt, shrink_apex_set
from dyncolor.core import verify_dynamic
from dyncolor.exceptions import DegeneracyViolation, NotColorable, PreconditionError
from dyncolor.generators import apex_instance, random_planar, random_series_parallel, random_tree
from dyncolor.graph import Graph
from dyncolor.minors import is_planar

from .strategies import graphs


def float_minor_budget(t):
    return math.floor(16 * t * math.sqrt(math.log2(t))) + 3


class TestBudget:
    def test_pinned(self):
        assert budget(BudgetMode(Mode.TOPOLOGICAL_MINOR, 3)) == 92
        assert budget(BudgetMode(Mode.MINOR, 2)) == 35
        assert budget(BudgetMode(Mode.MINOR, 4)) == 93

    def test_string_modes(self):
        assert budget(BudgetMode("topological", 2)) == 42
        assert budget(BudgetMode("minor", 8)) == float_minor_budget(8)

    @pytest.mark.parametrize("mode", list(Mode))
    def test_strictly_increasing(self, mode):
        values = [budget(BudgetMode(mode, t)) for t in range(2, 11)]
        assert all(a < b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("t", range(2, 40))
    def test_minor_matches_float(self, t):
        # the float value is far enough from an integer for these t
        assert budget(BudgetMode(Mode.MINOR, t)) == float_minor_budget(t)

    @pytest.mark.parametrize("t", range(2, 40))
    def test_topological_closed_form(self, t):
        assert budget(BudgetMode(Mode.TOPOLOGICAL_MINOR, t)) == 10 * t * t + 2

    def test_bad_t(self):
        with pytest.raises(PreconditionError):
            BudgetMode(Mode.MINOR, 1)


class TestDegenerate:
    def test_tree(self):
        g = named.path(6)
        c = color_degenerate(g, 1)
        assert verify_dynamic(g, c).ok and c.num_colors <= 4

    def test_tree_k2(self):
        g = random_tree(30, 5)
        c = color_degenerate(g, 2)
        assert verify_dynamic(g, c).ok and c.num_colors <= 5

    def test_star(self):
        g = named.star(5)
        c = color_degenerate(g, 1)
        assert verify_dynamic(g, c).ok

    def test_c6(self):
        g = named.cycle(6)
        c = color_degenerate(g, 2)
        assert verify_dynamic(g, c).ok and c.num_colors <= 5

    def test_c5(self):
        c = color_degenerate(named.cycle(5), 2)
        assert verify_dynamic(named.cycle(5), c).ok and c.num_colors == 5

    def test_subdivided_k5(self):
        g = named.subdivided_complete(5)
        c = color_degenerate(g, 4)
        assert verify_dynamic(g, c).ok
        assert 5 <= c.num_colors <= 7

    def test_k5_is_not_2_degenerate(self):
        with pytest.raises(DegeneracyViolation) as info:
            color_degenerate(named.complete(5), 2)
        assert info.value.witness.min_degree() > 2

    def test_disconnected(self):
        g = named.disjoint_union(named.cycle(5), named.path(3), named.empty(1))
        assert verify_dynamic(g, color_degenerate(g, 2)).ok

    def test_bad_k(self):
        with pytest.raises(PreconditionError):
            color_degenerate(named.path(2), 0)

    @pytest.mark.parametrize("seed", range(20))
    def test_generated(self, seed):
        tree = random_tree(5 + seed * 2, seed)
        assert verify_dynamic(tree, c := color_degenerate(tree, 1)).ok and c.num_colors <= 4
        sp = random_series_parallel(5 + seed * 2, seed)
        assert verify_dynamic(sp, c := color_degenerate(sp, 2)).ok and c.num_colors <= 5

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=10))
    def test_max_degree_always_suffices(self, g):
        # deleting v and adding v1v2 never raises a degree, so k = max degree never gets stuck
        k = max(1, g.max_degree()) if g.n else 1
        c = color_degenerate(g, k)
        assert verify_dynamic(g, c).ok
        assert c.num_colors <= k + 3

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=10))
    def test_plain_degeneracy_succeeds_or_reports(self, g):
        # the added edge v1v2 can push the minimum degree above plain degeneracy
        k = max(1, _degeneracy(g))
        try:
            c = color_degenerate(g, k)
        except DegeneracyViolation as exc:
            assert exc.witness.min_degree() > k
        else:
            assert verify_dynamic(g, c).ok and c.num_colors <= k + 3


def _degeneracy(g: Graph) -> int:
    best = 0
    cur = g
    while cur.n:
        v = min(cur.vertices, key=lambda u: (cur.degree(u), u))
        best = max(best, cur.degree(v))
        cur = cur.remove_vertices([v])
    return best


class TestNoKt:
    def test_planar_under_minor_budget(self):
        g = random_planar(30, 1)
        mode = BudgetMode(Mode.MINOR, 5)
        c = color_no_kt(g, mode)
        assert verify_dynamic(g, c).ok and c.num_colors <= budget(mode)

    def test_topological(self):
        g = named.petersen()
        mode = BudgetMode(Mode.TOPOLOGICAL_MINOR, 4)
        c = color_no_kt(g, mode)
        assert verify_dynamic(g, c).ok and c.num_colors <= budget(mode)


class TestApex:
    def test_k5_tight(self):
        g = named.complete(5)
        report = color_apex(g, {0})
        assert verify_dynamic(g, report.coloring).ok
        assert report.coloring.num_colors == 5

    def test_planar_no_apex(self):
        g = random_planar(12, 3)
        report = color_apex(g, set())
        assert report.coloring.num_colors <= 4
        assert verify_dynamic(g, report.coloring).ok

    def test_c5_without_apex(self):
        with pytest.raises(NotColorable):
            color_apex(named.cycle(5), set())

    def test_c5_with_apex(self):
        g = Graph(range(6), named.cycle(5).edge_list() + [(5, 0), (5, 2)])
        report = color_apex(g, {5})
        assert verify_dynamic(g, report.coloring).ok
        assert report.coloring.num_colors <= 5

    def test_not_planar_after_removal(self):
        with pytest.raises(PreconditionError):
            color_apex(named.complete(6), {0})

    def test_unknown_vertex(self):
        with pytest.raises(PreconditionError):
            color_apex(named.complete(4), {9})

    def test_shrink(self):
        g = random_planar(10, 0)
        assert shrink_apex_set(g, {0, 1, 2}) == frozenset()
        X = shrink_apex_set(named.complete(5), {0, 1})
        assert len(X) == 1 and is_planar(named.complete(5).remove_vertices(X))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(4, 15), st.integers(1, 3), st.integers(0, 10**6))
    def test_generated(self, n, k, seed):
        g, X = apex_instance(n, k, seed)
        assert is_planar(g.remove_vertices(X))
        report = color_apex(g, X)
        assert verify_dynamic(g, report.coloring).ok
        assert report.coloring.num_colors <= k + 4
