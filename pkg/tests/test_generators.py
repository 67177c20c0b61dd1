import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dyncolor import named
from dyncolor.exceptions import PreconditionError
from dyncolor.generators import (
    KINDS,
    GenSpec,
    apex_instance,
    clique_sum,
    generate,
    random_planar,
    random_series_parallel,
    random_tree,
    v8_subdivision,
)
from dyncolor.graph import is_isomorphic, suppress_degree_two
from dyncolor.minors import has_complete_minor, has_minor, is_planar


@pytest.mark.parametrize("kind", KINDS)
def test_deterministic(kind):
    spec = GenSpec(kind, seed=7)
    assert generate(spec) == generate(spec)


def test_unknown_kind():
    with pytest.raises(PreconditionError):
        GenSpec("hypercube")


def test_named_kinds():
    v8 = generate(GenSpec("v8"))
    assert v8.n == 8 and v8.m == 12 and set(v8.degree_sequence()) == {3}
    k4 = generate(GenSpec("subdivided_complete", n=4))
    assert k4.n == 10 and k4.m == 12
    assert generate(GenSpec("cycle", n=7)) == named.cycle(7)


@settings(max_examples=30, deadline=None)
@given(st.integers(8, 40), st.integers(0, 10**6))
def test_v8_subdivision(n, seed):
    g = v8_subdivision(n, seed)
    assert g.n == n and g.max_degree() == 3 and g.is_connected()
    assert is_isomorphic(suppress_degree_two(g).suppressed, named.v8())


def test_v8_subdivision_range():
    with pytest.raises(PreconditionError):
        v8_subdivision(41, 0)


@pytest.mark.parametrize("seed", range(20))
def test_clique_sum_is_connected_and_k5_free(seed):
    g = clique_sum(seed, pieces=3)
    assert g.is_connected()
    assert not has_complete_minor(g, 5)


def test_clique_sum_order():
    with pytest.raises(PreconditionError):
        clique_sum(0, max_order=4)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 40), st.integers(0, 10**6))
def test_families(n, seed):
    tree = random_tree(n, seed)
    assert tree.n == n and tree.m == n - 1 and tree.is_connected()
    planar = random_planar(n, seed)
    assert planar.n == n and is_planar(planar) and planar.is_connected()
    sp = random_series_parallel(n, seed)
    assert sp.n == n and sp.is_connected()
    if n <= 12:
        assert not has_minor(sp, named.complete(4))


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 15), st.integers(1, 3), st.integers(0, 10**6))
def test_apex_instance(n, k, seed):
    g, X = apex_instance(n, k, seed)
    assert len(X) == k and X <= g.vertices
    assert is_planar(g.remove_vertices(X))
    assert all(g.degree(a) >= 2 for a in X)
