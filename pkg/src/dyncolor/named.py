"""Small named graphs used throughout the package and its tests."""

from __future__ import annotations

from itertools import combinations

from .exceptions import PreconditionError
from .graph import Graph


def empty(n: int) -> Graph:
    return Graph(range(n))


def path(n: int) -> Graph:
    return Graph(range(n), ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(range(n), ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(range(n), combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(range(a + b), ((i, a + j) for i in range(a) for j in range(b)))


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def v8() -> Graph:
    """The Wagner graph: the 8-cycle plus its four long diagonals."""
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
    return Graph(range(8), edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


def subdivide(g: Graph, times: int = 1) -> Graph:
    """Replace every edge by a path with ``times`` new internal vertices.

    New vertices are numbered from ``max(V) + 1`` upwards, edge by edge in
    sorted edge order.
    """
    nxt = max(g.vertices, default=-1) + 1
    edges = []
    for u, v in g.edge_list():
        chain = [u]
        for _ in range(times):
            chain.append(nxt)
            nxt += 1
        chain.append(v)
        edges.extend(zip(chain, chain[1:]))
    return Graph(g.vertices, edges)


def subdivided_complete(n: int) -> Graph:
    """K_n with every edge subdivided once."""
    if n < 2:
        raise PreconditionError(f"subdivided_complete needs n >= 2, got {n}")
    return subdivide(complete(n))


def disjoint_union(*graphs: Graph) -> Graph:
    """Union with each graph relabelled to follow the previous ones."""
    verts, edges, offset = [], [], 0
    for g in graphs:
        order = g.sorted_vertices()
        f = {v: offset + i for i, v in enumerate(order)}
        verts.extend(f.values())
        edges.extend((f[u], f[v]) for u, v in g.edges)
        offset += len(order)
    return Graph(verts, edges)
