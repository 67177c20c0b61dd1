"""Exhaustive enumeration of small graphs up to isomorphism.

Graphs are grown one edge at a time from the empty graph; each level is
deduplicated by a canonical form computed with individualization and
refinement (fine for n <= 9).
"""

from __future__ import annotations

from typing import Iterator

from .graph import Graph


def _refine(cells: list[list[int]], nbrs: list[int]) -> list[list[int]]:
    """Equitable refinement: split cells until every vertex in a cell sees
    the same number of neighbours in every cell."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(bin(nbrs[v] & m).count("1") for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
                out.extend([v for v in cell if sig[v] == key] for key in keys)
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def canonical_form(g: Graph) -> tuple[int, int]:
    """An isomorphism invariant that separates non-isomorphic graphs: (n, bitstring)."""
    order = g.sorted_vertices()
    n = len(order)
    idx = {v: i for i, v in enumerate(order)}
    nbrs = [0] * n
    for u, v in g.edges:
        nbrs[idx[u]] |= 1 << idx[v]
        nbrs[idx[v]] |= 1 << idx[u]
    best = [None]

    def cert(perm: list[int]) -> int:
        code = 0
        for j in range(1, n):
            row = nbrs[perm[j]]
            for i in range(j):
                code = (code << 1) | ((row >> perm[i]) & 1)
        return code

    def search(cells: list[list[int]]):
        cells = _refine(cells, nbrs)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            code = cert([c[0] for c in cells])
            if best[0] is None or code > best[0]:
                best[0] = code
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            # swapping twins is an automorphism fixing this partition: one branch covers both
            if any(nbrs[v] & ~(1 << t) == nbrs[t] & ~(1 << v) for t in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    if n == 0:
        return (0, 0)
    search([list(range(n))])
    return (n, best[0])


def canonical_graph(g: Graph) -> Graph:
    """The representative of g's isomorphism class on vertices 0..n-1."""
    n, code = canonical_form(g)
    bits = n * (n - 1) // 2
    edges = []
    k = bits - 1
    for j in range(1, n):
        for i in range(j):
            if (code >> k) & 1:
                edges.append((i, j))
            k -= 1
    return Graph(range(n), edges)


def all_graphs(n: int, max_degree: int | None = None) -> list[Graph]:
    """Every graph on n vertices up to isomorphism (canonical representatives)."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    cap = n if max_degree is None else max_degree
    level = {canonical_form(Graph(range(n))): Graph(range(n))}
    found = dict(level)
    while level:
        nxt = {}
        for g in level.values():
            for j in range(1, n):
                if g.degree(j) >= cap:
                    continue
                for i in range(j):
                    if g.has_edge(i, j) or g.degree(i) >= cap:
                        continue
                    h = Graph(g.vertices, g.edges | {(i, j)})
                    key = canonical_form(h)
                    if key not in nxt:
                        nxt[key] = canonical_graph(h)
        found.update(nxt)
        level = nxt
    return [found[k] for k in sorted(found, key=lambda k: (k[1].bit_count(), k[1]))]


def connected_graphs(n: int, max_degree: int | None = None) -> Iterator[Graph]:
    for g in all_graphs(n, max_degree):
        if g.is_connected():
            yield g
