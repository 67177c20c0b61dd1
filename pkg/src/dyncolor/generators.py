"""Seeded generators for the graph families the colorers are exercised on.

Every generator takes an explicit seed; the same ``GenSpec`` always yields
the same graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from . import named
from .exceptions import PreconditionError
from .graph import Graph
from .minors import _planar_adj

KINDS = (
    "cycle",
    "v8",
    "v8_subdivision",
    "subdivided_complete",
    "clique_sum",
    "random_planar",
    "tree",
    "series_parallel",
    "apex",
)


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int | None = None
    seed: int = 0
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PreconditionError(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}")


def shuffle_labels(g: Graph, rng: random.Random) -> Graph:
    order = g.sorted_vertices()
    ids = list(range(len(order)))
    rng.shuffle(ids)
    return g.relabel(dict(zip(order, ids)))


def v8_subdivision(n: int, seed: int) -> Graph:
    """A subdivision of V8 on exactly ``n`` vertices (8 <= n <= 40), labels shuffled."""
    if not 8 <= n <= 40:
        raise PreconditionError(f"v8_subdivision needs 8 <= n <= 40, got {n}")
    rng = random.Random(seed)
    base = named.v8()
    counts = [0] * 12
    for _ in range(n - 8):
        counts[rng.randrange(12)] += 1
    nxt, edges = 8, []
    for (u, v), extra in zip(base.edge_list(), counts):
        chain = [u, *range(nxt, nxt + extra), v]
        nxt += extra
        edges.extend(zip(chain, chain[1:]))
    return shuffle_labels(Graph(range(n), edges), rng)


def random_tree(n: int, seed: int | random.Random) -> Graph:
    if n < 1:
        raise PreconditionError(f"a tree needs at least one vertex, got {n}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return Graph(range(n), ((v, rng.randrange(v)) for v in range(1, n)))


def random_planar(n: int, seed: int | random.Random, density: float = 1.0) -> Graph:
    """Random spanning tree, then candidate edges in random order kept while planar.

    ``density`` in [0, 1] is the fraction of candidate edges tried; 1.0 gives
    a maximal planar graph when n >= 3.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    tree = random_tree(n, rng)
    adj = tree.adjacency()
    cands = [e for e in combinations(range(n), 2) if e[1] not in adj[e[0]]]
    rng.shuffle(cands)
    cands = cands[: round(len(cands) * density)]
    edges = 3 * n - 6 if n >= 3 else n - 1
    m = n - 1
    for u, v in cands:
        if m >= edges:
            break
        adj[u].add(v)
        adj[v].add(u)
        if _planar_adj(adj):
            m += 1
        else:
            adj[u].discard(v)
            adj[v].discard(u)
    return Graph._from_adj(adj)


def random_series_parallel(n: int, seed: int | random.Random, keep: float = 0.8) -> Graph:
    """A random 2-tree on n vertices with some non-bridge edges deleted.

    Subgraphs of 2-trees are exactly the graphs with no K4 minor, so every
    topological minor has a vertex of degree at most two.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if n < 3:
        return random_tree(max(n, 1), rng)
    edges = [(0, 1)]
    for v in range(2, n):
        a, b = edges[rng.randrange(len(edges))]
        edges += [(a, v), (b, v)]
    adj = Graph(range(n), edges).adjacency()
    order = sorted({tuple(sorted(e)) for e in edges})
    rng.shuffle(order)
    for u, v in order:
        if rng.random() < keep:
            continue
        adj[u].discard(v)
        adj[v].discard(u)
        if not Graph._from_adj(adj).is_connected():
            adj[u].add(v)
            adj[v].add(u)
    return Graph._from_adj(adj)


def apex_instance(n_planar: int, k: int, seed: int | random.Random) -> tuple[Graph, frozenset[int]]:
    """A random planar graph plus ``k`` apex vertices with random neighbourhoods (size >= 2).

    Apex vertices get ids ``n_planar .. n_planar + k - 1`` and may be adjacent
    to each other.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    base = random_planar(n_planar, rng, density=rng.uniform(0.2, 1.0))
    edges = set(base.edges)
    for i in range(k):
        a = n_planar + i
        pool = list(range(a))
        size = rng.randint(min(2, len(pool)), len(pool))
        for w in rng.sample(pool, size):
            edges.add((w, a))
    X = frozenset(range(n_planar, n_planar + k))
    return Graph(range(n_planar + k), edges), X


def _cliques(g: Graph, size: int) -> list[tuple[int, ...]]:
    if size == 1:
        return [(v,) for v in g.sorted_vertices()]
    if size == 2:
        return g.edge_list()
    out = []
    for u, v in g.edge_list():
        for w in sorted(g.neighbors(u) & g.neighbors(v)):
            if w > v:
                out.append((u, v, w))
    return out


def clique_sum(seed: int, pieces: int = 3, max_order: int = 3, drop: float = 0.3, v8_prob: float = 0.4) -> Graph:
    """Glue planar pieces and V8 copies along cliques of size <= ``max_order``.

    Each new piece is identified with the current graph along a clique (a
    vertex, an edge or a triangle) present in both; with probability ``drop``
    each edge of the shared clique is then deleted, unless that disconnects
    the graph. A previously used clique is reused with probability 0.3, which
    is how nonplanar 3-sums such as K3,3 arise.
    """
    if not 1 <= max_order <= 3:
        raise PreconditionError(f"clique order must be 1..3, got {max_order}")
    rng = random.Random(seed)

    def piece() -> Graph:
        if rng.random() < v8_prob:
            return shuffle_labels(named.v8(), rng)
        return random_planar(rng.randint(4, 8), rng, density=rng.uniform(0.3, 1.0))

    g = piece()
    used: list[tuple[int, ...]] = []
    for _ in range(pieces - 1):
        h = piece()
        for _attempt in range(20):
            order = rng.randint(1, max_order)
            if used and rng.random() < 0.3:
                target = rng.choice(used)
                order = len(target)
                if not all(g.has_edge(a, b) for a, b in combinations(target, 2)):
                    continue
            else:
                opts = _cliques(g, order)
                if not opts:
                    continue
                target = rng.choice(opts)
            spots = _cliques(h, order)
            if spots:
                break
        else:
            target, spots, order = (rng.choice(g.sorted_vertices()),), _cliques(h, 1), 1
        spot = list(rng.choice(spots))
        rng.shuffle(spot)
        nxt = max(g.vertices) + 1
        mapping = {}
        for v in h.sorted_vertices():
            if v in spot:
                mapping[v] = target[spot.index(v)]
            else:
                mapping[v] = nxt
                nxt += 1
        glued = set(g.edges) | {tuple(sorted((mapping[u], mapping[v]))) for u, v in h.edges}
        g = Graph(set(g.vertices) | set(mapping.values()), glued)
        used.append(tuple(sorted(target)))
        for a, b in combinations(target, 2):
            if rng.random() < drop:
                trial = Graph(g.vertices, g.edges - {tuple(sorted((a, b)))})
                if trial.is_connected():
                    g = trial
    return g


def generate(spec: GenSpec) -> Graph:
    """Build the graph described by ``spec``.

    ``n`` is the vertex count for cycle, v8_subdivision, random_planar, tree
    and series_parallel, the clique size for subdivided_complete, and the
    planar part's size for apex; clique_sum reads ``pieces``, ``max_order``
    and ``drop`` from params, apex reads ``k``.
    """
    kind, n, seed, p = spec.kind, spec.n, spec.seed, spec.params
    if kind == "cycle":
        return named.cycle(5 if n is None else n)
    if kind == "v8":
        return named.v8()
    if kind == "v8_subdivision":
        return v8_subdivision(16 if n is None else n, seed)
    if kind == "subdivided_complete":
        return named.subdivided_complete(4 if n is None else n)
    if kind == "clique_sum":
        return clique_sum(
            seed,
            pieces=int(p.get("pieces", 3)),
            max_order=int(p.get("max_order", 3)),
            drop=float(p.get("drop", 0.3)),
        )
    if kind == "random_planar":
        return random_planar(10 if n is None else n, seed, float(p.get("density", 1.0)))
    if kind == "tree":
        return random_tree(10 if n is None else n, seed)
    if kind == "series_parallel":
        return random_series_parallel(10 if n is None else n, seed)
    if kind == "apex":
        return apex_instance(10 if n is None else n, int(p.get("k", 1)), seed)[0]
    raise PreconditionError(f"unknown kind {kind!r}")  # unreachable: GenSpec validates


__all__ = [
    "GenSpec",
    "KINDS",
    "apex_instance",
    "clique_sum",
    "generate",
    "random_planar",
    "random_series_parallel",
    "random_tree",
    "shuffle_labels",
    "v8_subdivision",
]
