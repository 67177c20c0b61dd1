"""Immutable simple graphs and the surgery primitives the colorers build on.

Vertices are non-negative integers that stay stable across every operation:
induced subgraphs keep their identifiers and contraction keeps the smaller
endpoint, so colorings computed on pieces can be pasted back directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .exceptions import CycleInput, PreconditionError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph with integer vertex identifiers.

    Instances are immutable and hashable; every modifying operation returns a
    new graph.

    Parameters
    ----------
    vertices : iterable of int, optional
        Vertices to include, in addition to edge endpoints.
    edges : iterable of (int, int)
        Unordered vertex pairs. Duplicates collapse; loops are rejected.
    """

    __slots__ = ("_adj", "_edges", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            v = int(v)
            if v < 0:
                raise PreconditionError(f"vertex identifiers must be non-negative, got {v}")
            adj.setdefault(v, set())
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            if u < 0 or v < 0:
                raise PreconditionError(f"vertex identifiers must be non-negative, got {(u, v)}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._edges = frozenset(_norm(u, v) for u, nb in self._adj.items() for v in nb if u < v)
        self._hash = None

    @classmethod
    def _from_adj(cls, adj: Mapping[int, Iterable[int]]) -> "Graph":
        g = cls.__new__(cls)
        g._adj = {v: frozenset(nb) for v, nb in adj.items()}
        g._edges = frozenset((u, v) for u, nb in g._adj.items() for v in nb if u < v)
        g._hash = None
        return g

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    def sorted_vertices(self) -> list[int]:
        return sorted(self._adj)

    def edge_list(self) -> list[Edge]:
        return sorted(self._edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degree_sequence(self) -> list[int]:
        return sorted((len(nb) for nb in self._adj.values()), reverse=True)

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj.values()), default=0)

    def min_degree(self) -> int:
        return min((len(nb) for nb in self._adj.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return len(self._edges)

    def adjacency(self) -> dict[int, set[int]]:
        """Return a mutable copy of the adjacency map."""
        return {v: set(nb) for v, nb in self._adj.items()}

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._adj))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj.keys() == other._adj.keys() and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._adj), self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={self.edge_list()!r})"

    # -- derived graphs ------------------------------------------------

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep`` (unknown vertices are an error)."""
        keep = set(keep)
        missing = keep - self._adj.keys()
        if missing:
            raise PreconditionError(f"vertices not in graph: {sorted(missing)}")
        return Graph._from_adj({v: self._adj[v] & keep for v in keep})

    def remove_vertices(self, drop: Iterable[int]) -> "Graph":
        drop = set(drop)
        return self.subgraph(self._adj.keys() - drop)

    def add_edge(self, u: int, v: int) -> "Graph":
        return add_edge(self, u, v)

    def contract_edge(self, u: int, v: int) -> "Graph":
        return contract_edge(self, u, v)

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        """Rename vertices through an injective ``mapping`` (missing keys stay)."""
        f = {v: mapping.get(v, v) for v in self._adj}
        if len(set(f.values())) != len(f):
            raise PreconditionError("relabel mapping is not injective")
        return Graph(f.values(), ((f[u], f[v]) for u, v in self._edges))

    def is_connected(self) -> bool:
        return len(components(self)) <= 1

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(sorted(self._adj))
        h.add_edges_from(self.edge_list())
        return h

    @classmethod
    def from_networkx(cls, h) -> "Graph":
        return cls(h.nodes(), h.edges())


@dataclass(frozen=True)
class Separation:
    """A pair of vertex sets covering the graph with no edge across the strict sides."""

    A: frozenset[int]
    B: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.A & self.B)

    @property
    def separator(self) -> frozenset[int]:
        return self.A & self.B

    def swapped(self) -> "Separation":
        return Separation(self.B, self.A)

    def is_valid(self, g: Graph) -> bool:
        if self.A | self.B != g.vertices:
            return False
        a_only, b_only = self.A - self.B, self.B - self.A
        if not a_only or not b_only:
            return False
        return all(not (g.neighbors(v) & b_only) for v in a_only)


@dataclass(frozen=True)
class SuppressionMap:
    """Result of suppressing degree-2 vertices.

    ``path_map`` maps each edge of ``suppressed`` to the list of original paths
    (as vertex tuples, endpoints included) it stands for. A list holds more
    than one path only when suppression would have produced parallel edges.
    Paths that would have become loops are kept under ``loops``.
    """

    original: Graph
    suppressed: Graph
    branch_map: dict[int, int]
    path_map: dict[Edge, list[tuple[int, ...]]]
    loops: list[tuple[int, ...]] = field(default_factory=list)

    def expand(self) -> Graph:
        """Re-subdivide ``suppressed`` using the recorded paths."""
        edges = []
        for paths in self.path_map.values():
            for path in paths:
                edges.extend(zip(path, path[1:]))
        for path in self.loops:
            edges.extend(zip(path, path[1:]))
        verts = set(self.branch_map.values())
        return Graph(verts, edges)


# -- operations --------------------------------------------------------


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return ``g + uv``; a no-op when the edge is already present."""
    if u == v:
        raise PreconditionError(f"cannot add loop at {u}")
    if u not in g or v not in g:
        raise PreconditionError(f"both endpoints must be vertices: {(u, v)}")
    if g.has_edge(u, v):
        return g
    adj = g.adjacency()
    adj[u].add(v)
    adj[v].add(u)
    return Graph._from_adj(adj)


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Simple-graph contraction of ``uv``; the merged vertex keeps ``min(u, v)``."""
    if not g.has_edge(u, v):
        raise PreconditionError(f"{(u, v)} is not an edge")
    keep, gone = (u, v) if u < v else (v, u)
    adj = g.adjacency()
    adj[keep] = (adj[keep] | adj.pop(gone)) - {keep, gone}
    for w in g.neighbors(gone):
        if w != keep:
            adj[w].discard(gone)
            adj[w].add(keep)
    return Graph._from_adj(adj)


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest vertex."""
    seen: set[int] = set()
    out = []
    for s in g.sorted_vertices():
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        out.append(frozenset(comp))
    return out


def _components_without(g: Graph, removed: set[int]) -> list[frozenset[int]]:
    seen = set(removed)
    out = []
    for s in g.sorted_vertices():
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        out.append(frozenset(comp))
    return out


def components_without(g: Graph, removed: Iterable[int]) -> list[frozenset[int]]:
    """Components of ``g`` minus ``removed``, ordered by smallest vertex."""
    return _components_without(g, set(removed))


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points of a connected graph (iterative low-link DFS)."""
    if g.n == 0:
        return frozenset()
    if len(components(g)) != 1:
        raise PreconditionError("cut_vertices requires a connected graph")
    root = min(g.vertices)
    disc = {root: 0}
    low = {root: 0}
    parent = {root: None}
    cuts = set()
    root_children = 0
    stack = [(root, iter(sorted(g.neighbors(root))))]
    counter = 1
    while stack:
        v, it = stack[-1]
        for w in it:
            if w not in disc:
                disc[w] = low[w] = counter
                counter += 1
                parent[w] = v
                if v == root:
                    root_children += 1
                stack.append((w, iter(sorted(g.neighbors(w)))))
                break
            if w != parent[v]:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            p = parent[v]
            if p is not None:
                low[p] = min(low[p], low[v])
                if p != root and low[v] >= disc[p]:
                    cuts.add(p)
    if root_children > 1:
        cuts.add(root)
    return frozenset(cuts)


def enumerate_separations(g: Graph, order: int) -> list[Separation]:
    """All separations of exactly ``order``.

    For each vertex cut X of that size, every 2-partition of the components
    of ``g - X`` gives one separation; the side holding the component with the
    smallest vertex is reported as ``A``.
    """
    if order not in (1, 2, 3):
        raise PreconditionError(f"order must be 1, 2 or 3, got {order}")
    out = []
    for cut in combinations(g.sorted_vertices(), order):
        comps = _components_without(g, set(cut))
        if len(comps) < 2:
            continue
        X = frozenset(cut)
        first, rest = comps[0], comps[1:]
        # Each nonempty proper subset of ``rest`` goes to B; everything else to A.
        for mask in range(1, 1 << len(rest)):
            a_side = set(first)
            b_side = set()
            for i, comp in enumerate(rest):
                (b_side if mask >> i & 1 else a_side).update(comp)
            out.append(Separation(frozenset(a_side) | X, frozenset(b_side) | X))
    return out


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(g.degree(v) == 2 for v in g.vertices) and len(components(g)) == 1


def suppress_degree_two(g: Graph) -> SuppressionMap:
    """Replace every maximal path through degree-2 vertices by a single edge.

    Branch vertices (degree at least 3) keep their identifiers. Paths that
    would become loops or parallel edges are remembered but leave the
    suppressed graph simple.
    """
    if g.n and len(components(g)) != 1:
        raise PreconditionError("suppress_degree_two requires a connected graph")
    if is_cycle(g):
        raise CycleInput("cannot suppress a cycle")
    if g.n and g.min_degree() < 2:
        raise PreconditionError("suppress_degree_two requires minimum degree at least 2")
    branch = [v for v in g.sorted_vertices() if g.degree(v) >= 3]
    branch_set = set(branch)
    path_map: dict[Edge, list[tuple[int, ...]]] = {}
    loops: list[tuple[int, ...]] = []
    used_edges: set[Edge] = set()
    for b in branch:
        for first in sorted(g.neighbors(b)):
            if _norm(b, first) in used_edges:
                continue
            path = [b, first]
            prev, cur = b, first
            while cur not in branch_set:
                nxt = next(w for w in g.neighbors(cur) if w != prev)
                prev, cur = cur, nxt
                path.append(cur)
            for x, y in zip(path, path[1:]):
                used_edges.add(_norm(x, y))
            end = path[-1]
            if end == b:
                loops.append(tuple(path))
                continue
            key = _norm(b, end)
            if key[0] != b:
                path.reverse()
            path_map.setdefault(key, []).append(tuple(path))
    suppressed = Graph(branch, path_map.keys())
    return SuppressionMap(
        original=g,
        suppressed=suppressed,
        branch_map={v: v for v in branch},
        path_map=path_map,
        loops=loops,
    )


# -- isomorphism -------------------------------------------------------


def refine_colors(g: Graph, rounds: int | None = None) -> dict[int, int]:
    """Colour refinement (1-WL) starting from degrees; returns canonical colour ids.

    Colour ids depend only on the isomorphism class of the rooted
    neighbourhood structure, so they can be compared across graphs refined
    together via :func:`_joint_refine`.
    """
    return _joint_refine([g], rounds)[0]


def _joint_refine(graphs: list[Graph], rounds: int | None = None) -> list[dict[int, int]]:
    cols = [{v: g.degree(v) for v in g.vertices} for g in graphs]
    limit = rounds if rounds is not None else max((g.n for g in graphs), default=0)
    for _ in range(limit):
        sigs = [
            {v: (c[v], tuple(sorted(c[w] for w in g.neighbors(v)))) for v in g.vertices}
            for g, c in zip(graphs, cols)
        ]
        palette = {s: i for i, s in enumerate(sorted({s for sig in sigs for s in sig.values()}))}
        new = [{v: palette[s] for v, s in sig.items()} for sig in sigs]
        stable = all(len(set(a.values())) == len(set(b.values())) for a, b in zip(new, cols))
        cols = new
        if stable:
            break
    return cols


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test with degree and colour-refinement pruning."""
    return find_isomorphism(g, h) is not None


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """Return an edge-preserving bijection ``V(g) -> V(h)`` or ``None``."""
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return None
    if g.n == 0:
        return {}
    cg, ch = _joint_refine([g, h])
    if sorted(cg.values()) != sorted(ch.values()):
        return None
    # Visit g's vertices so each one (after the first of its component) has a mapped neighbour.
    order: list[int] = []
    seen: set[int] = set()
    for s in sorted(g.vertices, key=lambda v: (-g.degree(v), v)):
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(g.neighbors(x), key=lambda v: (-g.degree(v), v)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    by_color: dict[int, list[int]] = {}
    for v in h.sorted_vertices():
        by_color.setdefault(ch[v], []).append(v)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        mapped_nbrs = [mapping[w] for w in g.neighbors(v) if w in mapping]
        if mapped_nbrs:
            cands = sorted(h.neighbors(mapped_nbrs[0]))
        else:
            cands = by_color[cg[v]]
        for u in cands:
            if u in used or ch[u] != cg[v]:
                continue
            nb_u = h.neighbors(u)
            if any(m not in nb_u for m in mapped_nbrs):
                continue
            # mapped non-neighbours of v must stay non-neighbours of u
            if sum(1 for w in nb_u if w in used) != len(mapped_nbrs):
                continue
            mapping[v] = u
            used.add(u)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(u)
        return False

    return dict(mapping) if extend(0) else None
