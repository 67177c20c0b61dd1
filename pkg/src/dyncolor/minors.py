"""Minor and topological-minor containment, planarity, and Halin's trichotomy.

Everything here is exponential in the worst case and meant for small graphs.
The K_t-minor test is the workhorse (it guards the K5-minor-free colorer), so
it peels off as much structure as it can before falling back to
branch-and-bound: degree-1 and degree-2 reductions, clique-sum splitting
along separations of order at most three, planarity and edge-density
shortcuts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from . import named
from .exceptions import PreconditionError, TheoremViolation
from .graph import Graph, _components_without, components, is_isomorphic

# -- planarity ---------------------------------------------------------


def _planar_adj(adj: dict[int, set[int]]) -> bool:
    n = len(adj)
    m = sum(len(nb) for nb in adj.values()) // 2
    if n <= 4 or m <= 8:
        return True
    if m > 3 * n - 6:
        return False
    h = nx.Graph()
    h.add_nodes_from(adj)
    h.add_edges_from((u, v) for u, nb in adj.items() for v in nb if u < v)
    return nx.check_planarity(h)[0]


def is_planar(g: Graph, method: str = "lr") -> bool:
    """Planarity test.

    ``method="lr"`` runs the left-right planarity algorithm (via networkx);
    ``method="kuratowski"`` searches for K5 and K3,3 subdivisions directly.
    Both decide the same property; the second is slow but easy to audit.
    """
    if method == "lr":
        return _planar_adj(g.adjacency())
    if method == "kuratowski":
        return not (
            has_topological_minor(g, named.complete(5))
            or has_topological_minor(g, named.complete_bipartite(3, 3))
        )
    raise ValueError(f"unknown planarity method {method!r}")


# -- shared reductions ---------------------------------------------------


def _reduce(adj: dict[int, set[int]], min_deg_h: int, drop_isolated: bool) -> None:
    """In place: drop vertices of degree <= 1 and suppress degree-2 vertices.

    Dropping degree-1 vertices is safe when the pattern has minimum degree 2,
    suppression when it has minimum degree 3 (branch sets and branch paths
    can always be rerouted around such vertices).
    """
    if min_deg_h < 2 and not drop_isolated:
        return
    stack = list(adj)
    while stack:
        v = stack.pop()
        if v not in adj:
            continue
        d = len(adj[v])
        if d == 0 and drop_isolated:
            del adj[v]
        elif d == 1 and min_deg_h >= 2:
            (w,) = adj.pop(v)
            adj[w].discard(v)
            stack.append(w)
        elif d == 2 and min_deg_h >= 3:
            a, b = adj.pop(v)
            adj[a].discard(v)
            adj[b].discard(v)
            adj[a].add(b)
            adj[b].add(a)
            stack.extend((a, b))


def _edge_count(adj) -> int:
    return sum(len(nb) for nb in adj.values()) // 2


def _edge_key(adj) -> frozenset:
    return frozenset((u, v) for u, nb in adj.items() for v in nb if u < v)


def _contract(adj, keep, gone) -> dict[int, set[int]]:
    """Copy of ``adj`` with ``gone`` merged into ``keep``."""
    new = {v: set(nb) for v, nb in adj.items()}
    for x in new.pop(gone):
        new[x].discard(gone)
        if x != keep:
            new[x].add(keep)
            new[keep].add(x)
    return new


def _delete_vertex(adj, v) -> dict[int, set[int]]:
    new = {x: nb - {v} for x, nb in adj.items() if x != v}
    return new


def _comps_adj(adj, removed=()) -> list[set[int]]:
    seen = set(removed)
    out = []
    for s in sorted(adj):
        if s in seen:
            continue
        seen.add(s)
        comp, stack = {s}, [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        out.append(comp)
    return out


# -- complete-graph minors -----------------------------------------------


def _find_split(adj) -> tuple[set[int], set[int], set[int]] | None:
    """A separation of order <= 3 usable for torso splitting, smallest order first.

    Order-3 separations must leave at least two vertices on each strict side,
    otherwise the torso is no smaller than the graph.
    """
    verts = sorted(adj)
    for order in (1, 2, 3):
        for cut in combinations(verts, order):
            comps = _comps_adj(adj, cut)
            if len(comps) < 2:
                continue
            comps.sort(key=lambda c: (-len(c), min(c)))
            head = 1 if len(comps[0]) >= 2 else 2
            a_side = set().union(*comps[:head])
            b_side = set().union(*comps[head:])
            if order == 3 and (len(a_side) < 2 or len(b_side) < 2):
                continue
            return set(cut), a_side, b_side
    return None


def _torso(adj, side: set[int], cut: set[int]) -> dict[int, set[int]]:
    keep = side | cut
    t = {v: adj[v] & keep for v in keep}
    for x, y in combinations(cut, 2):
        t[x].add(y)
        t[y].add(x)
    return t


def _reduce_fixed(adj, fixed: frozenset, h_min: int) -> bool:
    """In place reductions that respect vertices fixed as singleton branch sets.

    Returns False when a fixed vertex can no longer carry its pattern vertex.
    """
    stack = list(adj)
    while stack:
        v = stack.pop()
        if v not in adj:
            continue
        d = len(adj[v])
        if v in fixed:
            if d < h_min:
                return False
            continue
        if d == 0 and h_min >= 1 or d == 1 and h_min >= 2:
            for w in adj.pop(v):
                adj[w].discard(v)
                stack.append(w)
        elif d == 2 and h_min >= 3:
            a, b = sorted(adj.pop(v))
            adj[a].discard(v)
            adj[b].discard(v)
            if a in fixed and b in fixed:
                stack.extend((a, b))
                continue
            keep = a if a not in fixed else b
            other = b if keep == a else a
            adj[keep].add(other)
            adj[other].add(keep)
            stack.extend((a, b))
    return True


def _model_search(adj, h: Graph, memo: set, fixed: frozenset = frozenset()) -> bool:
    """Exhaustive search for an ``h`` minor model.

    Pick an unfixed vertex v of minimum degree. In any model v is unused
    (delete it), shares its branch set with a neighbour (contract that
    edge), or is a branch set on its own (fix it). ``fixed`` vertices are
    never deleted or merged.
    """
    adj = {v: set(nb) for v, nb in adj.items()}
    nh, mh = h.n, h.m
    complete = mh == nh * (nh - 1) // 2
    if not _reduce_fixed(adj, fixed, h.min_degree()):
        return False
    fixed = frozenset(v for v in fixed if v in adj)
    n, m = len(adj), _edge_count(adj)
    if n < nh or m < mh or len(fixed) > nh:
        return False
    if complete and any(y not in adj[x] for x, y in combinations(sorted(fixed), 2)):
        return False
    if n == nh:
        hd = h.degree_sequence()
        gd = sorted((len(nb) for nb in adj.values()), reverse=True)
        if any(a < b for a, b in zip(gd, hd)):
            return False
        return _spanning_contains(adj, h)
    if not fixed:
        if complete and nh == 5 and m >= 3 * n - 5:
            return True
    if nh >= 5 and not _PLANAR_CACHE.get(h, True) and _planar_adj(adj):
        return False
    key = (_edge_key(adj), frozenset(adj), fixed)
    if key in memo:
        return False
    free = [v for v in adj if v not in fixed]
    v = min(free, key=lambda x: (len(adj[x]), x))
    for w in sorted(adj[v], key=lambda x: (len(adj[x]), x)):
        if w not in fixed and _model_search(_contract(adj, w, v), h, memo, fixed):
            return True
    if _model_search(_delete_vertex(adj, v), h, memo, fixed):
        return True
    if len(adj[v]) >= h.min_degree() and _model_search(adj, h, memo, fixed | {v}):
        return True
    memo.add(key)
    return False


_PLANAR_CACHE: dict[Graph, bool] = {}


def _pattern(h: Graph) -> Graph:
    if h not in _PLANAR_CACHE:
        _PLANAR_CACHE[h] = is_planar(h)
    return h


def _kt_bb(adj, t: int, memo: set) -> bool:
    return _model_search(adj, _pattern(named.complete(t)), memo)


def _kt(adj, t: int, memo: set) -> bool:
    adj = {v: set(nb) for v, nb in adj.items()}
    if t <= 1:
        return len(adj) >= t
    if t == 2:
        return _edge_count(adj) >= 1
    if t == 3:
        comps = _comps_adj(adj)
        return _edge_count(adj) > len(adj) - len(comps)
    _reduce(adj, t - 1, True)
    n, m = len(adj), _edge_count(adj)
    if n < t or m < t * (t - 1) // 2:
        return False
    if t == 4:
        # every graph of minimum degree >= 3 has a K4 minor
        return True
    if n == t:
        return m == t * (t - 1) // 2
    if t == 5 and m >= 3 * n - 5:
        return True
    if _planar_adj(adj):
        return False
    comps = _comps_adj(adj)
    if len(comps) > 1:
        return any(_kt({v: adj[v] for v in c}, t, memo) for c in comps)
    split = _find_split(adj)
    if split is not None:
        cut, a_side, b_side = split
        # Any K_t model (t > |cut|) survives in one of the two torsos.
        hit_a = _kt(_torso(adj, a_side, cut), t, memo)
        hit_b = hit_a or _kt(_torso(adj, b_side, cut), t, memo)
        if not hit_a and not hit_b:
            return False
        # Torsos of order <= 2 cuts in a 2-connected graph are minors of it.
        clique = all(y in adj[x] for x, y in combinations(cut, 2))
        if len(cut) <= 2 or clique:
            return True
    return _kt_bb(adj, t, memo)


def has_complete_minor(g: Graph, t: int) -> bool:
    """True iff K_t is a minor of ``g``."""
    return _kt(g.adjacency(), t, set())


# -- general minors ------------------------------------------------------


def _spanning_contains(adj, h: Graph) -> bool:
    """Does ``adj`` (with exactly |V(h)| vertices) contain ``h`` as a spanning subgraph?"""
    order = sorted(h.vertices, key=lambda v: (-h.degree(v), v))
    gdeg = {v: len(nb) for v, nb in adj.items()}
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i):
        if i == len(order):
            return True
        a = order[i]
        for x in sorted(adj):
            if x in used or gdeg[x] < h.degree(a):
                continue
            if all(mapping[b] in adj[x] for b in h.neighbors(a) if b in mapping):
                mapping[a] = x
                used.add(x)
                if extend(i + 1):
                    return True
                del mapping[a]
                used.discard(x)
        return False

    return extend(0)


def has_minor(g: Graph, h: Graph) -> bool:
    """True iff ``h`` is a minor of ``g``.

    Complete patterns use the structural K_t test; anything else goes to a
    delete/contract/fix branch and bound pruned by vertex count, edge count,
    degree sequence and (for nonplanar patterns) planarity.
    """
    if h.n == 0:
        return True
    if g.n < h.n or g.m < h.m:
        return False
    if h.m == h.n * (h.n - 1) // 2:
        return has_complete_minor(g, h.n)
    return _model_search(g.adjacency(), _pattern(h), set())


# -- topological minors ------------------------------------------------------


def _twin_classes(h: Graph) -> dict[int, int]:
    """Map each vertex to the smallest vertex sharing its open or closed neighbourhood."""
    rep = {}
    for v in h.sorted_vertices():
        for u in h.sorted_vertices():
            if u >= v:
                rep[v] = v
                break
            if h.neighbors(u) - {v} == h.neighbors(v) - {u}:
                rep[v] = u
                break
    return rep


def _simple_paths(adj, s, t, blocked):
    """All simple s-t paths whose internal vertices avoid ``blocked``, shortest-first-ish."""
    stack = [(s, [s])]
    while stack:
        x, p = stack.pop()
        for y in sorted(adj[x], reverse=True):
            if y == t:
                yield p + [t]
            elif y not in blocked and y not in p:
                stack.append((y, p + [y]))


def has_topological_minor(g: Graph, h: Graph) -> bool:
    """True iff some subgraph of ``g`` is a subdivision of ``h``.

    Branch vertices are assigned injectively (twins of ``h`` in increasing
    order to skip symmetric repeats) and each edge of ``h`` is routed along
    an internally disjoint path as soon as both ends are placed.
    """
    if h.n == 0:
        return True
    if g.n < h.n or g.m < h.m:
        return False
    adj = g.adjacency()
    _reduce(adj, h.min_degree(), h.min_degree() >= 1)
    if len(adj) < h.n or _edge_count(adj) < h.m:
        return False
    gdeg = sorted((len(nb) for nb in adj.values()), reverse=True)
    if any(a < b for a, b in zip(gdeg, h.degree_sequence())):
        return False
    # place h's vertices so each (after the first) touches an already placed one
    order: list[int] = []
    for comp in components(h):
        start = min(comp, key=lambda v: (-h.degree(v), v))
        seen = {start}
        frontier = [start]
        while frontier:
            order.extend(frontier)
            nxt = []
            for x in frontier:
                for y in sorted(h.neighbors(x), key=lambda v: (-h.degree(v), v)):
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
    twin = _twin_classes(h)
    phi: dict[int, int] = {}
    used: set[int] = set()

    def route(pending: list[tuple[int, int]], i: int, nxt_vertex: int) -> bool:
        if i == len(pending):
            return place(nxt_vertex)
        a, b = pending[i]
        s, t = phi[a], phi[b]
        for p in _simple_paths(adj, s, t, used):
            inner = p[1:-1]
            if any(x in used for x in inner):
                continue
            used.update(inner)
            if route(pending, i + 1, nxt_vertex):
                return True
            used.difference_update(inner)
        return False

    def place(k: int) -> bool:
        if k == len(order):
            return True
        a = order[k]
        lower = max((phi[b] for b in phi if twin[b] == twin[a] and b != a), default=-1)
        for x in sorted(adj):
            if x in used or len(adj[x]) < h.degree(a) or x <= lower:
                continue
            phi[a] = x
            used.add(x)
            pending = [(b, a) for b in sorted(h.neighbors(a)) if b in phi and b != a]
            if route(pending, 0, k + 1):
                return True
            del phi[a]
            used.discard(x)
        return False

    return place(0)


# -- Halin's trichotomy ------------------------------------------------------


class HalinTag(enum.Enum):
    PLANAR = "Planar"
    IS_V8 = "IsV8"
    THREE_CUT = "ThreeCut"


@dataclass(frozen=True)
class HalinVerdict:
    tag: HalinTag
    cut: frozenset[int] | None = None

    def __post_init__(self):
        if (self.tag is HalinTag.THREE_CUT) != (self.cut is not None):
            raise ValueError("cut must be given exactly when tag is ThreeCut")


def is_k_connected(g: Graph, k: int) -> bool:
    if g.n <= k:
        return False
    verts = g.sorted_vertices()
    for size in range(k):
        for cut in combinations(verts, size):
            if len(_components_without(g, set(cut))) != 1:
                return False
    return True


def classify_3connected(g: Graph) -> HalinVerdict:
    """Planar, isomorphic to V8, or a vertex triple leaving at least three components.

    Verdicts are tried in that fixed order.

    Raises
    ------
    PreconditionError
        If ``g`` is not 3-connected.
    TheoremViolation
        If none of the three outcomes holds (impossible for K5-minor-free input).
    """
    if not is_k_connected(g, 3):
        raise PreconditionError("classify_3connected requires a 3-connected graph")
    if is_planar(g):
        return HalinVerdict(HalinTag.PLANAR)
    if is_isomorphic(g, named.v8()):
        return HalinVerdict(HalinTag.IS_V8)
    for cut in combinations(g.sorted_vertices(), 3):
        if len(_components_without(g, set(cut))) >= 3:
            return HalinVerdict(HalinTag.THREE_CUT, frozenset(cut))
    raise TheoremViolation("3-connected nonplanar graph is neither V8 nor has a 3-cut with 3 components")
