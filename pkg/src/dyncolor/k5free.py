"""Dynamic 4-coloring of connected K5-minor-free graphs other than C5.

The colorer follows the minimum-counterexample argument as a recursion:

1. planar pieces, and pieces on at most eight vertices, go to the exact
   solver;
2. a cut vertex splits the graph into two pieces glued at one vertex;
3. a separation of order two with at least two vertices on each strict side
   is chosen with the nonplanar side as small as possible, that side is
   colored, and the other side is colored as an auxiliary minor (``+xy``
   when the two cut vertices got different colours, ``(+xy)/xy`` when they
   got the same colour);
4. otherwise degree-2 vertices are suppressed; the result is V8 (then the
   graph has maximum degree three and the exact solver finishes it) or has
   three vertices whose removal leaves three components, which yields an
   order-three separation merged the same way with a triangle on the cut.

Whenever an auxiliary piece is a 5-cycle, which has no dynamic 4-coloring,
a fixed proper coloring that leaves only the attachment vertices unhappy is
used instead (see ``C5_TABLE``).
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Mapping

from .core import Coloring, solve_exact, verify_dynamic
from .exceptions import InternalError, NotApplicable, NotColorable, PreconditionError, TheoremViolation
from .graph import (
    Graph,
    Separation,
    _components_without,
    add_edge,
    components,
    contract_edge,
    cut_vertices,
    enumerate_separations,
    is_isomorphic,
    suppress_degree_two,
)
from .minors import HalinTag, classify_3connected, has_complete_minor, is_planar
from .named import v8

log = logging.getLogger(__name__)

COLORS = (1, 2, 3, 4)


class Step(enum.Enum):
    ORDER1 = "Order1"
    ORDER2_CASE1 = "Order2Case1"
    ORDER2_CASE2 = "Order2Case2"
    ORDER3_CASE1 = "Order3Case1"
    ORDER3_CASE2 = "Order3Case2"
    ORDER3_CASE3 = "Order3Case3"
    PLANAR_BASE = "PlanarBase"
    V8_BASE = "V8Base"
    C5_FALLBACK = "C5Fallback"
    ORACLE_FALLBACK = "OracleFallback"


@dataclass(frozen=True)
class TraceStep:
    kind: Step
    depth: int
    size: tuple[int, int]
    separator: tuple[int, ...] = ()
    subproblems: tuple[tuple[int, int], ...] = ()
    note: str = ""

    def line(self) -> str:
        parts = [f"{'  ' * self.depth}{self.kind.value}", f"n={self.size[0]}", f"m={self.size[1]}"]
        if self.separator:
            parts.append("sep=" + ",".join(map(str, self.separator)))
        if self.subproblems:
            parts.append("sub=" + ";".join(f"{n}/{m}" for n, m in self.subproblems))
        if self.note:
            parts.append(self.note)
        return " ".join(parts)


@dataclass
class ReductionTrace:
    """Which reduction fired at each recursion step, in call order."""

    steps: list[TraceStep] = field(default_factory=list)

    def add(self, *args, at: int | None = None, **kwargs) -> TraceStep:
        step = TraceStep(*args, **kwargs)
        if at is None:
            self.steps.append(step)
        else:
            self.steps.insert(at, step)
        return step

    def kinds(self) -> list[Step]:
        return [s.kind for s in self.steps]

    def fallbacks(self) -> list[TraceStep]:
        return [s for s in self.steps if s.kind is Step.ORACLE_FALLBACK]

    def edges_decrease(self) -> bool:
        return all(m < s.size[1] for s in self.steps for _, m in s.subproblems)

    def lines(self) -> list[str]:
        return [s.line() for s in self.steps]

    def __len__(self):
        return len(self.steps)


# Colours along the cycle, starting at the attachment vertex (or the merged
# vertex). In every entry only the first vertex, and in the order-2/3 case-1
# and case-2 entries also the last one, can be unhappy.
C5_TABLE: dict[str, tuple[int, ...]] = {
    "order1": (1, 2, 3, 4, 2),
    "order2_case1": (1, 2, 3, 4, 2),
    "order2_case2": (1, 2, 3, 4, 2),
    "order3_case2": (1, 2, 4, 3, 2),
    "order3_case3": (1, 2, 3, 4, 2),
}


def is_c5(g: Graph) -> bool:
    return g.n == 5 and g.m == 5 and all(g.degree(v) == 2 for v in g.vertices) and g.is_connected()


def c5_cycle_order(h: Graph, start: int, end: int | None = None) -> list[int]:
    """Vertices of the 5-cycle ``h`` in cyclic order from ``start``.

    The direction is chosen so that ``end`` (a neighbour of ``start``) comes
    last; without ``end`` the smaller neighbour of ``start`` comes second.
    """
    nbrs = sorted(h.neighbors(start))
    if end is not None:
        if end not in nbrs:
            raise PreconditionError(f"{end} is not adjacent to {start}")
        second = nbrs[0] if nbrs[1] == end else nbrs[1]
    else:
        second = nbrs[0]
    order = [start, second]
    while len(order) < 5:
        order.append(next(w for w in h.neighbors(order[-1]) if w != order[-2]))
    return order


def c5_table_coloring(h: Graph, entry: str, start: int, end: int | None = None) -> Coloring:
    order = c5_cycle_order(h, start, end)
    return Coloring(4, dict(zip(order, C5_TABLE[entry])))


def _first_permutation(ok: Callable[[dict[int, int]], bool]) -> dict[int, int] | None:
    for perm in permutations(COLORS):
        mapping = dict(zip(COLORS, perm))
        if ok(mapping):
            return mapping
    return None


def _permute_to_match(c2: Coloring, fixed: Mapping[int, int]) -> Coloring:
    """Permute ``c2``'s colours so that ``c2[v] == fixed[v]`` for every key."""
    perm = _first_permutation(lambda p: all(p[c2[v]] == col for v, col in fixed.items()))
    if perm is None:
        raise InternalError(f"no colour permutation matches {dict(fixed)}")
    return c2.permuted(perm)


def _combine(g: Graph, c1: Coloring, c2: Coloring, a_side) -> Coloring:
    assignment = {v: c2[v] for v in g.vertices if v not in a_side}
    assignment.update({v: c1[v] for v in a_side})
    c = Coloring(4, assignment)
    report = verify_dynamic(g, c)
    if not report.ok:
        raise InternalError(f"merged coloring is not dynamic: {report.summary()}")
    return c


# -- the merges --------------------------------------------------------------


def merge_order1(g: Graph, sep: Separation, c1: Coloring, c2: Coloring) -> Coloring:
    """Glue colorings of ``G[A]`` and ``G[B]`` at the single shared vertex.

    ``c2`` is permuted (first success in lexicographic order) so that it agrees
    with ``c1`` on the cut vertex and some neighbour of the cut vertex on the
    B side differs in colour from some neighbour on the A side.
    """
    if sep.order != 1:
        raise PreconditionError("merge_order1 needs a separation of order 1")
    (v,) = sep.separator
    xs = sorted(g.neighbors(v) & (sep.A - sep.B))
    ys = sorted(g.neighbors(v) & (sep.B - sep.A))
    if not xs or not ys:
        raise PreconditionError("cut vertex must have neighbours on both sides")

    def ok(p):
        return p[c2[v]] == c1[v] and any(p[c2[y]] != c1[x] for x in xs for y in ys)

    perm = _first_permutation(ok)
    if perm is None:
        raise InternalError("no colour permutation fixes the cut vertex and makes it happy")
    return _combine(g, c1, c2.permuted(perm), sep.A)


def _nbrs_in(g: Graph, v: int, side) -> set[int]:
    return g.neighbors(v) & side


def order2_conditions(g: Graph, sep: Separation) -> list[str]:
    """Violated hypotheses of the order-2 merge (empty when it applies)."""
    problems = []
    x, y = sorted(sep.separator)
    for s in (x, y):
        if len(_nbrs_in(g, s, sep.A)) < 2:
            problems.append(f"(i) cut vertex {s} has fewer than two neighbours in G[A]")
    X = {x, y}
    b_twins = [u for u in sep.B - sep.A if g.neighbors(u) == X]
    if b_twins:
        a_twins = [u for u in sep.A - sep.B if g.neighbors(u) == X]
        if not g.has_edge(x, y) and not a_twins:
            problems.append(f"(ii) vertex {b_twins[0]} sees exactly the cut but A has no twin and xy is absent")
    return problems


def order3_conditions(g: Graph, sep: Separation) -> list[str]:
    """Violated hypotheses of the order-3 merge (empty when it applies)."""
    problems = []
    X = set(sep.separator)
    for s in sorted(X):
        if len(_nbrs_in(g, s, sep.A)) < 2:
            problems.append(f"(i) cut vertex {s} has fewer than two neighbours in G[A]")
    heavy = [v for v in sep.A - sep.B if g.degree(v) > 2]
    if len(heavy) < 2:
        problems.append("(ii) A\\B has fewer than two vertices of degree above two")
    for u in sorted(sep.B - sep.A):
        nb = g.neighbors(u)
        if nb <= X:
            linked = any(g.has_edge(a, b) for a, b in combinations(sorted(nb), 2))
            twin = any(g.neighbors(w) == nb for w in sep.A - sep.B)
            if not linked and not twin:
                problems.append(f"(iii) vertex {u} sees only the cut, unlinked and untwinned")
    return problems


Colorer = Callable[[Graph], Coloring]


def _default_colorer(trace: ReductionTrace | None, depth: int) -> Colorer:
    return lambda h: _Recursion(trace if trace is not None else ReductionTrace()).color(h, depth + 1)


def _color_aux(
    g: Graph,
    sep: Separation,
    aux: Graph,
    kind: Step,
    entry: str,
    start: int,
    end: int | None,
    colorer: Colorer,
    trace: ReductionTrace | None,
    depth: int,
    at: int | None,
) -> Coloring:
    """Record the merge step, then color the auxiliary graph (table entry for C5)."""
    c5 = is_c5(aux)
    if trace is not None:
        ga = g.subgraph(sep.A)
        subs = ((ga.n, ga.m), (aux.n, aux.m))
        trace.add(kind, depth, (g.n, g.m), tuple(sorted(sep.separator)), subs, "c5" if c5 else "", at=at)
        if c5:
            trace.add(Step.C5_FALLBACK, depth + 1, (aux.n, aux.m), (start,))
    if c5:
        return c5_table_coloring(aux, entry, start, end)
    return colorer(aux)


def _expand(c2: Coloring, merged: int, group) -> Coloring:
    return Coloring(4, {**c2.assignment, **{v: c2[merged] for v in group}})


def merge_order2(
    g: Graph,
    sep: Separation,
    c1: Coloring,
    colorer: Colorer | None = None,
    trace: ReductionTrace | None = None,
    depth: int = 0,
    *,
    _at: int | None = None,
) -> Coloring:
    """Extend a dynamic 4-coloring ``c1`` of ``G[A]`` across an order-2 cut {x, y}.

    ``colorer`` colors an auxiliary connected K5-minor-free graph other than
    C5 (default: the recursive colorer of this module).
    """
    colorer = colorer or _default_colorer(trace, depth)
    if sep.order != 2:
        raise PreconditionError("merge_order2 needs a separation of order 2")
    problems = order2_conditions(g, sep)
    if problems:
        raise NotApplicable("; ".join(problems))
    x, y = sorted(sep.separator)
    gb = g.subgraph(sep.B)
    if c1[x] != c1[y]:
        aux = add_edge(gb, x, y)
        c2 = _color_aux(g, sep, aux, Step.ORDER2_CASE1, "order2_case1", x, y, colorer, trace, depth, _at)
        c2 = _permute_to_match(c2, {x: c1[x], y: c1[y]})
        return _combine(g, c1, c2, sep.A)
    for u in sorted(sep.B - sep.A):
        if g.neighbors(u) == {x, y}:
            raise InternalError(f"vertex {u} sees only the cut but c1(x) = c1(y)")
    aux = contract_edge(add_edge(gb, x, y), x, y)
    c2 = _color_aux(g, sep, aux, Step.ORDER2_CASE2, "order2_case2", x, None, colorer, trace, depth, _at)
    c2 = _expand(_permute_to_match(c2, {x: c1[x]}), x, (y,))
    return _combine(g, c1, c2, sep.A)


def merge_order3(
    g: Graph,
    sep: Separation,
    c1: Coloring,
    colorer: Colorer | None = None,
    trace: ReductionTrace | None = None,
    depth: int = 0,
    *,
    _at: int | None = None,
) -> Coloring:
    """Extend a dynamic 4-coloring ``c1`` of ``G[A]`` across an order-3 cut.

    The case is decided by how many distinct colours ``c1`` puts on the cut.
    """
    colorer = colorer or _default_colorer(trace, depth)
    if sep.order != 3:
        raise PreconditionError("merge_order3 needs a separation of order 3")
    problems = order3_conditions(g, sep)
    if problems:
        raise NotApplicable("; ".join(problems))
    cut = sorted(sep.separator)
    gb = g.subgraph(sep.B)
    distinct = len({c1[v] for v in cut})
    if distinct == 3:
        x, y, z = cut
        aux = add_edge(add_edge(add_edge(gb, x, y), y, z), x, z)
        c2 = _color_aux(g, sep, aux, Step.ORDER3_CASE1, "", x, None, colorer, trace, depth, _at)
        c2 = _permute_to_match(c2, {v: c1[v] for v in cut})
        return _combine(g, c1, c2, sep.A)
    if distinct == 2:
        x, y = next((a, b) for a, b in combinations(cut, 2) if c1[a] == c1[b])
        (z,) = [v for v in cut if v not in (x, y)]
        aux = contract_edge(add_edge(add_edge(gb, x, y), y, z), x, y)
        c2 = _color_aux(g, sep, aux, Step.ORDER3_CASE2, "order3_case2", x, z, colorer, trace, depth, _at)
        c2 = _expand(_permute_to_match(c2, {x: c1[x], z: c1[z]}), x, (y,))
        return _combine(g, c1, c2, sep.A)
    for u in sorted(sep.B - sep.A):
        if g.neighbors(u) == set(cut):
            raise InternalError(f"vertex {u} sees exactly the cut but the cut is monochromatic")
    x, y, z = cut
    aux = contract_edge(contract_edge(add_edge(add_edge(gb, x, y), y, z), x, y), x, z)
    c2 = _color_aux(g, sep, aux, Step.ORDER3_CASE3, "order3_case3", x, None, colorer, trace, depth, _at)
    c2 = _expand(_permute_to_match(c2, {x: c1[x]}), x, (y, z))
    return _combine(g, c1, c2, sep.A)


# -- choosing separations ---------------------------------------------------


def select_separation2(g: Graph) -> Separation:
    """The order-2 separation the merge is applied to.

    Among separations with at least two vertices on each strict side, keep
    those whose A side plus the edge xy is nonplanar and take the one with
    the fewest vertices in A (ties broken by the sorted vertex list). If some
    vertex of B\\A has exactly x and y as neighbours, it is moved to A.

    Raises
    ------
    NotApplicable
        If no such separation exists.
    """
    best = None
    for sep in enumerate_separations(g, 2):
        if len(sep.A - sep.B) < 2 or len(sep.B - sep.A) < 2:
            continue
        x, y = sorted(sep.separator)
        for cand in (sep, sep.swapped()):
            if is_planar(add_edge(g.subgraph(cand.A), x, y)):
                continue
            rank = (len(cand.A), sorted(cand.A))
            if best is None or rank < best[0]:
                best = (rank, cand)
    if best is None:
        raise NotApplicable("no order-2 separation with a nonplanar side and two vertices per strict side")
    sep = best[1]
    X = sep.separator
    movers = sorted(u for u in sep.B - sep.A if g.neighbors(u) == X)
    if movers:
        u = movers[0]
        sep = Separation(sep.A | {u}, sep.B - {u})
    return sep


def has_order2_split(g: Graph) -> bool:
    return any(
        len(s.A - s.B) > 1 and len(s.B - s.A) > 1 for s in enumerate_separations(g, 2)
    )


def lift_three_cut(g: Graph, X) -> Separation:
    """Turn a vertex triple X whose removal leaves three heavy components into a separation.

    C is a component of ``g - X`` with more than one vertex if there is one
    (preferring components holding a vertex of degree above two), otherwise
    a singleton of degree three; the separation is ``(V - C, X + C)``.

    Raises
    ------
    PreconditionError
        If fewer than three components of ``g - X`` contain a vertex of degree above two.
    NotApplicable
        If the resulting separation misses a hypothesis of the order-3 merge.
    """
    X = frozenset(X)
    if len(X) != 3 or not X <= g.vertices:
        raise PreconditionError("X must be three vertices of g")
    comps = _components_without(g, set(X))
    heavy = [c for c in comps if any(g.degree(v) > 2 for v in c)]
    if len(heavy) < 3:
        raise PreconditionError(f"g - X has only {len(heavy)} components with a vertex of degree > 2")
    big = [c for c in comps if len(c) > 1]
    if big:
        heavy_big = [c for c in big if c in heavy]
        C = (heavy_big or big)[0]
    else:
        C = next(c for c in comps if all(g.degree(v) == 3 for v in c))
    sep = Separation(g.vertices - C, X | C)
    problems = order3_conditions(g, sep)
    if problems:
        raise NotApplicable("; ".join(problems))
    return sep


# -- the recursion -------------------------------------------------------------


class _Recursion:
    def __init__(self, trace: ReductionTrace, time_limit: float | None = None):
        self.trace = trace
        self.time_limit = time_limit

    def _exact(self, g: Graph) -> Coloring | None:
        return solve_exact(g, 4, time_limit=self.time_limit)

    def _fallback(self, g: Graph, depth: int, reason: str) -> Coloring:
        log.warning("falling back to the exact solver on n=%d m=%d: %s", g.n, g.m, reason)
        self.trace.add(Step.ORACLE_FALLBACK, depth, (g.n, g.m), note=reason)
        c = self._exact(g)
        if c is None:
            raise TheoremViolation(f"exact fallback found no dynamic 4-coloring ({reason})", self.trace)
        return c

    def color(self, g: Graph, depth: int = 0) -> Coloring:
        if is_c5(g):
            raise TheoremViolation("recursion reached a 5-cycle", self.trace)
        size = (g.n, g.m)
        planar = is_planar(g)
        if g.n <= 8 or planar:
            # V8 itself is small enough for the base case but is not planar
            kind = Step.V8_BASE if not planar and g.m == 12 and is_isomorphic(g, v8()) else Step.PLANAR_BASE
            self.trace.add(kind, depth, size)
            c = self._exact(g)
            if c is None:
                raise TheoremViolation(f"no dynamic 4-coloring of base piece {g.edge_list()}", self.trace)
            return c
        mark = len(self.trace)
        try:
            cuts = cut_vertices(g)
            if cuts:
                return self._order1(g, min(cuts), depth)
            if has_order2_split(g):
                return self._order2(g, depth)
            return self._order3(g, depth)
        except TheoremViolation:
            raise
        except NotApplicable as exc:
            self._discard_from(mark)
            return self._fallback(g, depth, f"precondition: {exc}")
        except InternalError as exc:
            self._discard_from(mark)
            return self._fallback(g, depth, f"internal: {exc}")

    def _discard_from(self, mark: int) -> None:
        # steps of the abandoned attempt go, earlier fallback events stay
        kept = [s for s in self.trace.steps[mark:] if s.kind is Step.ORACLE_FALLBACK]
        del self.trace.steps[mark:]
        self.trace.steps.extend(kept)

    def _order1(self, g: Graph, v: int, depth: int) -> Coloring:
        comps = _components_without(g, {v})
        a_side = frozenset(comps[0]) | {v}
        b_side = frozenset().union(*comps[1:]) | {v}
        sep = Separation(a_side, b_side)
        g1, g2 = g.subgraph(sep.A), g.subgraph(sep.B)
        if is_c5(g2):
            sep, g1, g2 = sep.swapped(), g2, g1
        self.trace.add(Step.ORDER1, depth, (g.n, g.m), (v,), ((g1.n, g1.m), (g2.n, g2.m)))
        if is_c5(g1):
            c1 = c5_table_coloring(g1, "order1", v)
            self.trace.add(Step.C5_FALLBACK, depth + 1, (g1.n, g1.m), (v,))
        else:
            c1 = self.color(g1, depth + 1)
        c2 = self.color(g2, depth + 1)
        return merge_order1(g, sep, c1, c2)

    def _order2(self, g: Graph, depth: int) -> Coloring:
        sep = select_separation2(g)
        problems = order2_conditions(g, sep)
        if problems:
            raise NotApplicable("; ".join(problems))
        ga = g.subgraph(sep.A)
        if is_c5(ga):
            sep, ga = sep.swapped(), g.subgraph(sep.B)
        at = len(self.trace)
        c1 = self.color(ga, depth + 1)
        return merge_order2(g, sep, c1, lambda h: self.color(h, depth + 1), self.trace, depth, _at=at)

    def _order3(self, g: Graph, depth: int) -> Coloring:
        sup = suppress_degree_two(g)
        verdict = classify_3connected(sup.suppressed)
        if verdict.tag is HalinTag.IS_V8:
            self.trace.add(Step.V8_BASE, depth, (g.n, g.m))
            c = self._exact(g)
            if c is None:
                raise TheoremViolation("V8 subdivision without a dynamic 4-coloring", self.trace)
            return c
        if verdict.tag is HalinTag.PLANAR:
            raise InternalError("suppressed graph of a nonplanar graph classified planar", self.trace)
        cut = frozenset(sup.branch_map[v] for v in verdict.cut)
        sep = lift_three_cut(g, cut)
        ga = g.subgraph(sep.A)
        at = len(self.trace)
        c1 = self.color(ga, depth + 1)
        return merge_order3(g, sep, c1, lambda h: self.color(h, depth + 1), self.trace, depth, _at=at)


@dataclass(frozen=True)
class K5FreeResult:
    coloring: Coloring
    trace: ReductionTrace


def color_k5free(
    g: Graph,
    *,
    check_minor: bool = True,
    time_limit: float | None = None,
) -> K5FreeResult:
    """Dynamic 4-coloring of a connected K5-minor-free graph other than C5.

    Parameters
    ----------
    g : Graph
        Connected, K5-minor-free, not a 5-cycle.
    check_minor : bool
        Verify K5-minor-freeness up front (exponential in the worst case).
    time_limit : float, optional
        Per-call limit for the exact solver, in seconds.

    Returns
    -------
    K5FreeResult
        The verified coloring and the reduction trace that produced it.

    Raises
    ------
    NotColorable
        If ``g`` is a 5-cycle.
    PreconditionError
        If ``g`` is disconnected or has a K5 minor.
    InternalError
        If the final coloring fails verification.
    """
    if g.n and not g.is_connected():
        raise PreconditionError("color_k5free requires a connected graph")
    if is_c5(g):
        raise NotColorable("C5 has no dynamic 4-coloring")
    if check_minor and has_complete_minor(g, 5):
        raise PreconditionError("graph has a K5 minor")
    trace = ReductionTrace()
    coloring = _Recursion(trace, time_limit).color(g)
    report = verify_dynamic(g, coloring)
    if not report.ok or coloring.num_colors > 4:
        raise InternalError(f"final coloring failed verification: {report.summary()}", trace)
    return K5FreeResult(coloring, trace)


def color_components(g: Graph, colorer: Callable[[Graph], Coloring], k: int) -> tuple[Coloring, list[frozenset[int]]]:
    """Color each component separately; C5 components are reported, not colored."""
    assignment: dict[int, int] = {}
    c5s = []
    for comp in components(g):
        piece = g.subgraph(comp)
        if is_c5(piece):
            c5s.append(comp)
            continue
        assignment.update(colorer(piece).assignment)
    return Coloring(k, assignment), c5s


__all__ = [
    "C5_TABLE",
    "K5FreeResult",
    "ReductionTrace",
    "Step",
    "TraceStep",
    "c5_table_coloring",
    "color_components",
    "color_k5free",
    "is_c5",
    "lift_three_cut",
    "merge_order1",
    "merge_order2",
    "merge_order3",
    "order2_conditions",
    "order3_conditions",
    "select_separation2",
]
