"""Colorers with larger palettes: topological-minor degeneracy, apex graphs,
and the color budgets for graphs without a K_t (topological) minor.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext

from .core import Coloring, solve_exact, verify_dynamic
from .exceptions import DegeneracyViolation, InternalError, NotColorable, PreconditionError
from .graph import Graph, add_edge, components
from .minors import is_planar

log = logging.getLogger(__name__)


class Mode(enum.Enum):
    TOPOLOGICAL_MINOR = "topological"
    MINOR = "minor"


@dataclass(frozen=True)
class BudgetMode:
    mode: Mode
    t: int

    def __post_init__(self):
        if isinstance(self.mode, str):
            object.__setattr__(self, "mode", Mode(self.mode))
        if self.t < 2:
            raise PreconditionError(f"t must be at least 2, got {self.t}")


def _floor_16t_sqrt_log2(t: int) -> int:
    if t & (t - 1) == 0:
        # log2 t is an integer, so the value is sqrt of an integer
        return math.isqrt(256 * t * t * (t.bit_length() - 1))
    with localcontext() as ctx:
        ctx.prec = 60
        log2t = Decimal(t).ln() / Decimal(2).ln()
        value = 16 * t * log2t.sqrt()
    # log2 t is irrational here, so value is never an integer and 60 digits
    # leave no doubt about the floor
    return int(value)


def budget(mode: BudgetMode) -> int:
    """Number of colours that suffice for graphs with no K_t (topological) minor.

    TopologicalMinor: ``10 t^2 + 2``. Minor: ``floor(16 t sqrt(log2 t)) + 3``.
    """
    if mode.mode is Mode.TOPOLOGICAL_MINOR:
        return 10 * mode.t * mode.t + 2
    return _floor_16t_sqrt_log2(mode.t) + 3


# -- degeneracy -----------------------------------------------------------------


def _smallest_free(k: int, forbidden) -> int:
    for c in range(1, k + 1):
        if c not in forbidden:
            return c
    raise InternalError(f"no colour in 1..{k} avoids {sorted(forbidden)}")


def color_degenerate(g: Graph, k: int) -> Coloring:
    """Dynamic (k+3)-coloring by peeling a minimum-degree vertex.

    Suits graphs in which every topological minor has a vertex of degree at
    most ``k``. Only the consequence actually used is checked: each graph
    met along the way must have minimum degree at most ``k``.

    Parameters
    ----------
    g : Graph
        Any simple graph; components are handled independently.
    k : int
        Degeneracy bound, at least 1.

    Returns
    -------
    Coloring
        A verified dynamic coloring with palette ``1..k+3``.

    Raises
    ------
    DegeneracyViolation
        If some intermediate graph has minimum degree above ``k``; the
        exception carries that graph.
    """
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    palette = k + 3
    # peel vertices, remembering what each step needs to colour its vertex
    steps = []
    cur = g
    while cur.n:
        v = min(cur.vertices, key=lambda u: (cur.degree(u), u))
        d = cur.degree(v)
        if d > k:
            raise DegeneracyViolation(f"minimum degree {d} exceeds k={k}", cur)
        nbrs = sorted(cur.neighbors(v))
        rest = cur.remove_vertices([v])
        if d <= 1:
            w = []
            if d == 1:
                others = sorted(cur.neighbors(nbrs[0]) - {v})
                w = others[:1]
            steps.append((v, nbrs, w))
            cur = rest
            continue
        v1, v2 = nbrs[0], nbrs[1]
        w1 = min(cur.neighbors(v1) - {v})
        w2 = min(cur.neighbors(v2) - {v})
        steps.append((v, nbrs, [w1, w2]))
        cur = add_edge(rest, v1, v2)
    colors: dict[int, int] = {}
    for v, nbrs, ws in reversed(steps):
        forbidden = {colors[u] for u in nbrs} | {colors[w] for w in ws}
        if len(nbrs) >= 2 and len(forbidden) > palette - 1:
            raise InternalError(f"forbidden set {sorted(forbidden)} leaves no colour among {palette}")
        colors[v] = _smallest_free(palette, forbidden)
    c = Coloring(palette, colors)
    report = verify_dynamic(g, c)
    if not report.ok:
        raise InternalError(f"degeneracy coloring failed verification: {report.summary()}")
    return c


def color_no_kt(g: Graph, mode: BudgetMode) -> Coloring:
    """Colour within ``budget(mode)`` colours via the degeneracy colorer."""
    return color_degenerate(g, budget(mode) - 3)


# -- apex graphs ------------------------------------------------------------------


@dataclass
class ApexReport:
    coloring: Coloring
    apex_set: frozenset[int]
    fallbacks: list[str] = field(default_factory=list)


class _Stuck(Exception):
    """A 5-cycle component met with only four colours available."""


def shrink_apex_set(g: Graph, X) -> frozenset[int]:
    """Drop apex vertices, smallest first, while the rest still planarizes ``g``."""
    X = set(X)
    changed = True
    while changed:
        changed = False
        for v in sorted(X):
            if is_planar(g.remove_vertices(X - {v})):
                X.discard(v)
                changed = True
                break
    return frozenset(X)


def _is_c5(h: Graph) -> bool:
    return h.n == 5 and h.m == 5 and all(h.degree(v) == 2 for v in h.vertices)


def _apex_component(h: Graph, X: frozenset[int], fallbacks: list[str]) -> dict[int, int]:
    X = shrink_apex_set(h, X)
    top = len(X) + 4
    if not X:
        if _is_c5(h):
            raise _Stuck()
        c = solve_exact(h, 4)
        if c is None:
            raise InternalError(f"planar piece without a dynamic 4-coloring: {h.edge_list()}")
        return dict(c.assignment)
    v = min(X)
    rest = h.remove_vertices([v])
    try:
        c1 = _apex_colors(rest, X - {v}, fallbacks)
    except _Stuck:
        msg = f"5-cycle component below apex vertex {v}; exact solver on n={h.n}"
        log.warning(msg)
        fallbacks.append(msg)
        c = solve_exact(h, top)
        if c is None:
            raise InternalError("exact fallback found no coloring within the apex budget")
        return dict(c.assignment)
    new = top
    N = sorted(h.neighbors(v))
    colors = dict(c1)
    if len(N) <= 1 or len({c1[u] for u in N}) > 1:
        colors[v] = new
        return colors
    m = c1[N[0]]
    low = [w for w in N if h.degree(w) <= 2]
    if not low:
        w = N[0]
        colors[w] = new
        colors[v] = _smallest_free(top - 1, {m})
        return colors
    w = low[0]
    others = sorted(h.neighbors(w) - {v})
    forbidden = {m}
    if others:
        w1 = others[0]
        forbidden.add(c1[w1])
        beyond = sorted(h.neighbors(w1) - {w, v})
        if beyond:
            forbidden.add(c1[beyond[0]])
    colors[v] = new
    colors[w] = _smallest_free(top - 1, forbidden)
    return colors


def _apex_colors(g: Graph, X: frozenset[int], fallbacks: list[str]) -> dict[int, int]:
    colors: dict[int, int] = {}
    for comp in components(g):
        h = g.subgraph(comp)
        XH = X & comp
        if not XH and _is_c5(h) and X:
            # spare colours at this level: a 5-cycle takes five
            c = solve_exact(h, 5)
            colors.update(c.assignment)
            continue
        part = _apex_component(h, XH, fallbacks)
        report = verify_dynamic(h, part)
        if not report.ok:
            raise InternalError(f"apex step failed verification: {report.summary()}")
        colors.update(part)
    return colors


def color_apex(g: Graph, X) -> ApexReport:
    """Dynamic (|X|+4)-coloring of a graph that is planar after deleting ``X``.

    ``X`` is first shrunk greedily; then one apex vertex at a time is
    removed, the rest colored with one colour fewer, and the vertex put back,
    recolouring at most one neighbour.

    Raises
    ------
    PreconditionError
        If ``X`` is not a vertex subset or ``g - X`` is not planar.
    NotColorable
        If ``X`` is empty and some component is a 5-cycle.
    """
    X = frozenset(X)
    if not X <= g.vertices:
        raise PreconditionError(f"apex vertices {sorted(X - g.vertices)} not in the graph")
    if not is_planar(g.remove_vertices(X)):
        raise PreconditionError("g - X is not planar")
    fallbacks: list[str] = []
    try:
        colors = _apex_colors(g, X, fallbacks)
    except _Stuck:
        raise NotColorable("a component is a 5-cycle and no apex colours are available") from None
    c = Coloring(len(X) + 4, colors)
    report = verify_dynamic(g, c)
    if not report.ok:
        raise InternalError(f"apex coloring failed verification: {report.summary()}")
    return ApexReport(c, shrink_apex_set(g, X), fallbacks)


__all__ = [
    "ApexReport",
    "BudgetMode",
    "Mode",
    "budget",
    "color_apex",
    "color_degenerate",
    "color_no_kt",
    "shrink_apex_set",
]
