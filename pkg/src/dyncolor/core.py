"""Happiness, verification of dynamic colorings, and the exact backtracking solver.

A vertex is happy under a proper coloring when it has at most one neighbour
or two neighbours of different colours; a dynamic k-coloring is a proper
k-coloring in which every vertex is happy. The solver here is the oracle
every constructive colorer is checked against.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .exceptions import PreconditionError, SolverTimeout
from .graph import Edge, Graph


@dataclass(frozen=True)
class Coloring:
    """A partial or total map from vertices to colours ``1..k``."""

    k: int
    assignment: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.k < 0:
            raise PreconditionError(f"colour count must be non-negative, got {self.k}")
        bad = {v: c for v, c in self.assignment.items() if not 1 <= c <= self.k}
        if bad:
            raise PreconditionError(f"colours outside 1..{self.k}: {bad}")
        object.__setattr__(self, "assignment", dict(self.assignment))

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def __contains__(self, v: object) -> bool:
        return v in self.assignment

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.assignment))

    def __len__(self) -> int:
        return len(self.assignment)

    def get(self, v: int, default=None):
        return self.assignment.get(v, default)

    def items(self):
        return sorted(self.assignment.items())

    def colors_used(self) -> set[int]:
        return set(self.assignment.values())

    @property
    def num_colors(self) -> int:
        return len(self.colors_used())

    def is_total(self, g: Graph) -> bool:
        return g.vertices <= self.assignment.keys()

    def permuted(self, perm: Mapping[int, int]) -> "Coloring":
        """Apply a colour bijection (colours missing from ``perm`` are fixed)."""
        return Coloring(self.k, {v: perm.get(c, c) for v, c in self.assignment.items()})

    def restrict(self, vertices: Iterable[int]) -> "Coloring":
        keep = set(vertices)
        return Coloring(self.k, {v: c for v, c in self.assignment.items() if v in keep})

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.k == other.k and self.assignment == other.assignment

    def __hash__(self):
        return hash((self.k, frozenset(self.assignment.items())))


@dataclass(frozen=True)
class HappyReport:
    """Verifier output: what, if anything, stops a coloring from being dynamic."""

    proper_violations: list[Edge]
    unhappy: list[int]
    uncolored: list[int] = field(default_factory=list)
    unknown: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.proper_violations or self.unhappy or self.uncolored or self.unknown)

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return "ok"
        parts = []
        if self.proper_violations:
            parts.append(f"improper edges {self.proper_violations}")
        if self.unhappy:
            parts.append(f"unhappy vertices {self.unhappy}")
        if self.uncolored:
            parts.append(f"uncolored vertices {self.uncolored}")
        if self.unknown:
            parts.append(f"vertices not in graph {self.unknown}")
        return "; ".join(parts)


def _as_map(c) -> Mapping[int, int]:
    return c.assignment if isinstance(c, Coloring) else c


def is_happy(g: Graph, c: Coloring | Mapping[int, int], v: int) -> bool:
    """True iff ``v`` has at most one neighbour or two neighbours of distinct colours."""
    colors = _as_map(c)
    nbrs = g.neighbors(v)
    missing = [w for w in nbrs if w not in colors]
    if missing:
        raise PreconditionError(f"neighbours of {v} are uncolored: {sorted(missing)}")
    return len(nbrs) <= 1 or len({colors[w] for w in nbrs}) >= 2


def verify_dynamic(g: Graph, c: Coloring | Mapping[int, int]) -> HappyReport:
    colors = _as_map(c)
    improper = [(u, v) for u, v in g.edge_list() if u in colors and v in colors and colors[u] == colors[v]]
    uncolored = [v for v in g.sorted_vertices() if v not in colors]
    unknown = sorted(v for v in colors if v not in g)
    unhappy = []
    for v in g.sorted_vertices():
        nbrs = g.neighbors(v)
        if len(nbrs) >= 2 and all(w in colors for w in nbrs):
            if len({colors[w] for w in nbrs}) == 1:
                unhappy.append(v)
    return HappyReport(improper, unhappy, uncolored, unknown)


# -- exact search ------------------------------------------------------


def _search_order(g: Graph) -> list[int]:
    # maximum cardinality order: each next vertex has the most already-placed
    # neighbours, so happiness of a vertex is decided soon after it is placed
    weight = dict.fromkeys(g.vertices, 0)
    order = []
    while weight:
        v = max(weight, key=lambda u: (weight[u], g.degree(u), -u))
        del weight[v]
        order.append(v)
        for w in g.neighbors(v):
            if w in weight:
                weight[w] += 1
    return order


class _Search:
    """Backtracking over a fixed vertex order with forward checking.

    Colours are tried in ascending order. When the precoloring leaves some
    colours unused, only the smallest still-unused colour is tried as a
    fresh colour: unused colours are interchangeable.
    """

    def __init__(self, g: Graph, k: int, pre: Mapping[int, int], dynamic: bool, time_limit):
        self.k = k
        self.dynamic = dynamic
        self.verts = _search_order(g)
        idx = {v: i for i, v in enumerate(self.verts)}
        self.nbrs = [[idx[w] for w in sorted(g.neighbors(v))] for v in self.verts]
        n = len(self.verts)
        self.color = [0] * n
        self.uncolored_nbrs = [len(nb) for nb in self.nbrs]
        full = (1 << (k + 1)) - 2
        self.domain_blocks = [[0] * (k + 1) for _ in range(n)]
        self.full = full
        self.pre = {idx[v]: c for v, c in pre.items()}
        self.deadline = None if time_limit is None else time.monotonic() + time_limit
        self.nodes = 0
        self.use_count = [0] * (k + 1)

    def _check_time(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % 2048 == 0 and time.monotonic() > self.deadline:
            raise SolverTimeout("exact solver exceeded its time limit")

    def _blocked(self, i: int, c: int) -> bool:
        return self.domain_blocks[i][c] > 0

    def _happy_ok(self, i: int) -> bool:
        nb = self.nbrs[i]
        if len(nb) < 2:
            return True
        first = self.color[nb[0]]
        return any(self.color[j] != first for j in nb)

    def assign(self, i: int, c: int) -> bool:
        """Colour vertex i; return False (with state restored) on a dead end."""
        self.color[i] = c
        self.use_count[c] += 1
        for j in self.nbrs[i]:
            self.uncolored_nbrs[j] -= 1
            if self.color[j] == 0:
                self.domain_blocks[j][c] += 1
        ok = True
        for j in self.nbrs[i]:
            if self.color[j] == 0 and all(self._blocked(j, d) for d in range(1, self.k + 1)):
                ok = False
                break
        if ok and self.dynamic:
            for j in [i, *self.nbrs[i]]:
                if self.color[j] and self.uncolored_nbrs[j] == 0 and not self._happy_ok(j):
                    ok = False
                    break
        if not ok:
            self.unassign(i, c)
        return ok

    def unassign(self, i: int, c: int):
        for j in self.nbrs[i]:
            self.uncolored_nbrs[j] += 1
            if self.color[j] == 0:
                self.domain_blocks[j][c] -= 1
        self.color[i] = 0
        self.use_count[c] -= 1

    def run(self) -> list[int] | None:
        for i, c in sorted(self.pre.items()):
            for j in self.nbrs[i]:
                if self.color[j] == c:
                    return None
            if not self.assign(i, c):
                return None
        free = [i for i in range(len(self.verts)) if i not in self.pre]
        return self.color if self._extend(free, 0) else None

    def _extend(self, free: list[int], pos: int) -> bool:
        if pos == len(free):
            return True
        self._check_time()
        i = free[pos]
        fresh_done = False
        for c in range(1, self.k + 1):
            if self._blocked(i, c):
                continue
            if self.use_count[c] == 0:
                if fresh_done:
                    continue
                fresh_done = True
            if self.assign(i, c):
                if self._extend(free, pos + 1):
                    return True
                self.unassign(i, c)
        return False


def _solve(g: Graph, k: int, pre, dynamic: bool, time_limit) -> Coloring | None:
    pre = dict(_as_map(pre) if pre is not None else {})
    if k < 0:
        raise PreconditionError(f"k must be non-negative, got {k}")
    for v, c in pre.items():
        if v not in g:
            raise PreconditionError(f"precolored vertex {v} not in graph")
        if not 1 <= c <= k:
            raise PreconditionError(f"precolor {c} of vertex {v} outside 1..{k}")
    if g.n == 0:
        return Coloring(k, {})
    if k == 0:
        return None
    search = _Search(g, k, pre, dynamic, time_limit)
    colors = search.run()
    if colors is None:
        return None
    return Coloring(k, {v: colors[i] for i, v in enumerate(search.verts)})


def solve_exact(
    g: Graph,
    k: int,
    pre: Coloring | Mapping[int, int] | None = None,
    *,
    time_limit: float | None = None,
) -> Coloring | None:
    """Find a dynamic k-coloring of ``g`` extending ``pre``, or return None.

    Vertices are searched in maximum cardinality order (start at the highest
    degree, ties by smallest id) and colours in ascending order, so the
    answer is deterministic.

    Raises
    ------
    SolverTimeout
        If ``time_limit`` seconds elapse before the search finishes.
    """
    return _solve(g, k, pre, True, time_limit)


def solve_proper(g: Graph, k: int, pre=None, *, time_limit: float | None = None) -> Coloring | None:
    """Same search as :func:`solve_exact` with the happiness constraint switched off."""
    return _solve(g, k, pre, False, time_limit)


def greedy_clique_size(g: Graph) -> int:
    """Size of a clique grown greedily from each vertex; a cheap lower bound on chi."""
    best = 1 if g.n else 0
    for v in g.sorted_vertices():
        clique = [v]
        cands = set(g.neighbors(v))
        while cands:
            w = max(sorted(cands), key=lambda x: len(g.neighbors(x) & cands))
            clique.append(w)
            cands &= g.neighbors(w)
        best = max(best, len(clique))
    return best


def chi(g: Graph, *, time_limit: float | None = None) -> int:
    """Ordinary chromatic number."""
    if g.n == 0:
        return 0
    k = max(1, greedy_clique_size(g))
    while solve_proper(g, k, time_limit=time_limit) is None:
        k += 1
    return k


def chi_d(g: Graph, *, time_limit: float | None = None) -> int:
    """Dynamic chromatic number: least k with a dynamic k-coloring."""
    if g.n == 0:
        return 0
    k = max(1, greedy_clique_size(g))
    while solve_exact(g, k, time_limit=time_limit) is None:
        k += 1
    return k
