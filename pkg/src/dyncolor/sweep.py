"""Desk-scale comparison of the K5-minor-free colorer against the exact solver."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable

from .core import solve_exact, verify_dynamic
from .enumerate import connected_graphs
from .exceptions import DyncolorError
from .graph import Graph
from .io import emit_graph6
from .k5free import color_k5free, is_c5
from .minors import has_complete_minor


@dataclass
class SweepReport:
    total: int = 0
    colored: int = 0
    skipped_c5: int = 0
    filtered_k5: int = 0
    disconnected: int = 0
    fallback_events: int = 0
    internal_fallbacks: int = 0
    max_runtime: float = 0.0
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [
            f"graphs={self.total} colored={self.colored} skipped_c5={self.skipped_c5} "
            f"filtered_k5={self.filtered_k5} disconnected={self.disconnected}",
            f"fallbacks={self.fallback_events} internal_fallbacks={self.internal_fallbacks} "
            f"max_runtime={self.max_runtime:.4f}s",
        ]
        out += [f"FAIL {g6} {why}" for g6, why in sorted(self.failures)]
        return out


def _check_one(g: Graph, report: SweepReport, time_limit: float | None) -> None:
    g6 = emit_graph6(g)
    if not g.is_connected():
        report.disconnected += 1
        return
    if is_c5(g):
        report.skipped_c5 += 1
        return
    if has_complete_minor(g, 5):
        report.filtered_k5 += 1
        return
    start = time.perf_counter()
    try:
        result = color_k5free(g, check_minor=False, time_limit=time_limit)
    except DyncolorError as exc:
        report.failures.append((g6, f"{type(exc).__name__}: {exc}"))
        return
    report.max_runtime = max(report.max_runtime, time.perf_counter() - start)
    fallbacks = result.trace.fallbacks()
    report.fallback_events += len(fallbacks)
    report.internal_fallbacks += sum(s.note.startswith("internal") for s in fallbacks)
    verdict = verify_dynamic(g, result.coloring)
    if not verdict.ok or result.coloring.num_colors > 4:
        report.failures.append((g6, f"verification: {verdict.summary()}"))
        return
    if solve_exact(g, 4, time_limit=time_limit) is None:
        report.failures.append((g6, "exact solver disagrees: no dynamic 4-coloring"))
        return
    report.colored += 1


def sweep_compare(
    max_n: int | None = None,
    corpus: Iterable[Graph] | None = None,
    *,
    min_n: int = 1,
    time_limit: float | None = None,
) -> SweepReport:
    """Run the colorer over every connected graph with ``min_n <= n <= max_n``,
    or over ``corpus`` when given.

    Disconnected corpus graphs, 5-cycles and graphs with a K5 minor are
    counted but not colored.
    """
    if corpus is None:
        if max_n is None:
            raise ValueError("give max_n or a corpus")
        if max_n > 8:
            raise ValueError("exhaustive sweeps are limited to max_n <= 8")
        corpus = (g for n in range(min_n, max_n + 1) for g in connected_graphs(n))
    report = SweepReport()
    for g in corpus:
        report.total += 1
        _check_one(g, report, time_limit)
    return report
