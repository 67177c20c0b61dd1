"""Command-line interface.

Exit codes: 0 success, 1 not colorable (a 5-cycle asked for four colours),
2 bad input, precondition failure or solver timeout, 3 a coloring failed
verification.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import named
from .budget import BudgetMode, color_apex, color_degenerate, color_no_kt
from .core import Coloring, chi_d, solve_exact, verify_dynamic
from .exceptions import (
    DyncolorError,
    InternalError,
    NotColorable,
    ParseError,
    PreconditionError,
    SolverTimeout,
)
from .generators import KINDS, GenSpec, generate
from .graph import Graph, components
from .io import emit_coloring, emit_edgelist, emit_graph6, parse_coloring, read_graphs
from .k5free import color_k5free, is_c5
from .minors import has_complete_minor, has_minor, has_topological_minor
from .sweep import sweep_compare

EXIT_OK, EXIT_NOT_COLORABLE, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3
TIME_LIMIT_ENV = "DYNCOLOR_TIME_LIMIT_SECS"


def time_limit() -> float:
    raw = os.environ.get(TIME_LIMIT_ENV, "60")
    try:
        value = float(raw)
    except ValueError:
        raise ParseError(f"{TIME_LIMIT_ENV} must be a number, got {raw!r}") from None
    if value <= 0:
        raise ParseError(f"{TIME_LIMIT_ENV} must be positive, got {raw!r}")
    return value


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _one_graph(args) -> Graph:
    graphs = read_graphs(_read(args.input), args.format)
    if len(graphs) != 1:
        raise ParseError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def _color_by_components(g: Graph, colorer) -> tuple[Coloring, list[str]]:
    """Colour each component; a 5-cycle component makes the whole call fail."""
    assignment: dict[int, int] = {}
    trace: list[str] = []
    k = 0
    for comp in components(g):
        piece = g.subgraph(comp)
        if is_c5(piece):
            raise NotColorable(f"component {sorted(comp)} is a 5-cycle, which needs 5 colours")
        c, lines = colorer(piece)
        k = max(k, c.k)
        assignment.update(c.assignment)
        trace += lines
    return Coloring(max(k, 1), assignment), trace


def _exact_colorer(k: int | None, limit: float):
    def run(piece: Graph):
        kk = chi_d(piece, time_limit=limit) if k is None else k
        c = solve_exact(piece, kk, time_limit=limit)
        if c is None:
            raise NotColorable(f"no dynamic {kk}-coloring exists")
        return c, [f"Exact n={piece.n} m={piece.m} k={kk}"]

    return run


def _k5free_colorer(limit: float):
    def run(piece: Graph):
        result = color_k5free(piece, check_minor=False, time_limit=limit)
        return result.coloring, result.trace.lines()

    return run


def cmd_color(args) -> int:
    g = _one_graph(args)
    limit = time_limit()
    algo = args.algorithm
    if algo == "auto":
        # the 4-colour construction where it applies, the exact oracle otherwise
        algo = "k5free" if not has_complete_minor(g, 5) else "exact"
    if algo == "exact":
        coloring, trace = _color_by_components(g, _exact_colorer(args.k, limit))
    elif algo == "k5free":
        if has_complete_minor(g, 5):
            raise PreconditionError("graph has a K5 minor; try --algorithm exact")
        coloring, trace = _color_by_components(g, _k5free_colorer(limit))
    elif algo == "degenerate":
        coloring, trace = color_degenerate(g, 2 if args.k is None else args.k), []
    elif algo == "apex":
        apex = [int(tok) for tok in args.apex_set.split(",") if tok.strip()] if args.apex_set else []
        report = color_apex(g, apex)
        coloring, trace = report.coloring, [f"Apex X={sorted(report.apex_set)}"] + report.fallbacks
    else:  # budget
        coloring = color_no_kt(g, BudgetMode(args.mode, args.t))
        trace = []
    verdict = verify_dynamic(g, coloring)
    if not verdict.ok:
        print(f"error: coloring failed verification: {verdict.summary()}", file=sys.stderr)
        return EXIT_VERIFY
    _write(args, emit_coloring(coloring, trace))
    return EXIT_OK


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_chi_d(args) -> int:
    limit = time_limit()
    for g in read_graphs(_read(args.input), args.format):
        print(chi_d(g, time_limit=limit))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _one_graph(args)
    c = parse_coloring(_read(args.coloring))
    verdict = verify_dynamic(g, c)
    print(verdict.summary())
    return EXIT_OK if verdict.ok else EXIT_VERIFY


def cmd_gen(args) -> int:
    params = {}
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise ParseError(f"--param expects key=value, got {item!r}")
        params[key] = value
    try:
        g = generate(GenSpec(args.kind, args.n, args.seed, params))
    except ValueError as exc:
        if isinstance(exc, DyncolorError):
            raise
        raise ParseError(f"bad --param value: {exc}") from None
    _write(args, emit_graph6(g) + "\n" if args.format == "graph6" else emit_edgelist(g))
    return EXIT_OK


def cmd_sweep(args) -> int:
    limit = time_limit()
    if args.corpus:
        corpus = read_graphs(_read(args.corpus), args.format)
        report = sweep_compare(corpus=corpus, time_limit=limit)
    else:
        if args.max_n is None:
            raise ParseError("sweep needs --max-n or --corpus")
        report = sweep_compare(args.max_n, min_n=args.min_n, time_limit=limit)
    print("\n".join(report.lines()))
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_check_minor(args) -> int:
    g = _one_graph(args)
    if args.target == "k5":
        h = named.complete(5)
    elif args.target == "k33":
        h = named.complete_bipartite(3, 3)
    else:
        if args.t is None:
            raise ParseError("--target kt needs --t")
        h = named.complete(args.t)
    found = has_topological_minor(g, h) if args.topological else has_minor(g, h)
    print("true" if found else "false")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dyncolor", description="Dynamic graph coloring toolkit.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log fallbacks and progress")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p, required=True):
        p.add_argument("--input", required=required, help="graph file, '-' for stdin")
        p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")

    p = sub.add_parser("color", help="compute a dynamic coloring")
    graph_input(p)
    p.add_argument("--algorithm", choices=("auto", "exact", "k5free", "degenerate", "apex", "budget"), default="auto")
    p.add_argument("--k", type=int, help="colour count (exact) or degeneracy bound (degenerate)")
    p.add_argument("--apex-set", help="comma-separated apex vertices")
    p.add_argument("--mode", choices=("minor", "topological"), default="minor")
    p.add_argument("--t", type=int, default=5)
    p.add_argument("--output", help="write the coloring here instead of stdout")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("chi-d", help="dynamic chromatic number")
    graph_input(p)
    p.set_defaults(func=cmd_chi_d)

    p = sub.add_parser("verify", help="check a coloring document against a graph")
    graph_input(p)
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--param", action="append", help="kind-specific key=value (pieces, max_order, drop, density, k)")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sweep", help="compare the K5-minor-free colorer with the exact solver")
    p.add_argument("--max-n", type=int)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--corpus", help="graph6 file, one graph per line")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="graph6")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("check-minor", help="minor containment test")
    graph_input(p)
    p.add_argument("--target", choices=("k5", "k33", "kt"), default="k5")
    p.add_argument("--t", type=int)
    p.add_argument("--topological", action="store_true", help="test for a topological minor instead")
    p.set_defaults(func=cmd_check_minor)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except NotColorable as exc:
        print(f"not colorable: {exc}", file=sys.stderr)
        return EXIT_NOT_COLORABLE
    except SolverTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except DyncolorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
