"""Command-line front end.

Subcommands: ``graph`` (construct and export), ``query`` (distance,
geodesic count, or explicit geodesics for one pair, with the closed form
alongside the oracle when it applies), ``centrality`` (full map or one
induced value), and ``validate`` (formula-vs-oracle sweeps).

Exit codes: 0 success / clean validation, 1 validation identity failure,
2 validation formula discrepancies, 64 bad arguments, 65 closed form
inapplicable under --formula-only.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import validation
from .centrality import (
    betweenness,
    induced_between_sets,
    induced_by_set,
    induced_by_vertex,
)
from .errors import GpbcError
from .formulas import (
    ClosedFormValue,
    PairClass,
    cf_distance,
    cf_sigma,
    classify_pair,
)
from .graphs import build_gp, export_graph, parse_vertex_label
from .shortest_paths import distance, enumerate_geodesics, sigma

EX_OK = 0
EX_USAGE = 64
EX_INAPPLICABLE = 65

OUTPUT_DIR_VAR = "GPBC_OUTPUT_DIR"


class _Parser(argparse.ArgumentParser):
    """argparse, but argument errors exit with the documented code 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gpbc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_graph = sub.add_parser("graph", help="construct GP(n,k) and export it")
    _add_nk(p_graph)
    p_graph.add_argument(
        "--format", choices=("dot", "json", "csv"), default="json"
    )
    p_graph.add_argument("--output", help="write here instead of stdout")

    p_query = sub.add_parser("query", help="distance / geodesic count / geodesics")
    _add_nk(p_query)
    p_query.add_argument("kind", choices=("dist", "sigma", "paths"))
    p_query.add_argument("source", metavar="from", help="vertex label, e.g. u0")
    p_query.add_argument("target", metavar="to", help="vertex label, e.g. v3")
    group = p_query.add_mutually_exclusive_group()
    group.add_argument(
        "--no-formula", action="store_true", help="print only the oracle value"
    )
    group.add_argument(
        "--formula-only",
        action="store_true",
        help="print only the closed form; exit 65 when it does not apply",
    )
    p_query.add_argument(
        "--limit", type=int, default=10_000, help="cap for paths enumeration"
    )

    p_cent = sub.add_parser("centrality", help="exact betweenness values")
    _add_nk(p_cent)
    p_cent.add_argument(
        "--format", choices=("table", "csv", "json"), default="table"
    )
    p_cent.add_argument(
        "--induced",
        help="restrict pairs: set:outer | set:inner | cross | vertex:<label>",
    )
    p_cent.add_argument("--vertex", help="the vertex x for --induced")
    p_cent.add_argument("--output", help="write here instead of stdout")

    p_val = sub.add_parser("validate", help="formula-vs-oracle sweeps")
    p_val.add_argument("suite", choices=validation.SUITES)
    p_val.add_argument("--min", dest="n_min", type=int)
    p_val.add_argument("--max", dest="n_max", type=int)
    p_val.add_argument("--format", choices=("json", "table"), default="json")
    p_val.add_argument("--output", help="write here instead of stdout")
    return parser


def _add_nk(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)


def _write(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    path = Path(output)
    if not path.is_absolute():
        base = os.environ.get(OUTPUT_DIR_VAR)
        if base:
            path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _fmt_value(value: Fraction) -> str:
    return f"{value} ({float(value)!r})"


def _cmd_graph(args) -> int:
    g = build_gp(args.n, args.k)
    _write(export_graph(g, args.format), args.output)
    return EX_OK


def _closed_form_for_query(args, g) -> ClosedFormValue | None:
    if args.k != 2:
        return None
    pair = classify_pair(g.n, parse_vertex_label(args.source, g.n),
                         parse_vertex_label(args.target, g.n))
    if args.kind == "dist":
        return cf_distance(g.n, pair)
    if pair.r == 0 and pair.kind is not PairClass.OUTER_INNER:
        # same vertex: count is 1 by convention, outside the formula cases
        return None
    return cf_sigma(g.n, pair)


def _cmd_query(args) -> int:
    g = build_gp(args.n, args.k)
    s = parse_vertex_label(args.source, g.n)
    t = parse_vertex_label(args.target, g.n)
    if args.kind == "paths":
        if args.formula_only:
            sys.stderr.write("gpbc: error: paths have no closed form\n")
            return EX_USAGE
        paths = enumerate_geodesics(g, s, t, limit=args.limit)
        hops = len(paths[0]) - 1
        sys.stdout.write(f"{len(paths)} geodesics (length {hops})\n")
        for path in paths:
            sys.stdout.write(" ".join(v.label for v in path) + "\n")
        return EX_OK

    oracle = distance(g, s, t) if args.kind == "dist" else sigma(g, s, t)
    formula = None if args.no_formula else _closed_form_for_query(args, g)
    if args.formula_only:
        if formula is None or not formula.applicable:
            reason = formula.reason if formula is not None else "closed forms require k=2"
            sys.stderr.write(f"gpbc: closed form inapplicable: {reason}\n")
            return EX_INAPPLICABLE
        sys.stdout.write(f"formula={formula.value}\n")
        return EX_OK
    if args.no_formula or formula is None:
        sys.stdout.write(f"oracle={oracle}\n")
        return EX_OK
    if not formula.applicable:
        sys.stdout.write(f"oracle={oracle} formula=inapplicable ({formula.reason})\n")
        return EX_OK
    agree = "true" if formula.value == oracle else "false"
    sys.stdout.write(f"oracle={oracle} formula={formula.value} agree={agree}\n")
    return EX_OK


def _induced_value(args, g) -> tuple[str, Fraction]:
    if not args.vertex:
        raise GpbcError("--induced requires --vertex")
    x = parse_vertex_label(args.vertex, g.n)
    outer_set = g.outer_vertices()
    inner_set = g.inner_vertices()
    spec = args.induced
    if spec == "set:outer":
        return f"B({x.label},U)", induced_by_set(g, x, outer_set)
    if spec == "set:inner":
        return f"B({x.label},V)", induced_by_set(g, x, inner_set)
    if spec == "cross":
        return f"B({x.label},U|V)", induced_between_sets(g, x, outer_set, inner_set)
    if spec.startswith("vertex:"):
        x0 = parse_vertex_label(spec.split(":", 1)[1], g.n)
        return f"B({x.label},{x0.label})", induced_by_vertex(g, x, x0)
    raise GpbcError(f"unknown --induced spec {spec!r}")


def _cmd_centrality(args) -> int:
    g = build_gp(args.n, args.k)
    if args.induced:
        name, value = _induced_value(args, g)
        _write(f"{name} = {_fmt_value(value)}\n", args.output)
        return EX_OK
    cmap = betweenness(g)
    if args.format == "csv":
        _write(cmap.to_csv(), args.output)
    elif args.format == "json":
        _write(cmap.to_json(), args.output)
    else:
        lines = [f"betweenness of GP({g.n},{g.k})"]
        for v, value in cmap.values.items():
            lines.append(f"  {v.label:>6}  {_fmt_value(value)}")
        _write("\n".join(lines) + "\n", args.output)
    return EX_OK


_SUITE_DEFAULT_RANGES = {
    "sigma": (5, 60),
    "distance": (5, 100),
    "betweenness": (12, 40),
    "identities": (5, 30),
    "classic": (2, 50),
    "all": (12, 40),
}


def _cmd_validate(args) -> int:
    lo, hi = _SUITE_DEFAULT_RANGES[args.suite]
    n_min = args.n_min if args.n_min is not None else lo
    n_max = args.n_max if args.n_max is not None else hi
    report = validation.run_suite(args.suite, n_min, n_max)
    if args.format == "json":
        _write(report.to_json(), args.output)
    else:
        lines = [
            f"suite={args.suite} range=[{n_min},{n_max}] "
            f"checks={report.checks_run} discrepancies={len(report.discrepancies)}"
        ]
        for d in report.discrepancies:
            lines.append(
                f"  {d.quantity.value} n={d.n} {d.argument}: "
                f"formula={d.formula_value} oracle={d.oracle_value} "
                f"[{d.paper_anchor}]"
            )
        _write("\n".join(lines) + "\n", args.output)
    return report.exit_code()


_DISPATCH = {
    "graph": _cmd_graph,
    "query": _cmd_query,
    "centrality": _cmd_centrality,
    "validate": _cmd_validate,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE
    try:
        return _DISPATCH[args.command](args)
    except GpbcError as exc:
        sys.stderr.write(f"gpbc: error: {exc}\n")
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
