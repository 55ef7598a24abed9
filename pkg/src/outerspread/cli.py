"""Command line entry point.

Exit codes: 0 success, 1 usage or input error, 2 computation failure,
3 a universally valid inequality was violated (a finding).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Sequence

from . import bounds, search
from .codec import Graph6Error, graph6_decode, graph6_encode, write_report
from .enumeration import enumerate_outerplanar
from .graph import Graph, parse_graph
from .spectra import DEFAULT_TOL, extremal_pairs, spread

EXIT_OK, EXIT_USAGE, EXIT_FAILURE, EXIT_FINDING = 0, 1, 2, 3
WORKERS_ENV = "OUTERSPREAD_WORKERS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw is None:
        return 1
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def _common() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", "-o", default="-", help="output file, '-' for stdout")
    p.add_argument("--workers", type=int, default=None, help=f"worker processes (default ${WORKERS_ENV} or 1)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="Jacobi off-diagonal tolerance")
    return p


def _graph_inputs(p: argparse.ArgumentParser, required: bool = True) -> None:
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--graph", help="constructor expression, e.g. fan:10, forest:[5,3,1], join(a,b)")
    src.add_argument("--graph6", help="graph6 string")
    src.add_argument("--input", help="file of graph6 lines, '-' for stdin")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="outerspread", description="Spread of outerplanar graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spread", parents=[common], help="lambda_1, lambda_n and spread of graphs")
    _graph_inputs(p)

    p = sub.add_parser("check-bounds", parents=[common], help="eigenvalue bounds and diagnostics")
    _graph_inputs(p, required=False)
    p.add_argument("--n-max", type=int, help="check lambda_1 <= sqrt(n)+1 on every connected outerplanar graph")
    p.add_argument("--n-min", type=int, default=1)

    p = sub.add_parser("residuals", parents=[common], help="entry and eigenvalue residuals on K_1 v P_{n-1}")
    p.add_argument("--n", type=int, nargs="+", default=[64, 128, 256])

    p = sub.add_parser("enumerate", parents=[common], help="graph6 stream of outerplanar graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")

    p = sub.add_parser("max-spread", parents=[common], help="exhaustive maximum over connected outerplanar graphs")
    p.add_argument("--n", type=int, nargs="+", required=True)

    p = sub.add_parser("fan-scan", parents=[common], help="spread of K_1 v F over all linear forests F")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--top", type=int, default=None, help="rows kept per n (default: full table when small)")
    p.add_argument("--best-only", action="store_true", help="one summary row per n")

    p = sub.add_parser("conjecture", parents=[common], help="fan vs fan-family vs exhaustive winners")
    p.add_argument("--n-lo", type=int, required=True)
    p.add_argument("--n-hi", type=int, required=True)
    p.add_argument("--exhaustive-limit", type=int, default=9)

    p = sub.add_parser("climb", parents=[common], help="hill climb from a start graph")
    _graph_inputs(p)
    p.add_argument("--budget", type=int, default=100)

    p = sub.add_parser("codec", parents=[common], help="graph6 encode/decode")
    csub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    e = csub.add_parser("encode", parents=[common])
    e.add_argument("--graph", required=True)
    d = csub.add_parser("decode", parents=[common])
    d.add_argument("--graph6", required=True)
    return parser


def _read_graphs(args) -> list[Graph]:
    try:
        if args.graph is not None:
            return [parse_graph(args.graph)]
        if args.graph6 is not None:
            return [graph6_decode(args.graph6)]
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        graphs = [graph6_decode(line) for line in text.splitlines() if line.strip()]
    except OSError as exc:
        raise UsageError(str(exc)) from None
    except (Graph6Error, ValueError) as exc:
        raise UsageError(f"bad graph input: {exc}") from None
    if not graphs:
        raise UsageError("no graphs in input")
    return graphs


SPREAD_COLUMNS = ["graph6", "n", "edges", "lambda1", "lambda_n", "spread"]
CHECK_COLUMNS = ["graph6", "check", "lhs", "rhs", "margin", "holds", "extremal_only"]
MAX_COLUMNS = ["n", "graphs", "best", "best_spread", "runner_up_gap", "ties", "has_hub", "forest",
               "is_fan", "fan_spread"]
FAN_COLUMNS = ["n", "rank", "forest", "m", "spread"]
FAN_BEST_COLUMNS = ["n", "partitions", "best", "m", "m_over_n", "best_spread", "path_spread", "ties"]
CLIMB_COLUMNS = ["start", "best", "start_spread", "best_spread", "steps", "evaluated", "local_gap", "forest"]
DECODE_COLUMNS = ["n", "edges", "edge_list"]


def _cmd_spread(args, out):
    rows = []
    for g in _read_graphs(args):
        r = spread(g, args.tol)
        rows.append({"graph6": graph6_encode(g), "n": g.n, "edges": g.num_edges,
                     "lambda1": r.lambda1, "lambda_n": r.lambda_n, "spread": r.spread})
    write_report(rows, args.format, out, SPREAD_COLUMNS)
    return EXIT_OK


def _check_rows(g: Graph, tol: float) -> tuple[list[dict], bool]:
    code = graph6_encode(g)
    rows, violated = [], False

    def add(check, lhs, rhs=None, margin=None, holds=None, extremal_only=True):
        rows.append({"graph6": code, "check": check, "lhs": lhs, "rhs": rhs, "margin": margin,
                     "holds": holds, "extremal_only": extremal_only})

    for c in bounds.bound_suite(g, tol):
        add(c.name, c.lhs, c.rhs, c.margin, c.holds, c.extremal_only)
        violated |= not c.holds and not c.extremal_only
    ds = bounds.degree_bound_diagnostic(g, tol)
    add("degree_slack_x", ds.min_slack_x)
    add("degree_slack_z", ds.min_slack_z)
    bs = bounds.b_set_diagnostic(g, tol)
    add("b_set_size", float(len(bs.B)))
    add("b_sum_abs_z", bs.sum_abs_z)
    add("b_sum_x", bs.sum_x)
    add("w", float(bs.w), float(bs.w_prime), None, bs.w_matches)
    for t in bs.B:
        r = bounds.star_reattach(g, t, tol)
        add(f"reattach_t{t}", r.actual_delta, r.predicted_delta, r.actual_delta - r.predicted_delta,
            r.certified, False)
        violated |= not r.certified
    if g.n >= 10 and bounds.find_hub(g) is not None:
        er = bounds.entry_estimate_residual(g, tol)
        add("entry_res_z", er.max_res_z)
        add("entry_res_x", er.max_res_x)
    return rows, violated


def _cmd_check_bounds(args, out):
    if args.n_max is not None:
        if any(v is not None for v in (args.graph, args.graph6, args.input)):
            raise UsageError("--n-max excludes --graph/--graph6/--input")
        rows, bad = search.spectral_radius_scan(args.n_max, args.workers, args.n_min, args.tol)
        write_report(rows, args.format, out, search.RADIUS_COLUMNS)
        for g in bad:
            print(f"violation: {graph6_encode(g)}", file=sys.stderr)
        return EXIT_FINDING if bad else EXIT_OK
    if args.graph is None and args.graph6 is None and args.input is None:
        raise UsageError("give --graph, --graph6, --input or --n-max")
    rows, violated = [], False
    for g in _read_graphs(args):
        r, v = _check_rows(g, args.tol)
        rows.extend(r)
        violated |= v
    write_report(rows, args.format, out, CHECK_COLUMNS)
    return EXIT_FINDING if violated else EXIT_OK


def _cmd_residuals(args, out):
    rows, summary = bounds.residual_scan(args.n, args.tol)
    write_report(rows, args.format, out, bounds.RESIDUAL_COLUMNS)
    for k, v in summary.items():
        print(f"{k} = {v:.6f}", file=sys.stderr)
    return EXIT_OK


def _cmd_enumerate(args, out):
    for g in enumerate_outerplanar(args.n, args.connected, args.workers):
        out.write(graph6_encode(g) + "\n")
    return EXIT_OK


def _cmd_max_spread(args, out):
    rows = []
    for n in args.n:
        r = search.exhaustive_max_spread(n, args.workers, args.tol)
        st = search.fan_structure(r.best)
        rows.append({
            "n": n, "graphs": r.evaluated, "best": graph6_encode(r.best), "best_spread": r.best_spread,
            "runner_up_gap": r.runner_up_gap, "ties": len(r.ties), "has_hub": max(r.best.degrees()) == n - 1,
            "forest": str(st) if st else None, "is_fan": st is not None and st.parts == (n - 1,),
            "fan_spread": spread(parse_graph(f"fan:{n}"), args.tol).spread,
        })
    write_report(rows, args.format, out, MAX_COLUMNS)
    return EXIT_OK


def _cmd_fan_scan(args, out):
    rows = []
    for n in args.n:
        res = search.fan_family_max(n, args.workers, 1 if args.best_only else args.top, args.tol)
        if args.best_only:
            rows.append({
                "n": n, "partitions": res.partition_count, "best": str(res.best_spec), "m": res.best_spec.m,
                "m_over_n": res.m_ratio, "best_spread": res.best_spread,
                "path_spread": spread(parse_graph(f"fan:{n}"), args.tol).spread, "ties": len(res.ties),
            })
        else:
            rows.extend({"n": n, "rank": i + 1, "forest": str(spec), "m": spec.m, "spread": s}
                        for i, (spec, s) in enumerate(res.table))
    write_report(rows, args.format, out, FAN_BEST_COLUMNS if args.best_only else FAN_COLUMNS)
    return EXIT_OK


def _cmd_conjecture(args, out):
    rows = search.conjecture_scan(args.n_lo, args.n_hi, args.workers, args.exhaustive_limit, args.tol)
    write_report(rows, args.format, out, search.CONJECTURE_COLUMNS)
    return EXIT_OK


def _cmd_climb(args, out):
    rows = []
    for g in _read_graphs(args):
        r = search.local_search(g, args.budget, args.seed, args.tol)
        st = search.fan_structure(r.best)
        rows.append({
            "start": graph6_encode(g), "best": graph6_encode(r.best), "start_spread": r.trace[0],
            "best_spread": r.best_spread, "steps": len(r.trace) - 1, "evaluated": r.evaluated,
            "local_gap": None if math.isnan(r.runner_up_gap) else r.runner_up_gap,
            "forest": str(st) if st else None,
        })
    write_report(rows, args.format, out, CLIMB_COLUMNS)
    return EXIT_OK


def _cmd_codec(args, out):
    if args.action == "encode":
        try:
            g = parse_graph(args.graph)
        except ValueError as exc:
            raise UsageError(f"bad graph expression: {exc}") from None
        out.write(graph6_encode(g) + "\n")
        return EXIT_OK
    try:
        g = graph6_decode(args.graph6)
    except Graph6Error as exc:
        raise UsageError(f"malformed graph6: {exc}") from None
    edges = " ".join(f"{u}-{v}" for u, v in g.edges())
    write_report([{"n": g.n, "edges": g.num_edges, "edge_list": edges}], args.format, out, DECODE_COLUMNS)
    return EXIT_OK


_COMMANDS = {
    "spread": _cmd_spread,
    "check-bounds": _cmd_check_bounds,
    "residuals": _cmd_residuals,
    "enumerate": _cmd_enumerate,
    "max-spread": _cmd_max_spread,
    "fan-scan": _cmd_fan_scan,
    "conjecture": _cmd_conjecture,
    "climb": _cmd_climb,
    "codec": _cmd_codec,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.workers is None:
            args.workers = _default_workers()
        if args.workers < 1:
            raise UsageError("--workers must be >= 1")
        if not args.tol > 0:
            raise UsageError("--tol must be positive")
    except UsageError as exc:
        print(f"outerspread: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    out = sys.stdout
    try:
        if args.output != "-":
            out = open(args.output, "w", encoding="utf-8", newline="")
        try:
            return _COMMANDS[args.command](args, out)
        finally:
            if out is not sys.stdout:
                out.close()
    except UsageError as exc:
        print(f"outerspread: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"outerspread: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"outerspread: error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except Exception as exc:  # computation failure: convergence, arithmetic guards
        print(f"outerspread: computation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
