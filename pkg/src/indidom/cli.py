"""Command-line front end.

Exit codes: 0 success, 1 a check failed or a solver ran out of budget,
2 usage or malformed input.  Every subcommand takes the graph through
--family kind:p1,p2, --g6 (string or file), or --edges (file; "" for
the empty graph), and --json switches to machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import families
from .engine import SolveBudgetError, SolveLimits, game_domination_number, solve_gi
from .families import FamilyError, FamilySpec
from .graphio import FormatError, encode_graph6, format_edge_list, parse_edge_list, parse_graph6
from .graphs import Graph, GraphError, split_partition
from .harness import (CHECK_KINDS, CheckSpec, ScanReport, pathpower_bounds,
                      scan_stream, verify_extremal)
from .invariants import ExactBudgetError, chain_report
from .strategies import (OPTIMAL, IllegalAgentMove, StrategyError, make_dominator_grid,
                         make_dominator_pathpower, make_dominator_split,
                         make_dominator_tree, make_staller_gamma,
                         make_staller_pathpower, play_match)

DOMINATOR_AGENTS = ("optimal", "tree", "split", "grid", "pathpower")
STALLER_AGENTS = ("optimal", "gamma", "pathpower")


class UsageError(Exception):
    pass


def _add_graph_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", metavar="KIND:PARAMS",
                   help="graph family, e.g. grid:3,4 or path_power:16,2")
    p.add_argument("--g6", metavar="STRING|FILE", help="graph6 line or file holding one")
    p.add_argument("--edges", metavar="FILE",
                   help='edge-list file ("n m" header); "" is the empty graph')


def _add_limit_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized helpers")
    p.add_argument("--memo-cap", type=int, metavar="N", help="max memo entries")
    p.add_argument("--node-budget", type=int, metavar="N", help="max search nodes per query")
    p.add_argument("--time-budget", type=float, metavar="SECONDS",
                   help="wall-clock limit per query")


def _limits(args: argparse.Namespace) -> SolveLimits:
    kwargs = {}
    if args.memo_cap is not None:
        kwargs["memo_capacity"] = args.memo_cap
    if args.node_budget is not None:
        kwargs["node_budget"] = args.node_budget
    if args.time_budget is not None:
        kwargs["time_budget"] = args.time_budget
    return SolveLimits(**kwargs)


def _resolve_graph(args: argparse.Namespace) -> tuple[Graph, Optional[FamilySpec]]:
    given = [name for name in ("family", "g6", "edges") if getattr(args, name) is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --family, --g6, --edges")
    try:
        if args.family is not None:
            spec = FamilySpec.parse(args.family)
            return families.generate_family(spec), spec
        if args.g6 is not None:
            text = args.g6.strip()
            try:
                return parse_graph6(text), None
            except FormatError:
                if os.path.isfile(args.g6):
                    line = next((ln.strip() for ln in open(args.g6) if ln.strip()), "")
                    return parse_graph6(line), None
                raise
        if args.edges == "":
            return parse_edge_list(""), None
        return parse_edge_list(open(args.edges).read()), None
    except (FamilyError, FormatError, GraphError) as exc:
        raise UsageError(str(exc)) from None
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _emit(args: argparse.Namespace, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_solve(args: argparse.Namespace) -> int:
    g, _ = _resolve_graph(args)
    try:
        result = solve_gi(g, _limits(args))
    except SolveBudgetError as exc:
        lo, hi = exc.partial if exc.partial else (0, g.n)
        _emit(args, {"error": "budget", "bounds": [lo, hi]},
              [f"budget exhausted; known bounds {lo}..{hi}"])
        return 1
    line = " ".join(f"{u}->{v}" for u, v in result.principal_line)
    _emit(args, {"value": result.value,
                 "principal_line": [list(r) for r in result.principal_line],
                 "nodes": result.stats.nodes, "seconds": result.stats.seconds},
          [f"gamma_i = {result.value}",
           f"principal line: {line}" if line else "principal line: (empty game)"])
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    g, _ = _resolve_graph(args)
    limits = _limits(args)
    report = chain_report(g, node_budget=limits.node_budget,
                          memo_capacity=limits.memo_capacity)
    entries = report.as_dict()
    payload = dict(entries)
    text = [" ".join(f"{k}={'?' if v is None else v}" for k, v in entries.items())]
    _emit(args, payload, text)
    return 1 if any(v is None for v in entries.values()) else 0


def cmd_gamedom(args: argparse.Namespace) -> int:
    g, _ = _resolve_graph(args)
    try:
        value = game_domination_number(g, _limits(args))
    except SolveBudgetError:
        _emit(args, {"error": "budget"}, ["budget exhausted"])
        return 1
    _emit(args, {"game_domination_number": value}, [f"gamma_g = {value}"])
    return 0


def _make_agent(side: str, name: str, g: Graph, family: Optional[FamilySpec],
                limits: SolveLimits):
    if name == "optimal":
        return OPTIMAL
    if side == "dominator":
        if name == "tree":
            return make_dominator_tree(g)
        if name == "split":
            partition = split_partition(g)
            if partition is None:
                raise UsageError("split agent needs a split graph")
            return make_dominator_split(g, partition)
        if name == "grid":
            if family is None or family.kind != "grid":
                raise UsageError("grid agent needs --family grid:m,n")
            return make_dominator_grid(*family.params)
        if name == "pathpower":
            if family is None or family.kind != "path_power":
                raise UsageError("pathpower agent needs --family path_power:n,k")
            return make_dominator_pathpower(*family.params)
    else:
        if name == "gamma":
            return make_staller_gamma(g)
        if name == "pathpower":
            if family is None or family.kind != "path_power":
                raise UsageError("pathpower agent needs --family path_power:n,k")
            return make_staller_pathpower(*family.params, limits=limits)
    raise UsageError(f"unknown {side} agent {name!r}")


def cmd_arena(args: argparse.Namespace) -> int:
    g, family = _resolve_graph(args)
    limits = _limits(args)
    try:
        dom = _make_agent("dominator", args.dominator, g, family, limits)
        sta = _make_agent("staller", args.staller, g, family, limits)
    except StrategyError as exc:
        raise UsageError(str(exc)) from None
    try:
        record = play_match(g, dom, sta, limits)
    except (IllegalAgentMove, AssertionError) as exc:
        _emit(args, {"error": "agent", "detail": str(exc)}, [f"agent failure: {exc}"])
        return 1
    except SolveBudgetError:
        _emit(args, {"error": "budget"}, ["budget exhausted"])
        return 1
    rounds = " ".join(f"{u}->{v}" for u, v in record.rounds)
    _emit(args, record.to_dict(),
          [f"length = {record.length}",
           f"dominator: {record.agents[0]}  staller: {record.agents[1]}",
           f"rounds: {rounds}" if rounds else "rounds: (none)"])
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    limits = _limits(args)
    specs = []
    for kind in args.checks.split(","):
        kind = kind.strip()
        if not kind:
            continue
        params = None
        if kind in ("grid_formula", "pathpower_bounds"):
            if not args.params:
                raise UsageError(f"{kind} needs --params, e.g. --params 3,4")
            values = [int(x) for x in args.params.split(",")]
            params = (dict(zip(("m", "n"), values)) if kind == "grid_formula"
                      else dict(zip(("n", "k"), values)))
        try:
            specs.append(CheckSpec(kind, limits=limits, params=params))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not specs:
        raise UsageError(f"--checks needs kinds from: {', '.join(CHECK_KINDS)}")
    stream = sys.stdin if args.input == "-" else open(args.input)
    try:
        if args.json:
            report = scan_stream(stream, specs, jobs=args.jobs)
            print(report.to_json())
        else:
            from .harness import CSV_HEADER
            print(CSV_HEADER)
            report = scan_stream(stream, specs, jobs=args.jobs,
                                 on_row=lambda row: print(row.to_csv(), flush=True))
    finally:
        if stream is not sys.stdin:
            stream.close()
    return 0 if report.clean else 1


def cmd_extremal(args: argparse.Namespace) -> int:
    g, _ = _resolve_graph(args)
    row = verify_extremal(g, _limits(args))
    _emit(args, row.to_dict(),
          [f"verdict = {row.verdict}",
           f"value = {row.value}  expected(n-delta) = {row.expected}  {row.witness}"])
    return 0 if row.verdict in ("pass", "skipped") else 1


def cmd_bounds(args: argparse.Namespace) -> int:
    n, k = args.pathpower
    try:
        lower, upper = pathpower_bounds(n, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"n": n, "k": k, "lower": lower, "upper": upper},
          [f"lower = {lower}", f"upper = {upper}"])
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    g, family = _resolve_graph(args)
    if family is None:
        raise UsageError("family subcommand needs --family")
    if args.emit == "graph6":
        print(encode_graph6(g))
    else:
        sys.stdout.write(format_edge_list(g))
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(analysis_cap=args.analysis_cap, persist_path=args.persist,
                     limits=_limits(args))
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indidom",
        description="Exact solver and analysis tools for the indicated domination game.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str, graph: bool = True):
        p = sub.add_parser(name, help=help_text)
        if graph:
            _add_graph_flags(p)
        _add_limit_flags(p)
        p.set_defaults(handler=handler)
        return p

    command("solve", cmd_solve, "compute the indicated domination number")
    command("invariants", cmd_invariants, "compute the classical invariant chain")
    command("gamedom", cmd_gamedom, "compute the game domination number")

    arena = command("arena", cmd_arena, "play an agent match")
    arena.add_argument("--dominator", choices=DOMINATOR_AGENTS, default="optimal")
    arena.add_argument("--staller", choices=STALLER_AGENTS, default="optimal")

    scan = command("scan", cmd_scan, "run checks over a graph6 stream", graph=False)
    scan.add_argument("input", nargs="?", default="-",
                      help="graph6 file, or - for standard input")
    scan.add_argument("--checks", required=True,
                      help=f"comma-separated kinds from: {', '.join(CHECK_KINDS)}")
    scan.add_argument("--jobs", type=int, default=1, help="parallel workers")
    scan.add_argument("--params", help="parameters for grid_formula (m,n) or pathpower_bounds (n,k)")

    command("extremal", cmd_extremal, "check the maximal-length structure theorem")

    bounds = command("bounds", cmd_bounds, "evaluate closed-form bounds", graph=False)
    bounds.add_argument("--pathpower", nargs=2, type=int, metavar=("N", "K"), required=True)

    family = command("family", cmd_family, "emit a family graph")
    family.add_argument("--emit", choices=("graph6", "edges"), default="graph6")

    serve = command("serve", cmd_serve, "run the HTTP game service", graph=False)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--persist", metavar="FILE", help="session snapshot file")
    serve.add_argument("--analysis-cap", type=int, default=18,
                       help="largest n with exact engine replies")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ExactBudgetError, SolveBudgetError) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
