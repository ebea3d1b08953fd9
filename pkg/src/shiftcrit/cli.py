"""Command-line interface.

Subcommands: gen (emit a shift graph), core (emit the critical core),
chi (exact chromatic number with certificates), verify (run a
verification pipeline), diagram (render the core as SVG).

Exit codes: 0 success or pass, 1 verification failure, 2 usage or I/O
error, 3 inconclusive within budget.  SHIFTCRIT_MAX_SECONDS overrides
the default time budget; explicit flags beat the environment.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .diagram import DiagramSpec, render_svg
from .errors import InvalidParameterError, InvalidVertexError
from .graphs import (
    ShiftGraph,
    as_vertex,
    build_shift_graph,
    critical_core,
    graph_to_json_dict,
    to_dimacs,
)
from .solvers import SearchBudget, chromatic_number
from .verify import (
    verify_chromatic_formula,
    verify_core_chromatic,
    verify_criticality,
    verify_uniqueness,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

_STATUS_EXIT = {"pass": EXIT_OK, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}


def _budget(args) -> SearchBudget:
    seconds = args.max_seconds
    if seconds is None:
        env = os.environ.get("SHIFTCRIT_MAX_SECONDS")
        if env is not None:
            try:
                seconds = float(env)
            except ValueError:
                raise InvalidParameterError(
                    f"SHIFTCRIT_MAX_SECONDS must be a number, got {env!r}")
    kwargs = {}
    if args.max_nodes is not None:
        kwargs["max_nodes"] = args.max_nodes
    if seconds is not None:
        kwargs["max_seconds"] = seconds
    return SearchBudget(**kwargs)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _parse_vertex(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidParameterError(f"--delete wants 'x,y', got {text!r}")
    try:
        x, y = int(parts[0]), int(parts[1])
    except ValueError:
        raise InvalidParameterError(f"--delete wants integers, got {text!r}")
    return as_vertex((x, y))


def cmd_gen(args) -> int:
    g = build_shift_graph(args.n_points)
    if args.format == "dimacs":
        _emit(to_dimacs(g), args.out)
    else:
        _emit(_json_text(graph_to_json_dict(g)), args.out)
    return EXIT_OK


def cmd_core(args) -> int:
    _emit(_json_text(critical_core(args.n).to_json_dict()), args.out)
    return EXIT_OK


def cmd_chi(args) -> int:
    if (args.n_points is None) == (args.core is None):
        raise InvalidParameterError("pick exactly one target: a ground size or --core n")
    if args.core is not None:
        view = critical_core(args.core).induced()
    else:
        view = build_shift_graph(args.n_points)
    if args.delete is not None:
        v = _parse_vertex(args.delete)
        keep = [w for w in view.vertex_list() if w != v]
        if len(keep) == len(view.vertex_list()):
            raise InvalidVertexError(f"vertex {v} is not in the target graph")
        parent = view if isinstance(view, ShiftGraph) else view.parent
        view = parent.induced(keep)
    res = chromatic_number(view, _budget(args))
    if not res.conclusive:
        print("chi inconclusive within budget")
        return EXIT_INCONCLUSIVE
    print(f"chi = {res.chi}")
    if args.out is not None:
        _emit(_json_text(res.to_json_dict()), args.out)
        print(f"certificates: {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    budget = _budget(args)
    if args.theorem == "1":
        report = verify_uniqueness(args.n, budget)
    elif args.theorem == "2":
        refute = None
        if args.members_only:
            refute = False
        elif args.refute_nonmembers:
            refute = True
        report = verify_criticality(args.n, budget, refute_nonmembers=refute)
    elif args.theorem == "3":
        report = verify_core_chromatic(args.n, budget)
    else:
        report = verify_chromatic_formula(args.n, budget)
    passed = sum(1 for c in report.checks if c.status == "pass")
    print(f"theorem {report.theorem}: {report.status} "
          f"({passed}/{len(report.checks)} checks passed)")
    for c in report.checks:
        if c.status != "pass":
            print(f"  {c.status}: {c.claim}")
    for entry in report.skipped:
        print(f"  skipped: {entry['claim']}")
    if args.out is not None:
        _emit(_json_text(report.to_json_dict()), args.out)
        print(f"report: {args.out}")
    return _STATUS_EXIT[report.status]


def cmd_diagram(args) -> int:
    spec = DiagramSpec(args.n, cell_size=args.cell_size or 0,
                       hyperbola=not args.no_hyperbola)
    _emit(render_svg(spec), args.out)
    return EXIT_OK


def _add_budget_flags(p) -> None:
    p.add_argument("--max-nodes", type=int, default=None,
                   help="search node budget per solver query")
    p.add_argument("--max-seconds", type=float, default=None,
                   help="wall-clock budget per solver query")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftcrit",
        description="Shift graphs, their critical cores, and certified chromatic numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a shift graph")
    p.add_argument("n_points", type=int, metavar="N")
    p.add_argument("--format", choices=("dimacs", "json"), default="dimacs")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("core", help="emit the critical core for exponent n")
    p.add_argument("n", type=int)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("chi", help="exact chromatic number with certificates")
    p.add_argument("n_points", type=int, nargs="?", default=None, metavar="N")
    p.add_argument("--core", type=int, default=None, metavar="n",
                   help="target the core subgraph instead of the full graph")
    p.add_argument("--delete", default=None, metavar="x,y",
                   help="delete one vertex before solving")
    p.add_argument("--out", default=None, help="write certificates as JSON")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("verify", help="run a verification pipeline")
    p.add_argument("theorem", choices=("1", "2", "3", "formula"))
    p.add_argument("--n", type=int, required=True,
                   help="core exponent, or max ground size for 'formula'")
    p.add_argument("--members-only", action="store_true",
                   help="criticality: skip non-member refutations")
    p.add_argument("--refute-nonmembers", action="store_true",
                   help="criticality: force non-member refutations at any n")
    p.add_argument("--out", default=None, help="write the report as JSON")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diagram", help="render the core as SVG")
    p.add_argument("n", type=int)
    p.add_argument("--cell-size", type=int, default=None, metavar="PX")
    p.add_argument("--no-hyperbola", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_diagram)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParameterError, InvalidVertexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
