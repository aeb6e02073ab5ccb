"""Command-line front end.

Exit codes: 0 success/pass, 2 verification failed, 3 alpha does not qualify,
4 resource or range limit, 5 malformed group expression.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .descriptors import (
    GroupExprError,
    format_expr,
    graph_view,
    order_of,
    parse_group_expr,
    required_sieve_limit,
)
from .numtheory import SieveTooSmall, format_factored, sieve
from .primegraph import GraphTooLarge, degree_pattern, materialize
from .theorem import (
    AlphaOutOfRange,
    NonQualifying,
    all_same_od,
    od_class,
    search_candidates,
    verify_main_theorem,
)

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_NON_QUALIFYING = 3
EXIT_RESOURCE = 4
EXIT_PARSE = 5

DEFAULT_SIEVE_LIMIT = 2 * 10**7


class ResourceError(Exception):
    pass


def _sieve_for(needed: int, args):
    if needed > args.sieve_limit:
        raise ResourceError(f"needs a sieve up to {needed}, above --sieve-limit {args.sieve_limit}")
    return sieve(max(needed, 2))


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dumps(data) -> str:
    return json.dumps(data, indent=2)


def cmd_graph(args) -> int:
    e = parse_group_expr(args.expr)
    sieved = _sieve_for(required_sieve_limit(e), args)
    g = materialize(graph_view(e, sieved))
    if args.format == "dot":
        _emit(g.to_dot())
    elif args.format == "json":
        _emit(_dumps({"expr": format_expr(e)} | g.to_json()))
    else:
        _emit("vertices: " + " ".join(map(str, g.vertices)))
        _emit("edges: " + " ".join(f"{p}-{q}" for p, q in g.iter_edges()))
    return EXIT_OK


def cmd_degpat(args) -> int:
    e = parse_group_expr(args.expr)
    sieved = _sieve_for(required_sieve_limit(e), args)
    pattern = degree_pattern(graph_view(e, sieved))
    if args.format == "json":
        _emit(_dumps({"expr": format_expr(e)} | pattern.to_json()))
    else:
        _emit(pattern.text())
    return EXIT_OK


def cmd_order(args) -> int:
    e = parse_group_expr(args.expr)
    sieved = _sieve_for(required_sieve_limit(e), args)
    order = order_of(e, sieved)
    if args.format == "json":
        factors = {str(q): order[q] for q in sorted(order)}
        _emit(_dumps({"expr": format_expr(e), "order": factors}))
    else:
        _emit(format_factored(order))
    return EXIT_OK


def cmd_search(args) -> int:
    rows = search_candidates(args.max_alpha)
    if args.format == "json":
        _emit(_dumps({"candidates": [w.to_json() for w in rows],
                      "qualifying": [w.alpha for w in rows if w.qualifies]}))
        return EXIT_OK
    _emit(f"{'alpha':>5}  {'p':>20}  qualifies  reasons")
    for w in rows:
        flag = "yes" if w.qualifies else "no"
        _emit(f"{w.alpha:>5}  {w.p:>20}  {flag:<9}  {'; '.join(w.reasons)}".rstrip())
    return EXIT_OK


def cmd_verify(args) -> int:
    from .theorem import check_candidate

    witness = check_candidate(args.alpha)
    if not witness.qualifies:
        raise NonQualifying(witness)
    sieved = _sieve_for(witness.p + 6, args)
    report = verify_main_theorem(args.alpha, sieved)
    if args.format == "json":
        _emit(report.dumps())
    else:
        _emit(f"alpha={report.alpha} p={report.p} n={report.p + 6}")
        for i, part in enumerate((report.part1, report.part2, report.part3), start=1):
            _emit(f"part{i}: order_equal={part.order_equal} pattern_equal={part.pattern_equal}")
        _emit(f"graph_identity: {report.graph_identity} ({report.graph_identity_certificate})")
        _emit(f"od_class_size_lower_bound: {report.od_class_size_lower_bound}")
        _emit("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_odclass(args) -> int:
    family = args.family.capitalize()
    members = od_class(args.alpha, family)
    same = None
    if args.check:
        sieved = _sieve_for(5**args.alpha, args)
        same = all_same_od(members, sieved)
    if args.format == "json":
        data = {"alpha": args.alpha, "family": family, "members": [format_expr(m) for m in members]}
        if same is not None:
            data["same_od"] = same
        _emit(_dumps(data))
    else:
        for m in members:
            _emit(format_expr(m))
        if same is not None:
            _emit(f"# same order and degree pattern: {'yes' if same else 'NO'}")
    return EXIT_FAIL if same is False else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default=argparse.SUPPRESS)
    common.add_argument("--sieve-limit", type=int, default=argparse.SUPPRESS, metavar="N")

    parser = argparse.ArgumentParser(
        prog="gkod",
        description="Prime graphs, degree patterns and OD-data of alternating and symmetric groups.",
    )
    parser.add_argument("--format", choices=("text", "json", "dot"), default="text")
    parser.add_argument("--sieve-limit", type=int, default=DEFAULT_SIEVE_LIMIT, metavar="N",
                        help="largest sieve a command may build (default %(default)s)")
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, helptext in (
        ("graph", cmd_graph, "prime graph of a group expression"),
        ("degpat", cmd_degpat, "degree pattern of a group expression"),
        ("order", cmd_order, "factored order of a group expression"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("expr", help='group expression, e.g. "Alt(624) x Ab(5,[2,1,1])"')
        p.set_defaults(func=func)

    p = sub.add_parser("search", parents=[common], help="scan alpha for p = 5^alpha - 6")
    p.add_argument("--max-alpha", type=int, required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", parents=[common], help="verify the order/degree-pattern coincidences")
    p.add_argument("--alpha", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("odclass", parents=[common], help="list groups sharing OD-data with A/S_{p+6}")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--family", choices=("alt", "sym"), default="alt")
    p.add_argument("--check", action="store_true", help="also confirm the members share OD-data")
    p.set_defaults(func=cmd_odclass)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.format == "dot" and args.command != "graph":
        print("gkod: --format dot is only valid for the graph command", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except GroupExprError as exc:
        print(f"gkod: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonQualifying as exc:
        print(f"gkod: {exc}", file=sys.stderr)
        return EXIT_NON_QUALIFYING
    except (ResourceError, SieveTooSmall, GraphTooLarge, AlphaOutOfRange, MemoryError) as exc:
        print(f"gkod: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
