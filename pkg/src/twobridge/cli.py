"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse errors.
Diagnostics go to stderr; results to stdout, ASCII only.
"""

from __future__ import annotations

import argparse
import json
import sys

from .conway import conway_diagram, format_diagram, verify_diagram
from .core import (
    format_expansion,
    format_fraction,
    eval_expansion,
    parse_expansion,
    parse_fraction,
)
from .diagram import all_shortest_expansions, depth
from .errors import TwoBridgeError
from .reduction import format_trace, reduce_expansion
from .table import find_record, lookup, verify_table

__all__ = ["main", "entry"]


def _cmd_eval(args) -> int:
    print(format_fraction(eval_expansion(parse_expansion(args.expansion))))
    return 0


def _cmd_reduce(args) -> int:
    reduced, trace = reduce_expansion(parse_expansion(args.expansion))
    if args.trace and trace.steps:
        print(format_trace(trace))
    print(format_expansion(reduced))
    return 0


def _cmd_depth(args) -> int:
    print(depth(parse_fraction(args.fraction)))
    return 0


def _cmd_shortest(args) -> int:
    shortest = all_shortest_expansions(parse_fraction(args.fraction))
    if args.all:
        for e in shortest.sorted():
            print(format_expansion(e))
    else:
        print(format_expansion(shortest.sorted()[0]))
    return 0


def _cmd_invariants(args) -> int:
    report, record = lookup(args.knot)
    if args.json:
        payload = report.to_dict()
        if record is not None:
            payload["table_name"] = record.name
            payload["starred"] = record.starred
        print(json.dumps(payload, indent=2))
    else:
        for line in report.to_lines():
            print(line)
        if record is not None:
            print(f"table_name={record.name}")
            print(f"starred={str(record.starred).lower()}")
    return 0


def _cmd_conway(args) -> int:
    report, _ = lookup(args.knot)
    diagram = conway_diagram(report.knot)
    ok = verify_diagram(diagram, report.knot)
    print(format_diagram(diagram))
    print(f"verified={str(ok).lower()}")
    return 0 if ok else 1


def _cmd_table_verify(_args) -> int:
    report = verify_table()
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def _cmd_table_lookup(args) -> int:
    rec = find_record(args.name)
    print(
        f"name={rec.name} fraction={format_fraction(rec.fraction)} gamma={rec.gamma}"
        f" expansion={format_expansion(rec.expansion)} starred={str(rec.starred).lower()}"
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Crosscap numbers and spanning-surface data of 2-bridge knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a subtractive continued fraction")
    p.add_argument("expansion", help="e.g. '[3,2]' or '1+[-2,-2]'")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("reduce", help="reduce an expansion to a shortest one")
    p.add_argument("expansion")
    p.add_argument("--trace", action="store_true", help="print one line per rewrite step")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("depth", help="depth of a fraction in the Farey diagram")
    p.add_argument("fraction", help="e.g. '2/5' (the literal '1/0' is allowed)")
    p.set_defaults(func=_cmd_depth)

    p = sub.add_parser("shortest", help="a shortest expansion of a fraction")
    p.add_argument("fraction")
    p.add_argument("--all", action="store_true", help="print the whole rectangle-move closure")
    p.set_defaults(func=_cmd_shortest)

    p = sub.add_parser("invariants", help="crosscap, genus and boundary data of a knot")
    p.add_argument("knot", help="fraction like '4/15' or table name like '7_4'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("conway", help="Conway diagram realizing the crosscap number")
    p.add_argument("knot", help="fraction or table name")
    p.set_defaults(func=_cmd_conway)

    p = sub.add_parser("table", help="operations on the embedded knot table")
    table_sub = p.add_subparsers(dest="table_command", required=True)
    q = table_sub.add_parser("verify", help="recompute and check all 362 rows")
    q.set_defaults(func=_cmd_table_verify)
    q = table_sub.add_parser("lookup", help="print one table record")
    q.add_argument("name")
    q.set_defaults(func=_cmd_table_lookup)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TwoBridgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
