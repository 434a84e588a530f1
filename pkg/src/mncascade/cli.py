"""Command line interface.

Exit codes: 0 success, 1 a verification or cascade check failed, 2 usage or
input error, 3 a configured size bound was exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .action import ActionError, orbit_report
from .cascade import (
    CascadeError,
    Cascade,
    crossings,
    enumerate_cascades,
    format_cycles,
    parse_matrix,
    paths,
    permutation_of,
    render_diagram,
    row_crossings,
    theta,
    weight,
)
from .engine import DEFAULT_MAX_N, ResourceLimitError, character_table, character_value
from .partitions import PartitionError, parse_content, parse_partition, subdivide
from .verify import (
    check_equivalence,
    check_prime_break,
    check_scaled,
    check_subdivided,
    check_vanishing,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text: str):
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise UsageError(str(exc)) from exc


def _content(text: str):
    try:
        return parse_content(text)
    except PartitionError as exc:
        raise UsageError(str(exc)) from exc


def cmd_char(args) -> int:
    lam, mu = _partition(args.lam), _partition(args.mu)
    if lam.size() != mu.size():
        raise UsageError(f"lambda ({lam}) and mu ({mu}) have different sizes")
    value = character_value(lam, mu)
    if args.format == "json":
        print(json.dumps({"lambda": str(lam), "mu": str(mu), "value": str(value)}))
    else:
        print(value)
    return EXIT_OK


def cmd_table(args) -> int:
    table = character_table(args.n, max_n=args.max_n, workers=args.threads)
    out = {"json": table.to_json, "csv": table.to_csv, "text": table.to_text}[args.format]()
    print(out.rstrip("\n"))
    return EXIT_OK


def _cascade_record(index: int, c: Cascade) -> dict:
    perm = permutation_of(c)
    return {
        "index": index,
        "weight": weight(c),
        "crossings": crossings(c),
        "row_crossings": list(row_crossings(c)),
        "permutation": list(perm),
        "cycles": format_cycles(perm),
        "paths": [list(p) for p in paths(c)],
        "rows": list(c.rows),
    }


def _print_cascade(rec: dict, c: Cascade, render: str | None) -> None:
    print(
        f"cascade {rec['index']}: weight {rec['weight']:+d}, crossings {rec['crossings']}, "
        f"permutation {rec['cycles']} = {tuple(rec['permutation'])}"
    )
    for row in c.rows:
        print("  " + row)
    if render == "ascii":
        print(render_diagram(c, "ascii"))
        print("tableau:")
        print(theta(c).render())
    elif render == "svg":
        print(render_diagram(c, "svg"))


def cmd_cascades(args) -> int:
    if args.check is not None:
        text = sys.stdin.read() if args.check == "-" else open(args.check).read()
        try:
            c = parse_matrix(text)
        except CascadeError as exc:
            print(f"not a cascade: {exc}", file=sys.stderr)
            return EXIT_FAIL
        rec = _cascade_record(1, c)
        rec.update(shape=str(c.shape), content=list(c.content))
        if args.format == "json":
            print(json.dumps(rec, indent=2))
        else:
            print(f"valid cascade of shape ({c.shape}) and content {c.content}")
            _print_cascade(rec, c, args.render)
        return EXIT_OK
    if args.lam is None or args.content is None:
        raise UsageError("cascades needs --lambda and --content, or --check FILE")
    lam, content = _partition(args.lam), _content(args.content)
    if not lam:
        raise UsageError("cascades need a non-empty shape")
    found = list(enumerate_cascades(lam, content))
    records = [_cascade_record(i, c) for i, c in enumerate(found, start=1)]
    if args.format == "json":
        print(json.dumps({
            "lambda": str(lam),
            "content": list(content),
            "count": len(found),
            "weight_sum": sum(r["weight"] for r in records),
            "cascades": records,
        }, indent=2))
        return EXIT_OK
    print(f"{len(found)} cascades, weight sum {sum(r['weight'] for r in records)}")
    for rec, c in zip(records, found):
        _print_cascade(rec, c, args.render)
    return EXIT_OK


def cmd_orbits(args) -> int:
    lam, content, d = _partition(args.lam), _content(args.content), args.d
    if d < 1:
        raise UsageError("--d must be positive")
    bad = [k for k in content if k % d]
    if bad:
        raise UsageError(f"content entries {bad} are not divisible by d={d}")
    shape = subdivide(lam, d)
    try:
        report = orbit_report(lam, d, content, enumerate_cascades(shape, content))
    except ActionError as exc:
        raise UsageError(str(exc)) from exc
    report["shape"] = str(shape)
    if sum(content) != shape.size():
        report["notes"].append(f"content sums to {sum(content)} but the shape has size {shape.size()}")
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(f"{len(report['orbits'])} orbits on shape ({shape}), content {tuple(content)}")
        for i, o in enumerate(report["orbits"], start=1):
            print(f"orbit {i}: size {o['size']}, weight {o['weight']}")
    return EXIT_OK if report["all_free"] and report["all_weight_constant"] else EXIT_FAIL


def cmd_verify(args) -> int:
    theorem = args.theorem
    if theorem == "prime-break":
        p = args.p if args.p is not None else args.d
        if p is None:
            raise UsageError("prime-break needs --p")
        try:
            report = check_prime_break(args.n, p, workers=args.threads, max_size=args.max_size)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif theorem == "equivalence":
        report = check_equivalence(args.n, workers=args.threads, max_size=args.max_size)
    else:
        if args.d is None:
            raise UsageError(f"theorem {theorem} needs --d")
        if args.n < 1 or args.d < 1:
            raise UsageError("--n and --d must be positive")
        kwargs = dict(workers=args.threads, max_size=args.max_size)
        if theorem == "1":
            report = check_subdivided(args.n, args.d, with_orbits=args.orbits, **kwargs)
        elif theorem == "2":
            report = check_scaled(args.n, args.d, **kwargs)
        else:
            report = check_vanishing(args.n, args.d, **kwargs)
    if args.format == "json":
        print(report.to_json())
    else:
        failed = [c for c in report.cases if not c["pass"]]
        print(f"{report.claim}: {len(report.cases)} cases, {len(failed)} failed")
        for note in report.notes:
            print(f"note: {note}")
        print("all passed" if report.all_passed else "FAILED")
    return EXIT_OK if report.all_passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="mncascade", formatter_class=argparse.RawDescriptionHelpFormatter,
        description="Symmetric group characters via rim hooks and cascades.",
        epilog=__doc__.split("\n\n", 1)[1],
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    threads = os.cpu_count() or 1

    p = sub.add_parser("char", help="one character value")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("table", help="full character table of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--threads", type=int, default=threads)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("cascades", help="enumerate or check cascades")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--content")
    p.add_argument("--check", metavar="FILE", help="validate a matrix from FILE, '-' for stdin")
    p.add_argument("--render", choices=["ascii", "svg"])
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_cascades)

    p = sub.add_parser("orbits", help="S_d orbits on cascades of a subdivided shape")
    p.add_argument("--lambda", dest="lam", required=True, help="base shape, subdivided internally")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--content", required=True)
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("verify", help="exhaustive divisibility and vanishing checks")
    p.add_argument("--theorem", choices=["1", "2", "3", "prime-break", "equivalence"], required=True,
                   help="1: subdivided classes, 2: classes d*mu, 3: vanishing at d^2*mu")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--orbits", action="store_true", help="also rebuild values from cascade orbits")
    p.add_argument("--threads", type=int, default=threads)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"mncascade: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"mncascade: resource bound: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ValueError, OSError) as exc:
        print(f"mncascade: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
