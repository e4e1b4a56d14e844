"""Command-line surface: enumeration, mapping, transformation, rendering,
and verification.

All commands are deterministic: identical inputs give byte-identical
outputs.  Partitions travel as JSON, on stdin/stdout by default.

Exit codes:
    0  success / all requested checks passed
    1  a verification check failed
    2  usage error or malformed input
    3  transformation not applicable (exceptional partition)
"""

from __future__ import annotations

import argparse
import json
import sys

from .diagram import build_diagram, render
from .glaisher import overpartition_to_twocolor, twocolor_to_overpartition
from .involution import ExceptionalPartition, transform
from .partitions import (
    EVEN,
    InvalidInput,
    InvalidPartition,
    OddOverpartition,
    TwoColorPartition,
    classify,
    enumerate_odd_overpartitions,
    enumerate_two_color,
)
from .verify import (
    format_table,
    identity_report,
    verify_bijection,
    verify_involution,
    verify_series,
    verify_theorem,
)

ALL_CHECKS = ("theorem", "involution", "bijection", "series")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twocolor",
        description="Two-color partitions, odd overpartitions, and their parity identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream one partition family at a given weight")
    p.add_argument("n", type=int, help="weight to enumerate")
    p.add_argument(
        "--filter",
        choices=["E0", "E1", "E2", "E3", "podd"],
        help="restrict to one parity class, or stream odd overpartitions",
    )
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("map", help="apply the overpartition/two-color bijection")
    p.add_argument("direction", choices=["to-two-color", "to-overpartition"])
    _add_io(p)
    p.set_defaults(handler=_cmd_map)

    p = sub.add_parser("transform", help="apply the even-part exchange to a partition")
    _add_io(p)
    p.add_argument("--render-before", metavar="FILE", help="write a diagram of the input")
    p.add_argument("--render-after", metavar="FILE", help="write a diagram of the result")
    p.add_argument("--render-format", choices=["ascii", "svg"], default="ascii")
    p.set_defaults(handler=_cmd_transform)

    p = sub.add_parser("render", help="draw the two-modular diagram of a partition")
    _add_io(p)
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--unicode", action="store_true", help="draw diagonals with U+2572")
    p.set_defaults(handler=_cmd_render)

    p = sub.add_parser("table", help="print the identity count table")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json", "md"], default="csv")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("verify", help="run exhaustive checks and audits")
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument(
        "--checks",
        nargs="+",
        choices=ALL_CHECKS,
        default=list(ALL_CHECKS),
        help="which checks to run (default: all)",
    )
    p.add_argument("--series-depth", type=int, default=200)
    p.set_defaults(handler=_cmd_verify)

    return parser


def _add_io(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="FILE", help="JSON input (default: stdin)")
    p.add_argument("--out", metavar="FILE", help="output file (default: stdout)")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_n", 1) < 1:
        parser.error("--max-n must be at least 1")
    if getattr(args, "series_depth", 1) < 1:
        parser.error("--series-depth must be at least 1")
    try:
        return args.handler(args)
    except ExceptionalPartition as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InvalidPartition as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _read_json(path: str | None):
    text = sys.stdin.read() if path is None else _read_file(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"input is not valid JSON: {exc}") from exc


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_enumerate(args) -> int:
    if args.filter == "podd":
        items = enumerate_odd_overpartitions(args.n)
    else:
        items = enumerate_two_color(args.n)
        if args.filter is not None:
            wanted_even = args.filter in ("E0", "E2")
            by_evens = args.filter in ("E0", "E1")
            items = tuple(
                p
                for p in items
                if (
                    (classify(p).evens_count_parity == EVEN)
                    if by_evens
                    else (classify(p).total_parts_parity == EVEN)
                )
                == wanted_even
            )
    for item in items:
        print(json.dumps(item.to_dict()))
    print(f"count {len(items)}")
    return 0


def _cmd_map(args) -> int:
    obj = _read_json(args.input)
    if args.direction == "to-two-color":
        result = overpartition_to_twocolor(OddOverpartition.from_dict(obj))
    else:
        result = twocolor_to_overpartition(TwoColorPartition.from_dict(obj))
    _write_text(args.out, json.dumps(result.to_dict()) + "\n")
    return 0


def _cmd_transform(args) -> int:
    partition = TwoColorPartition.from_dict(_read_json(args.input))
    outcome = transform(partition)
    if args.render_before:
        _write_text(
            args.render_before,
            render(build_diagram(partition.greens, partition.blues), args.render_format),
        )
    if args.render_after:
        result = outcome.result
        _write_text(
            args.render_after,
            render(build_diagram(result.greens, result.blues), args.render_format),
        )
    _write_text(args.out, json.dumps(outcome.to_dict()) + "\n")
    return 0


def _cmd_render(args) -> int:
    partition = TwoColorPartition.from_dict(_read_json(args.input))
    dia = build_diagram(partition.greens, partition.blues)
    _write_text(args.out, render(dia, args.format, unicode=args.unicode))
    return 0


def _cmd_table(args) -> int:
    reports = verify_theorem(args.max_n)
    _write_text(args.out, format_table(reports, args.format))
    return 0


def _cmd_verify(args) -> int:
    all_ok = True
    for name in ALL_CHECKS:
        if name not in args.checks:
            continue
        if name == "theorem":
            reports = verify_theorem(args.max_n)
            failed = [r.n for r in reports if not r.passed]
            _summary("theorem", f"n=1..{args.max_n}", not failed)
            for n in failed:
                print(f"  identity checks failed at n={n}")
            zero = identity_report(0)
            print(
                f"  n=0 reported: E={zero.E} p_o_bar={zero.p_o_bar} "
                "(exempt from identity checks)"
            )
            all_ok &= not failed
        elif name == "involution":
            audits = [verify_involution(n) for n in range(0, args.max_n + 1)]
            ok = all(a.passed for a in audits)
            _summary("involution", f"n=0..{args.max_n}", ok)
            _print_failures(audits)
            all_ok &= ok
        elif name == "bijection":
            audits = [verify_bijection(n) for n in range(0, args.max_n + 1)]
            ok = all(a.passed for a in audits)
            _summary("bijection", f"n=0..{args.max_n}", ok)
            _print_failures(audits)
            all_ok &= ok
        else:
            audit = verify_series(args.series_depth, args.max_n)
            ok = audit.passed
            _summary("series", f"depth {args.series_depth}, enumeration to {args.max_n}", ok)
            _print_failures([audit])
            all_ok &= ok
    print("all checks passed" if all_ok else "CHECKS FAILED")
    return 0 if all_ok else 1


def _summary(name: str, scope: str, ok: bool) -> None:
    print(f"{name:<11} {scope:<38} {'PASS' if ok else 'FAIL'}")


def _print_failures(audits) -> None:
    for audit in audits:
        for failure in audit.failures:
            print(f"  {failure}")


if __name__ == "__main__":
    sys.exit(main())
