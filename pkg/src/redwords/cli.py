"""Command-line front end: one subcommand per capability, scriptable output.

Exit codes: 0 success, 1 usage error, 2 a proved statement failed (an
implementation bug, never bad input), 3 the word set exceeded the cap while
--strict was set.  Without --strict a cap skip is reported on stderr and the
run still exits 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .characterizations import catalan, count_lower, count_upper
from .classes import partition
from .coxeter_moves import BRAID, COMMUTATION
from .errors import InvariantViolation, WordCapExceeded
from .graphs import (
    build_gamma,
    build_table,
    build_word_graph,
    contract,
    export_dot,
    verify_jump_property,
)
from .permutation import Permutation, parse_window, window_text
from .reduced_words import DEFAULT_WORD_CAP, enumerate_words, word_text
from .scan import CHECK_GROUPS, ScanOptions, scan
from .weak_order import interval

SCHEMA = 1


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse API
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="redwords",
        description="Reduced words of permutations: braid and commutation "
        "classes, move graphs, bounds, and exhaustive verification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_perm_command(name, help_text, formats=("text", "json")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("window", help='permutation window, e.g. "[25314]" or "2 5 3 1 4"')
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--cap", type=int, default=DEFAULT_WORD_CAP,
                       help="skip when |R(w)| exceeds this")
        p.add_argument("--strict", action="store_true",
                       help="exit 3 instead of reporting a cap skip")
        return p

    add_perm_command("words", "list R(w) in lexicographic order")
    p = add_perm_command("classes", "list braid or commutation classes")
    p.add_argument("--kind", choices=(BRAID, COMMUTATION), default=COMMUTATION)
    add_perm_command("table", "the braid-by-commutation intersection table",
                     formats=("text", "json", "csv"))
    p = add_perm_command("graph", "move graph or a contraction, DOT or JSON",
                         formats=("dot", "json"))
    p.add_argument("--which", choices=("word", "gc", "gb", "gamma"), default="word")
    add_perm_command("check", "bound status and every predicate for one permutation")
    add_perm_command("interval", "weak order interval: rank sizes, width, support")

    p = sub.add_parser("counts", help="closed-form Catalan / upper / lower counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("scan", help="verify every statement across all of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_WORD_CAP)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--checks", default="all",
                   help=f"comma list from {','.join(CHECK_GROUPS)}, or all/none")
    p.add_argument("--output", default="-",
                   help="JSON Lines destination; - for stdout (default)")
    p.add_argument("--strict", action="store_true",
                   help="exit 3 if any permutation was skipped at the cap")
    p.add_argument("--format", choices=("json", "text"), default="json",
                   help="text prints the report summary instead of JSON Lines")

    p = sub.add_parser("conjecture", help="test the weak-order conjecture on all of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_WORD_CAP)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--strict", action="store_true")
    return parser


def run(argv: Sequence[str]) -> int:
    """Parse argv, execute, and return the exit code (no SystemExit)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _UsageError as exc:
        print(f"redwords: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except _UsageError as exc:
        print(f"redwords: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"redwords: {exc}", file=sys.stderr)
        return 1
    except WordCapExceeded as exc:
        if getattr(args, "strict", False):
            print(f"redwords: {exc}", file=sys.stderr)
            return 3
        print(f"redwords: skipped: {exc}", file=sys.stderr)
        return 0
    except InvariantViolation as exc:
        print(f"redwords: theorem check failed: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    return {
        "words": _cmd_words,
        "classes": _cmd_classes,
        "table": _cmd_table,
        "graph": _cmd_graph,
        "check": _cmd_check,
        "interval": _cmd_interval,
        "counts": _cmd_counts,
        "scan": _cmd_scan,
        "conjecture": _cmd_conjecture,
    }[args.command](args)


def _perm(args: argparse.Namespace) -> Permutation:
    return parse_window(args.window)


def _emit_json(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _cmd_words(args) -> int:
    w = _perm(args)
    ws = enumerate_words(w, cap=args.cap)
    if args.format == "json":
        _emit_json({
            "schema": SCHEMA,
            "window": list(w.window),
            "n": w.n,
            "length": w.length(),
            "count": len(ws),
            "words": [word_text(u) for u in ws.words],
        })
    else:
        for u in ws.words:
            print(word_text(u))
    return 0


def _cmd_classes(args) -> int:
    w = _perm(args)
    ws = enumerate_words(w, cap=args.cap)
    part = partition(ws, args.kind)
    label = "B" if args.kind == BRAID else "C"
    if args.format == "json":
        _emit_json({
            "schema": SCHEMA,
            "window": list(w.window),
            "kind": args.kind,
            "classes": [[word_text(u) for u in cls] for cls in part.as_word_lists()],
        })
    else:
        for k, cls in enumerate(part.as_word_lists(), 1):
            print(f"{label}{k}: " + " ".join(word_text(u) for u in cls))
    return 0


def _cmd_table(args) -> int:
    w = _perm(args)
    ws = enumerate_words(w, cap=args.cap)
    table = build_table(partition(ws, BRAID), partition(ws, COMMUTATION))
    grid = table.to_rows()
    if args.format == "json":
        _emit_json({
            "schema": SCHEMA,
            "window": list(w.window),
            "rows": table.rows,
            "cols": table.cols,
            "cells": grid,
            "jump_property": verify_jump_property(table),
        })
    elif args.format == "csv":
        print("," + ",".join(f"C{c + 1}" for c in range(table.cols)))
        for r, row in enumerate(grid):
            print(f"B{r + 1}," + ",".join(cell or "" for cell in row))
    else:
        width = max([5] + [len(cell) for row in grid for cell in row if cell])
        header = "     " + " ".join(f"C{c + 1}".ljust(width) for c in range(table.cols))
        print(header.rstrip())
        for r, row in enumerate(grid):
            cells = " ".join((cell or "-").ljust(width) for cell in row)
            print(f"B{r + 1}".ljust(5) + cells.rstrip())
    return 0


def _cmd_graph(args) -> int:
    w = _perm(args)
    ws = enumerate_words(w, cap=args.cap)
    g = build_word_graph(ws)
    style = "word"
    if args.which == "gc":
        g, style = contract(g, COMMUTATION), "class"
    elif args.which == "gb":
        g, style = contract(g, BRAID), "class"
    elif args.which == "gamma":
        g, style = build_gamma(partition(ws, BRAID), partition(ws, COMMUTATION)), "class"
    if args.format == "json":
        _emit_json({
            "schema": SCHEMA,
            "window": list(w.window),
            "which": args.which,
            "vertices": list(g.labels),
            "edges": [
                {
                    "u": e.u,
                    "v": e.v,
                    "kind": e.kind,
                    "word": word_text(e.word) if e.word is not None else None,
                }
                for e in g.edges
            ],
        })
    else:
        sys.stdout.write(export_dot(g, style=style))
    return 0


def _cmd_check(args) -> int:
    from .reduced_words import count_words
    from .scan import verify_permutation

    w = _perm(args)
    record = verify_permutation(w, word_cap=args.cap)
    if record.skipped:
        raise WordCapExceeded(w.window, count_words(w), args.cap)
    if args.format == "json":
        _emit_json(record.to_json_obj())
    else:
        print(f"window: {window_text(w)}")
        print(f"length: {record.length}")
        print(f"r: {record.r}")
        print(f"b: {record.b}")
        print(f"c: {record.c}")
        print(f"achieves_upper: {record.achieves_upper}")
        print(f"achieves_lower: {record.achieves_lower}")
        print(f"circuit_free: {record.circuit_free}")
        print(f"fully_commutative: {record.fully_commutative}")
        print(f"single_braid_class: {record.single_braid_class}")
        print(f"upper_predicate: {record.upper_predicate}")
        print(f"lower_predicate: {record.lower_predicate}")
        print(f"width: {record.width}")
        print(f"support_size: {record.support_size}")
        print(f"conjecture: {record.conjecture_status}")
    if record.violations:
        raise InvariantViolation("; ".join(record.violations))
    return 0


def _cmd_interval(args) -> int:
    w = _perm(args)
    iv = interval(w, cap=args.cap)
    if args.format == "json":
        _emit_json({
            "schema": SCHEMA,
            "window": list(w.window),
            "rank_sizes": list(iv.rank_sizes),
            "width": iv.width,
            "support_size": iv.support_size,
            "size": iv.size,
            "ranks": [
                [window_text(Permutation(win)) for win in rank] for rank in iv.ranks
            ],
        })
    else:
        print(f"window: {window_text(w)}")
        print("rank_sizes: " + " ".join(str(s) for s in iv.rank_sizes))
        print(f"width: {iv.width}")
        print(f"support_size: {iv.support_size}")
        print(f"interval_size: {iv.size}")
    return 0


def _cmd_counts(args) -> int:
    n = args.n
    values = {"n": n, "catalan": catalan(n), "upper": count_upper(n), "lower": count_lower(n)}
    if args.format == "json":
        _emit_json({"schema": SCHEMA, **values})
    elif args.format == "csv":
        print("n,catalan,upper,lower")
        print(f"{n},{values['catalan']},{values['upper']},{values['lower']}")
    else:
        print(f"catalan({n}) = {values['catalan']}")
        print(f"upper({n}) = {values['upper']}")
        print(f"lower({n}) = {values['lower']}")
    return 0


def _parse_checks(text: str) -> frozenset[str]:
    if text == "all":
        return frozenset(CHECK_GROUPS)
    if text == "none":
        return frozenset()
    picked = frozenset(part.strip() for part in text.split(",") if part.strip())
    unknown = picked - set(CHECK_GROUPS)
    if unknown:
        raise _UsageError(f"unknown checks: {', '.join(sorted(unknown))}")
    return picked


def _cmd_scan(args) -> int:
    checks = _parse_checks(args.checks)
    to_stdout = args.output == "-"
    options = ScanOptions(
        n=args.n,
        word_cap=args.cap,
        checks=checks,
        workers=args.workers,
        output_path=None if to_stdout else args.output,
    )
    report = scan(options)
    if args.format == "text":
        print(f"S_{report.n}: {report.total} permutations, "
              f"{report.skipped_count} skipped, {report.violation_count} violations")
        print(f"upper achievers: {report.upper_achiever_count} "
              f"(closed form {report.closed_form_upper})")
        print(f"lower achievers: {report.lower_achiever_count} "
              f"(closed form {report.closed_form_lower})")
        print(f"closed_form_match: {report.closed_form_match}")
        if "classes" in checks:
            print(f"braid classes outside the 2^x 3^y path-product model: "
                  f"{len(report.braid_nonconforming)} permutations")
        if "conjecture" in checks:
            print(f"conjecture counterexamples: {len(report.conjecture_counterexamples)}")
    elif to_stdout:
        sys.stdout.write(report.jsonl())
    if args.strict and report.skipped_count:
        print(f"redwords: {report.skipped_count} permutations skipped at cap "
              f"{args.cap}", file=sys.stderr)
        return 3
    return 0


def _cmd_conjecture(args) -> int:
    checks = frozenset(("weak_order", "conjecture"))
    options = ScanOptions(
        n=args.n, word_cap=args.cap, checks=checks, workers=args.workers,
    )
    report = scan(options)
    agreements = sum(
        1 for rec in report.records if rec.conjecture_status == "agree"
    )
    skipped = report.skipped_count
    counterexamples = [list(win) for win in report.conjecture_counterexamples]
    if args.format == "json":
        _emit_json({
            "schema": SCHEMA,
            "n": report.n,
            "total": report.total,
            "agreements": agreements,
            "skipped": skipped,
            "counterexamples": counterexamples,
        })
    else:
        print(f"S_{report.n}: {agreements} of {report.total} agree, {skipped} skipped")
        if counterexamples:
            print("COUNTEREXAMPLES FOUND:")
            for win in counterexamples:
                print(f"  {win}")
        else:
            print("counterexamples: none")
    if args.strict and skipped:
        print(f"redwords: {skipped} permutations skipped at cap {args.cap}",
              file=sys.stderr)
        return 3
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
