"""Command-line front end: one-shot evaluation, scripts, paradox reports, REPL.

Exit codes form the automation contract: 0 success, 2 lex/parse error,
3 evaluation error, 4 I/O error, 5 unknown paradox.  Output is UTF-8 text or,
with ``--json``, one JSON object per input line.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import paradoxes
from .errors import GrossoneError, LexError, ParseError
from .exprlang import evaluate, print_value, value_json
from .paradoxes import LampState

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_EVAL = 3
EXIT_IO = 4
EXIT_UNKNOWN_PARADOX = 5

PARADOX_NAMES = ("galileo", "multiplication", "hilbert", "thomson", "torricelli")


def _classify_error(exc: GrossoneError) -> int:
    if isinstance(exc, (LexError, ParseError)):
        return EXIT_PARSE
    return EXIT_EVAL


def run_eval(expr: str, as_json: bool) -> int:
    try:
        value = evaluate(expr)
    except GrossoneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _classify_error(exc)
    if as_json:
        print(json.dumps(value_json(value)))
    else:
        print(print_value(value))
    return EXIT_OK


def run_script(path: str, as_json: bool) -> int:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            value = evaluate(stripped)
        except GrossoneError as exc:
            print(f"line {lineno}: error: {exc}", file=sys.stderr)
            return _classify_error(exc)
        if as_json:
            print(json.dumps({"input": stripped, **value_json(value)}))
        else:
            print(f"{stripped} => {print_value(value)}")
    return EXIT_OK


def _gross_arg(text: str, flag: str):
    from .exprlang import NumberV

    value = evaluate(text)
    if not isinstance(value, NumberV):
        raise ParseError(0, f"a number for {flag}")
    return value.value


def run_paradox(name: str, args: argparse.Namespace, as_json: bool) -> int:
    if name not in PARADOX_NAMES:
        print(f"error: unknown paradox '{name}'", file=sys.stderr)
        return EXIT_UNKNOWN_PARADOX
    try:
        if name == "galileo":
            report = paradoxes.galileo_report()
        elif name == "multiplication":
            report = paradoxes.multiplication_report()
        elif name == "hilbert":
            report = paradoxes.hilbert_accommodate(_gross_arg(args.m, "--m"))
        elif name == "thomson":
            report = paradoxes.thomson_lamp(
                LampState(args.initial), _gross_arg(args.switches, "--switches")
            )
        else:
            report = paradoxes.torricelli(_gross_arg(args.h, "--h"))
    except GrossoneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _classify_error(exc)
    if as_json:
        print(json.dumps(report.to_json()))
    else:
        print(report.render_text())
    return EXIT_OK if report.resolved else EXIT_EVAL


def run_repl() -> int:
    as_json = False
    while True:
        sys.stdout.write("g> ")
        sys.stdout.flush()
        line = sys.stdin.readline()
        if not line:
            return EXIT_OK
        line = line.strip()
        if not line:
            continue
        if line == ":quit":
            return EXIT_OK
        if line == ":json":
            as_json = not as_json
            continue
        try:
            value = evaluate(line)
        except GrossoneError as exc:
            print(f"error: {exc}", file=sys.stderr)
            continue
        if as_json:
            print(json.dumps(value_json(value)))
        else:
            print(print_value(value))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grossone",
        description="Exact arithmetic with the infinite unit G and the sets it measures.",
    )
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--eval", dest="expr", metavar="EXPR", help="evaluate one expression")
    mode.add_argument("--script", metavar="PATH", help="evaluate a file line by line")
    parser.add_argument("--json", action="store_true", help="emit newline-delimited JSON")
    sub = parser.add_subparsers(dest="command")
    par = sub.add_parser("paradox", help="print a named paradox report")
    par.add_argument("name", help="|".join(PARADOX_NAMES))
    par.add_argument("--m", default="1", help="newcomers for hilbert (default 1)")
    par.add_argument("--switches", default="G", help="switch count for thomson (default G)")
    par.add_argument("--initial", choices=["on", "off"], default="on", help="thomson start state")
    par.add_argument("--h", default="G^-1", help="strip width for torricelli (default G^-1)")
    par.add_argument(
        "--json", dest="json", action="store_true", default=argparse.SUPPRESS,
        help="emit the report as one JSON object",
    )
    return parser


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "paradox":
        return run_paradox(args.name, args, args.json)
    if args.expr is not None:
        return run_eval(args.expr, args.json)
    if args.script is not None:
        return run_script(args.script, args.json)
    return run_repl()


if __name__ == "__main__":
    sys.exit(main())
