"""Command line: ``eval``, ``repl``, ``batch``, ``verify`` and ``table``.

Exit codes: 0 success, 1 evaluation error, 2 syntax error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, TextIO

from . import band
from .errors import FinCondError
from .expr import EvalResult, ExprSyntaxError, evaluate, parse, pretty
from .verify import Bounds, report_json, run_verify

EXIT_OK, EXIT_EVAL, EXIT_SYNTAX, EXIT_VERIFY = 0, 1, 2, 3


def result_json(text: str, r: EvalResult) -> dict:
    out = {"input": text, "kind": r.kind, "value": r.json_value()}
    if r.trace is not None:
        out["trace"] = list(r.trace)
    return out


def run_line(text: str, out: TextIO, as_json: bool = False, trace: bool = False, echo: bool = False) -> int:
    """Evaluate one expression, print the answer, return an exit code."""
    try:
        r = evaluate(parse(text), trace=trace)
    except ExprSyntaxError as exc:
        _report_error(text, "syntax error", exc, out, as_json)
        return EXIT_SYNTAX
    except FinCondError as exc:
        _report_error(text, type(exc).__name__, exc, out, as_json)
        return EXIT_EVAL
    if as_json:
        out.write(json.dumps(result_json(text, r), ensure_ascii=False) + "\n")
        return EXIT_OK
    if r.trace:
        for step in r.trace:
            out.write(f"  {step}\n")
    out.write(f"{text} = {pretty(r)}\n" if echo else pretty(r) + "\n")
    return EXIT_OK


def _report_error(text: str, label: str, exc: Exception, out: TextIO, as_json: bool):
    if as_json:
        out.write(json.dumps({"input": text, "kind": "Error", "value": f"{label}: {exc}"}) + "\n")
    else:
        out.write(f"{text} : {label}: {exc}\n")


def cmd_eval(args) -> int:
    return run_line(args.expression, sys.stdout, args.json, args.trace)


def cmd_batch(args) -> int:
    status = EXIT_OK
    with open(args.file, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            code = run_line(line, sys.stdout, args.json, args.trace, echo=True)
            status = max(status, code)
    return status


def cmd_repl(args, stdin: TextIO = None, out: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    out = out or sys.stdout
    trace, as_json = args.trace, args.json
    interactive = stdin.isatty()
    while True:
        if interactive:
            out.write("fincond> ")
            out.flush()
        line = stdin.readline()
        if not line:
            break
        line = line.strip()
        if not line:
            continue
        if line.startswith(":"):
            cmd, _, arg = line.partition(" ")
            if cmd == ":quit":
                break
            if cmd in (":trace", ":json") and arg in ("on", "off"):
                if cmd == ":trace":
                    trace = arg == "on"
                else:
                    as_json = arg == "on"
                continue
            out.write(f"unknown command {line!r}; try :quit, :trace on|off, :json on|off\n")
            continue
        run_line(line, out, as_json, trace)
    return EXIT_OK


def cmd_verify(args) -> int:
    bounds = Bounds(args.max_degree, args.max_coeff, args.max_scalar)
    report = run_verify(bounds, args.shards)
    print(report_json(report) if args.json else report.format())
    return EXIT_OK if report.ok else EXIT_VERIFY


def table_json() -> dict:
    return {
        "elements": [e.value for e in band.ELEMENTS],
        "table": {x.value: {y.value: band.times_f(x, y).value for y in band.ELEMENTS} for x in band.ELEMENTS},
        "hasse_edges": [[lo.value, hi.value] for lo, hi in band.hasse_edges()],
    }


def cmd_table(args) -> int:
    if args.json:
        print(json.dumps(table_json(), indent=2, ensure_ascii=False))
        return EXIT_OK
    print(band.format_table())
    print()
    print("Hasse edges (lower < upper):")
    for lo, hi in band.hasse_edges():
        print(f"  {lo.symbol} < {hi.symbol}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fincond",
        description="Ordinal arithmetic in Cantor normal form and the finite-condensation derivative. "
                    "NOTE: '*' is the lexicographic product, so 2*w = w + w and w*2 = w.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def output_flags(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.add_argument("--trace", action="store_true", help="print condensation rewrite steps")

    e = sub.add_parser("eval", help="evaluate one expression")
    e.add_argument("expression")
    output_flags(e)
    e.set_defaults(func=cmd_eval)

    r = sub.add_parser("repl", help="interactive session")
    output_flags(r)
    r.set_defaults(func=cmd_repl)

    b = sub.add_parser("batch", help="evaluate one expression per line of a file ('#' starts a comment)")
    b.add_argument("file")
    output_flags(b)
    b.set_defaults(func=cmd_batch)

    v = sub.add_parser("verify", help="run the exhaustive property suites")
    v.add_argument("--max-degree", type=int, default=4)
    v.add_argument("--max-coeff", type=int, default=5)
    v.add_argument("--max-scalar", type=int, default=4)
    v.add_argument("--shards", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print the times_F table and Hasse diagram")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
