"""Command line front end.

    filtersums eval FILE            run a DSL program, one JSON result per query
    filtersums suite NAME           run a named property suite
    filtersums suite --list         list the suites

Global flags: ``--seed`` (default 0xF1L7ER), ``--window`` (32), ``--samples``
(suite default, 200 for most) and ``--format json|text``.  Results go to
stdout, diagnostics to stderr; the exit code is 0 only if every query
succeeded or every suite case passed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .dsl import DslSyntaxError
from .interp import run_program
from .sampling import DEFAULT_SEED
from .suites import REGISTRY, UnknownSuite, run_suite


def _flags(p: argparse.ArgumentParser, top: bool):
    # flags are accepted before and after the subcommand
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    p.add_argument("--seed", default=d(DEFAULT_SEED), help="sampling seed, hex or text (default 0xF1L7ER)")
    p.add_argument("--window", type=int, default=d(oracle.DEFAULT_WINDOW), help="oracle window (default 32)")
    p.add_argument("--samples", type=int, default=d(None), help="sample count (default: per suite)")
    p.add_argument("--format", choices=("json", "text"), default=d("json"))


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="filtersums", description="Filter algebra and formal-sum operator calculus.")
    _flags(p, True)
    sub = p.add_subparsers(dest="command", required=True)
    ev = sub.add_parser("eval", help="evaluate a DSL file ('-' for stdin)")
    ev.add_argument("file")
    _flags(ev, False)
    su = sub.add_parser("suite", help="run a named suite")
    _flags(su, False)
    su.add_argument("name", nargs="?")
    su.add_argument("--list", action="store_true", help="list the registered suites")
    return p


def _emit(obj, fmt: str, text: str):
    if fmt == "json":
        print(json.dumps(obj, indent=2, ensure_ascii=False))
    else:
        print(text)


def _eval(args) -> int:
    if args.file == "-":
        src = sys.stdin.read()
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                src = fh.read()
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
    try:
        results = run_program(src)
    except DslSyntaxError as e:
        print(f"syntax error: {e}", file=sys.stderr)
        return 2
    lines = []
    for res in results:
        shown = res.get("value") or res.get("error") or res.get("reason") or ""
        lines.append(f"{res['query']}  =>  {res['verdict']} {shown}".rstrip())
        if res["verdict"] == "error":
            print(res["error"], file=sys.stderr)
    _emit(results, args.format, "\n".join(lines))
    return 1 if any(r["verdict"] == "error" for r in results) else 0


def _suite(args) -> int:
    if args.list:
        if args.format == "json":
            _emit([{"name": s.name, "claim": s.claim} for s in REGISTRY.values()], "json", "")
        else:
            print("\n".join(f"{s.name:15} {s.claim}" for s in REGISTRY.values()))
        return 0
    if not args.name:
        print("error: give a suite name or --list", file=sys.stderr)
        return 2
    try:
        rep = run_suite(args.name, args.seed, args.window, args.samples)
    except UnknownSuite:
        print(f"error: unknown suite {args.name!r}; known: {', '.join(REGISTRY)}", file=sys.stderr)
        return 2
    status = "PASS" if rep.ok else "FAIL"
    text = f"{status} {rep.suite}: {rep.passes}/{rep.cases} cases passed (seed {rep.seed}, window {rep.window})"
    for f in rep.failures[:10]:
        text += f"\n  case {f['index']}: {f['inputs']}\n    expected {f['expected']}, got {f['got']}"
    _emit(rep.to_json(), args.format, text)
    for f in rep.failures[:10]:
        print(f"case {f['index']} failed: {f['inputs']}", file=sys.stderr)
    return 0 if rep.ok else 1


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "eval":
        return _eval(args)
    return _suite(args)


if __name__ == "__main__":
    sys.exit(main())
