"""Command-line interface.

Verbs operate on files holding concrete term or delta syntax. Exit codes:
0 success, 1 usage or parse error, 2 semantic error (endpoint mismatch,
evaluation failure, undefined algebra), 3 the fuzzer found an incoherence.
"""
from __future__ import annotations

import argparse
import json
import sys

from .algebra import NotCoinitial, NotComposable, UndefinedResidual, compatible, compose, residual
from .delta import EndpointMismatch, apply, check_valid, diff, src, tgt
from .fuzz import Config, run_coherence_suite, summary_to_json, summary_to_text
from .jsonio import delta_to_json, outcome_to_json, term_to_json
from .parser import ParseError, parse_delta, parse_term
from .printer import pretty_delta, pretty_term
from .semantics import (
    DEFAULT_FUEL,
    DeltaEvalError,
    OutOfFuel,
    Stuck,
    Val,
    delta_eval,
    eval_term,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SEMANTIC = 2
EXIT_INCOHERENT = 3


class _Parser(argparse.ArgumentParser):
    """argparse uses exit code 2 for usage errors; this tool reserves 2 for
    semantic failures, so usage problems exit 1 instead."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as err:
        raise _CliError(EXIT_USAGE, f"{path}: {err.strerror}") from err


def _term_file(path: str):
    try:
        return parse_term(_read(path))
    except ParseError as err:
        raise _CliError(EXIT_USAGE, f"{path}:{err}") from err


def _delta_file(path: str):
    try:
        return parse_delta(_read(path))
    except ParseError as err:
        raise _CliError(EXIT_USAGE, f"{path}:{err}") from err


def _emit(obj: dict) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_eval(args: argparse.Namespace) -> int:
    out = eval_term(_term_file(args.file), args.fuel)
    if args.json:
        _emit(outcome_to_json(out))
        return EXIT_OK if isinstance(out, Val) else EXIT_SEMANTIC
    match out:
        case Val(v):
            print(pretty_term(v))
            return EXIT_OK
        case Stuck(reason, at):
            print(f"stuck: {reason} at {pretty_term(at)}", file=sys.stderr)
        case OutOfFuel(at):
            print(f"out of fuel at {pretty_term(at)}", file=sys.stderr)
    return EXIT_SEMANTIC


def _cmd_delta_eval(args: argparse.Namespace) -> int:
    d = _delta_file(args.file)
    source, target = src(d), tgt(d)
    try:
        dv = delta_eval(d, args.fuel)
    except DeltaEvalError as err:
        if args.json:
            _emit(
                {
                    "src": term_to_json(source),
                    "tgt": term_to_json(target),
                    "error": str(err),
                }
            )
        else:
            print(f"delta-eval failed: {err}", file=sys.stderr)
        return EXIT_SEMANTIC
    if args.json:
        _emit(
            {
                "src": term_to_json(source),
                "tgt": term_to_json(target),
                "value_delta": delta_to_json(dv),
                "src_value": term_to_json(src(dv)),
                "tgt_value": term_to_json(tgt(dv)),
            }
        )
    else:
        print(pretty_delta(dv))
    return EXIT_OK


def _cmd_apply(args: argparse.Namespace) -> int:
    term = _term_file(args.termfile)
    d = _delta_file(args.deltafile)
    try:
        print(pretty_term(apply(term, d)))
    except EndpointMismatch as err:
        print(f"apply failed: {err}", file=sys.stderr)
        return EXIT_SEMANTIC
    return EXIT_OK


def _cmd_diff(args: argparse.Namespace) -> int:
    print(pretty_delta(diff(_term_file(args.file1), _term_file(args.file2))))
    return EXIT_OK


def _cmd_compose(args: argparse.Namespace) -> int:
    try:
        print(pretty_delta(compose(_delta_file(args.d1), _delta_file(args.d2))))
    except NotComposable as err:
        print(f"not composable: {err}", file=sys.stderr)
        return EXIT_SEMANTIC
    return EXIT_OK


def _cmd_residual(args: argparse.Namespace) -> int:
    try:
        print(pretty_delta(residual(_delta_file(args.d1), _delta_file(args.d2))))
    except (NotCoinitial, UndefinedResidual) as err:
        print(f"residual undefined: {err}", file=sys.stderr)
        return EXIT_SEMANTIC
    return EXIT_OK


def _cmd_compatible(args: argparse.Namespace) -> int:
    try:
        print("true" if compatible(_delta_file(args.d1), _delta_file(args.d2)) else "false")
    except NotCoinitial as err:
        print(f"not coinitial: {err}", file=sys.stderr)
        return EXIT_SEMANTIC
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    d = _delta_file(args.deltafile)
    term = _term_file(args.termfile)
    if not check_valid(d, term):
        print(
            f"invalid: delta source is {pretty_term(src(d))}, term is {pretty_term(term)}",
            file=sys.stderr,
        )
        return EXIT_SEMANTIC
    print("ok")
    return EXIT_OK


def _cmd_fuzz(args: argparse.Namespace) -> int:
    cfg = Config(
        fuel=args.fuel,
        trials=args.trials,
        max_size=args.size,
        seed=args.seed,
        output="json" if args.json else "text",
    )
    summary, reports = run_coherence_suite(cfg)
    if args.json:
        _emit(summary_to_json(summary, reports))
    else:
        print(summary_to_text(summary))
    return EXIT_INCOHERENT if summary.incoherent else EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    from .server import serve

    serve(args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ilc", description="incremental lambda calculus workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    def fuel_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--fuel", type=int, default=DEFAULT_FUEL, metavar="N")

    p = sub.add_parser("eval", help="evaluate a term file to a value")
    p.add_argument("file")
    fuel_flag(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_eval)

    p = sub.add_parser("delta-eval", help="evaluate a delta to a value delta")
    p.add_argument("file")
    fuel_flag(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_delta_eval)

    p = sub.add_parser("apply", help="apply a delta to a term")
    p.add_argument("termfile")
    p.add_argument("deltafile")
    p.set_defaults(run=_cmd_apply)

    p = sub.add_parser("diff", help="delta from the first term to the second")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(run=_cmd_diff)

    p = sub.add_parser("compose", help="sequential composition of two deltas")
    p.add_argument("d1")
    p.add_argument("d2")
    p.set_defaults(run=_cmd_compose)

    p = sub.add_parser("residual", help="first delta rebased over the second")
    p.add_argument("d1")
    p.add_argument("d2")
    p.set_defaults(run=_cmd_residual)

    p = sub.add_parser("compatible", help="can the residual rebase the first over the second")
    p.add_argument("d1")
    p.add_argument("d2")
    p.set_defaults(run=_cmd_compatible)

    p = sub.add_parser("check", help="check a delta's source against a term")
    p.add_argument("deltafile")
    p.add_argument("termfile")
    p.set_defaults(run=_cmd_check)

    p = sub.add_parser("fuzz", help="run the differential coherence suite")
    p.add_argument("--trials", type=int, default=2000, metavar="N")
    p.add_argument("--seed", type=int, default=1, metavar="S")
    fuel_flag(p)
    p.add_argument("--size", type=int, default=40, metavar="N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_fuzz)

    p = sub.add_parser("serve", help="serve the JSON API over HTTP")
    p.add_argument("--port", type=int, default=7411, metavar="P")
    p.set_defaults(run=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except _CliError as err:
        print(f"ilc: {err}", file=sys.stderr)
        return err.code
    except ValueError as err:
        print(f"ilc: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
