"""Command line front end.

Subcommands: solve (produce a certificate), check (verify one), gen
(print a generated instance), oracle (exact cycle search on small
graphs), bench (run a suite file and write a CSV).

Exit codes: 0 on success or a valid certificate, 1 for an invalid
certificate, 2 for bad input (parse errors, out-of-range parameters,
exhausted search budgets, unreadable files), 3 when the solver detects
an internal inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from .certify import check_certificate
from .errors import BudgetExhausted, InternalContradiction, InvalidInput, ParseError
from .oracle import find_cycle_in_range, min_long_cycle_transversal
from .solver import Packing, SolveTrace, solve, transversal_bound
from .toolkit import (
    VARIANT_ARITY,
    GenSpec,
    emit_certificate,
    emit_graph,
    generate,
    parse_certificate,
    parse_graph,
)

__all__ = ["main"]

# Bound exact-transversal oracle work in bench to instances this small.
_EXACT_LIMIT = 12


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from None


def _write_text(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InvalidInput(f"cannot write {path}: {exc}") from None


def _numeric(token: str):
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"expected a number, got {token!r}") from None


def _cmd_solve(args) -> int:
    g = parse_graph(_read_text(args.input))
    trace = SolveTrace() if args.trace else None
    result = solve(g, args.k, args.l, trace=trace)
    sys.stdout.write(emit_certificate(result, args.k, args.l))
    if args.trace:
        _write_text(args.trace, trace.text())
    return 0


def _cmd_check(args) -> int:
    g = parse_graph(_read_text(args.input))
    cert, k, l = parse_certificate(_read_text(args.certificate))
    if (k, l) != (args.k, args.l):
        raise InvalidInput(
            f"certificate is for k={k}, l={l}, not k={args.k}, l={args.l}"
        )
    verdict = check_certificate(g, cert, args.k, args.l)
    if verdict.valid:
        print("valid")
        return 0
    for reason in verdict.reasons:
        print(f"invalid: {reason}")
    return 1


def _cmd_gen(args) -> int:
    params = tuple(_numeric(tok) for tok in args.params)
    g = generate(GenSpec(args.variant, params, args.seed))
    sys.stdout.write(emit_graph(g))
    return 0


def _cmd_oracle(args) -> int:
    g = parse_graph(_read_text(args.input))
    cycle = find_cycle_in_range(g, args.l, args.max_len)
    found = list(cycle.vertices) if cycle is not None else None
    print(json.dumps({"cycle": found}))
    return 0


def _parse_suite(text: str) -> list[tuple[GenSpec, int, int]]:
    """Suite lines: variant params... k l [seed], '#' starts a comment."""
    jobs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        variant = tokens[0]
        if variant not in VARIANT_ARITY:
            raise ParseError(f"line {lineno}: unknown variant {variant!r}")
        arity = VARIANT_ARITY[variant]
        rest = tokens[1:]
        if len(rest) not in (arity + 2, arity + 3):
            raise ParseError(
                f"line {lineno}: {variant} takes {arity} parameters"
                f" plus k, l, and an optional seed"
            )
        params = tuple(_numeric(tok) for tok in rest[:arity])
        k = int(rest[arity])
        l = int(rest[arity + 1])
        seed = int(rest[arity + 2]) if len(rest) == arity + 3 else 0
        jobs.append((GenSpec(variant, params, seed), k, l))
    return jobs


def _cmd_bench(args) -> int:
    jobs = _parse_suite(_read_text(args.suite))
    try:
        out = open(args.out, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise InvalidInput(f"cannot write {args.out}: {exc}") from None
    with out:
        writer = csv.writer(out)
        writer.writerow(
            [
                "instance",
                "n",
                "m",
                "k",
                "l",
                "outcome",
                "size",
                "bound_f",
                "exact_min",
                "millis",
            ]
        )
        for spec, k, l in jobs:
            g = generate(spec)
            n = len(g.vertices())
            m = len(g.edges())
            started = time.perf_counter()
            result = solve(g, k, l)
            millis = round((time.perf_counter() - started) * 1000)
            if isinstance(result, Packing):
                outcome = "packing"
                size = len(result.cycles)
            else:
                outcome = "transversal"
                size = len(result.vertices)
            bound = transversal_bound(l, k)
            bound_cell = int(bound) if bound.is_integer() else bound
            exact = ""
            if n <= _EXACT_LIMIT:
                exact = len(min_long_cycle_transversal(g, l))
            writer.writerow(
                [spec.name(), n, m, k, l, outcome, size, bound_cell, exact, millis]
            )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="longcycles",
        description="Disjoint long cycles or a small transversal, with proof.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance and print a certificate")
    p.add_argument("--input", required=True, help="edge list file")
    p.add_argument("--k", type=int, required=True, help="number of cycles wanted")
    p.add_argument("--l", type=int, required=True, help="minimum cycle length")
    p.add_argument("--trace", help="file to write the branch trace to")
    p.set_defaults(run=_cmd_solve)

    p = sub.add_parser("check", help="verify a certificate against an instance")
    p.add_argument("--input", required=True, help="edge list file")
    p.add_argument("--certificate", required=True, help="certificate JSON file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(run=_cmd_check)

    p = sub.add_parser("gen", help="print a generated instance as an edge list")
    p.add_argument("variant", choices=sorted(VARIANT_ARITY))
    p.add_argument("params", nargs="*", help="numeric parameters of the variant")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=_cmd_gen)

    p = sub.add_parser("oracle", help="exact search for a cycle in a length range")
    p.add_argument("--input", required=True, help="edge list file")
    p.add_argument("--l", type=int, required=True, help="minimum length")
    p.add_argument("--max-len", type=int, default=None, help="maximum length")
    p.set_defaults(run=_cmd_oracle)

    p = sub.add_parser("bench", help="run a suite file and write a CSV report")
    p.add_argument("--suite", required=True, help="suite description file")
    p.add_argument("--out", required=True, help="CSV output path")
    p.set_defaults(run=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (InvalidInput, BudgetExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalContradiction as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
