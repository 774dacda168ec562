"""Command-line front end.

Exit codes: 0 success / verified, 1 verification mismatch, 2 usage or I/O
error.  Timing output goes on its own lines so the deterministic part of the
output is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from typing import Optional

from .anf import anf_from_table, format_anf
from .fourier import format_pm, pm_vector_from_table, sign_represents, wht_solve
from .funclib import (
    prime_function,
    reference,
    reference_names,
    sum_two_squares_function,
)
from .mixed import (
    format_mixed,
    mixed_to_table,
    parse_polynomial,
    theorem2_representation,
)
from .reduce import GENERALIZED, PAPER, algorithm1
from .truthtable import TruthTable, parse_table

# Static reference data from the published comparison (term counts for the
# restricted prime functions).
PAPER_METHOD_COUNTS = {4: 4, 5: 6, 6: 11, 7: 23, 8: 38, 9: 66, 10: 115, 11: 202, 12: 366}
SIGN_REP_COUNTS = {4: 7, 5: 17, 6: 39, 7: 82, 8: 147, 9: 315, 10: 633, 11: 1259}


class CliError(Exception):
    pass


def _load_table(args) -> TruthTable:
    if args.table is not None:
        try:
            with open(args.table, "r", encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read table file: {exc}")
        try:
            return parse_table(text)
        except ValueError as exc:
            raise CliError(f"malformed table file: {exc}")
    if args.func == "prime":
        builder = prime_function
    elif args.func == "sum2sq":
        builder = sum_two_squares_function
    else:
        raise CliError("specify a source with --func NAME --n K or --table FILE")
    if args.n is None:
        raise CliError("--func requires --n")
    try:
        return builder(args.n)
    except ValueError as exc:
        raise CliError(str(exc))


def cmd_repr(args) -> int:
    t = _load_table(args)
    if args.method == "anf":
        print(format_anf(anf_from_table(t)))
        return 0
    if args.method == "fourier":
        print(format_pm(wht_solve(pm_vector_from_table(t))))
        return 0
    # mixed
    if args.reduce:
        poly, report = algorithm1(t, mode=args.mode)
        print(format_mixed(poly))
        print()
        sys.stdout.write(report.to_text(include_trace=args.trace))
    else:
        print(format_mixed(theorem2_representation(t)))
    return 0


def cmd_verify(args) -> int:
    t = _load_table(args)
    if args.ref is not None:
        ref = reference(args.ref)
        if ref.n != t.n:
            raise CliError(
                f"dimension mismatch: reference {args.ref} has n={ref.n}, table has n={t.n}"
            )
        if ref.kind == "pm":
            if sign_represents(ref.polynomial(), t):
                print(f"{args.ref}: sign-represents the target on all {1 << t.n} inputs")
                return 0
            print(f"{args.ref}: sign representation mismatch", file=sys.stderr)
            return 1
        poly = ref.polynomial()
    else:
        try:
            with open(args.poly, "r", encoding="ascii") as fh:
                poly = parse_polynomial(fh.read(), t.n)
        except OSError as exc:
            raise CliError(f"cannot read polynomial file: {exc}")
        except ValueError as exc:
            raise CliError(f"malformed polynomial: {exc}")
    got = mixed_to_table(poly)
    if got == t:
        print(f"verified on all {1 << t.n} inputs")
        return 0
    diff = got.packed ^ t.packed
    first = (diff & -diff).bit_length() - 1
    print(f"mismatch at input index {first}", file=sys.stderr)
    return 1


@dataclass
class ReportRow:
    function_name: str
    n: int
    paper_reference_count: Optional[int]
    paper_method_count: Optional[int]
    our_count: int
    our_fraction: float
    elapsed: float


def _table1_rows(max_n: int, mode: str):
    rows = []
    for n in range(4, max_n + 1):
        t = prime_function(n)
        poly, report = algorithm1(t, mode=mode)
        if mixed_to_table(poly) != t:
            raise CliError(f"internal error: p_{n} result failed verification")
        rows.append(
            ReportRow(
                function_name=f"p_{n}",
                n=n,
                paper_reference_count=SIGN_REP_COUNTS.get(n),
                paper_method_count=PAPER_METHOD_COUNTS.get(n),
                our_count=poly.term_count(),
                our_fraction=100.0 * poly.term_count() / (1 << n),
                elapsed=report.elapsed,
            )
        )
    return rows


def cmd_table1(args) -> int:
    if not 4 <= args.max_n <= 16:
        raise CliError("--max-n must be in [4, 16]")
    start = time.perf_counter()
    rows = _table1_rows(args.max_n, args.mode)
    total = time.perf_counter() - start
    if args.tsv:
        print("function\tn\tsign_rep_terms\tpaper_terms\tour_terms\tour_pct")
        for r in rows:
            sign_col = "" if r.paper_reference_count is None else str(r.paper_reference_count)
            paper_col = "" if r.paper_method_count is None else str(r.paper_method_count)
            print(f"{r.function_name}\t{r.n}\t{sign_col}\t{paper_col}\t{r.our_count}\t{r.our_fraction:.2f}")
    else:
        header = f"{'function':<10}{'n':>3}{'sign-rep':>10}{'paper':>8}{'ours':>8}{'ours %':>9}"
        print(header)
        print("-" * len(header))
        for r in rows:
            sign_col = "-" if r.paper_reference_count is None else str(r.paper_reference_count)
            paper_col = "-" if r.paper_method_count is None else str(r.paper_method_count)
            print(
                f"{r.function_name:<10}{r.n:>3}{sign_col:>10}{paper_col:>8}"
                f"{r.our_count:>8}{r.our_fraction:>8.2f}%"
            )
    print(f"total elapsed: {total:.3f} s")
    return 0


def _add_source_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--func", choices=["prime", "sum2sq"], help="named function family")
    parser.add_argument("--n", type=int, help="variable count for --func")
    parser.add_argument("--table", metavar="FILE", help="truth-table file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolpoly",
        description="Boolean function polynomial representations and term reduction",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_repr = sub.add_parser("repr", help="print a representation of a function")
    _add_source_flags(p_repr)
    p_repr.add_argument("--method", choices=["anf", "fourier", "mixed"], required=True)
    p_repr.add_argument("--reduce", action="store_true", help="run the reduction pipeline")
    p_repr.add_argument("--mode", choices=[GENERALIZED, PAPER], default=GENERALIZED)
    p_repr.add_argument("--trace", action="store_true", help="include the merge trace")
    p_repr.set_defaults(handler=cmd_repr)

    p_verify = sub.add_parser("verify", help="check a polynomial against a function")
    _add_source_flags(p_verify)
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--poly", metavar="FILE", help="polynomial file (shared grammar)")
    group.add_argument("--ref", choices=list(reference_names()), help="built-in reference")
    p_verify.set_defaults(handler=cmd_verify)

    p_t1 = sub.add_parser("table1", help="reproduce the prime-function comparison table")
    p_t1.add_argument("--max-n", type=int, default=12)
    p_t1.add_argument("--mode", choices=[GENERALIZED, PAPER], default=GENERALIZED)
    p_t1.add_argument("--tsv", action="store_true", help="machine-readable output")
    p_t1.set_defaults(handler=cmd_table1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
