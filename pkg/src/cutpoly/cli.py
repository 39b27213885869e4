"""Command line entry point: ``cutpoly {gen,verify,sn,analyze}``.

Exit status is 0 on success, 1 when an invariant check fails and 2 on usage
errors. Data goes to stdout (or ``--out``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import os
import sys
import tempfile
from typing import Iterator, Sequence, TextIO

from . import analysis
from .altcycle import render_sn_csv, render_sn_text, sn_table
from .bitcodec import decode, support
from .formats import OutputFormat, write_vertices
from .oracle import ORACLE_MAX_N, cut_vector, oracle_vertices
from .vertexgen import (
    GeneratorParams,
    Polytope,
    binom2,
    codes_stream,
    cut_vertex_code,
    vertex_code_closed,
    vertex_code_recursive,
    vertex_coords,
)

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class InvariantFailure(Exception):
    def __init__(self, check: str, n: int, k: int, expected, got) -> None:
        super().__init__(f"{check} failed at n={n} k={k}: expected {expected}, got {got}")
        self.check, self.n, self.k, self.expected, self.got = check, n, k, expected, got


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise UsageError(f"range must look like lo:hi, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range bounds must be integers, got {text!r}") from None


def parse_periods(text: str) -> list[int]:
    try:
        periods = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"-N takes comma-separated integers, got {text!r}") from None
    if not periods:
        raise UsageError("-N needs at least one period")
    return periods


@contextlib.contextmanager
def open_output(path: str | None) -> Iterator[TextIO]:
    """Yield a writable stream; files are written atomically or not at all."""
    if path is None or path == "-":
        yield sys.stdout
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cutpoly-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            yield fh
        os.replace(tmp, path)
    except BaseException:
        with contextlib.suppress(FileNotFoundError):
            os.unlink(tmp)
        raise


# -- gen --------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise UsageError(f"-n must be >= 1, got {args.n}")
    lo, hi = parse_range(args.range) if args.range else (1, None)
    try:
        params = GeneratorParams(args.n, lo, hi)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    polytope = Polytope(args.polytope)
    pairs = zip(range(params.k_lo, params.k_hi + 1), codes_stream(params, polytope))
    with open_output(args.out) as out:
        write_vertices(
            params.n, binom2(params.n), pairs, params.count, OutputFormat(args.format), out
        )
    return EXIT_OK


# -- verify -----------------------------------------------------------------


def _expect(check: str, n: int, k: int, expected, got) -> None:
    if expected != got:
        raise InvariantFailure(check, n, k, expected, got)


def verify_dimension(n: int) -> int:
    """Run every cross-check for one ``n``; return the number of vertices checked."""
    e = binom2(n - 1)
    full = (1 << binom2(n)) - 1
    records = oracle_vertices(n)
    prev = -1
    for rec in records:
        k = rec.k
        closed = vertex_code_closed(n, k)
        _expect("closed form vs oracle", n, k, rec.code, closed)
        _expect("recursion vs oracle", n, k, rec.code, vertex_code_recursive(n, k))
        if not closed > prev:
            raise InvariantFailure("strict monotonicity", n, k, f"> {prev}", closed)
        prev = closed
        if not (k - 1) << e <= closed < k << e:
            raise InvariantFailure(
                "almost-linear bound", n, k, f"[{(k - 1) << e}, {k << e})", closed
            )
        w = cut_vertex_code(n, k)
        _expect("complement identity", n, k, full, closed + w)
        x = decode((1 << (n - 1)) + k - 1, n)
        _expect(
            "cut-vector realizability",
            n,
            k,
            cut_vector(support(x), n),
            vertex_coords(n, k, Polytope.CUT).coords,
        )
    last = len(records)
    _expect("first vertex", n, 1, (1 << e) - 1, records[0].code)
    _expect("last vertex", n, last, full, records[-1].code)
    return last


def cmd_verify(args: argparse.Namespace) -> int:
    if not 2 <= args.n_max <= ORACLE_MAX_N:
        raise UsageError(f"--n-max must lie in [2, {ORACLE_MAX_N}], got {args.n_max}")
    total = 0
    for n in range(2, args.n_max + 1):
        try:
            count = verify_dimension(n)
        except InvariantFailure as exc:
            print(f"FAIL {exc}", file=sys.stderr)
            return EXIT_INVARIANT
        total += count
        print(f"n={n}: {count} vertices ok")
    print(f"PASS: {total} vertices checked for n=2..{args.n_max}")
    return EXIT_OK


# -- sn -----------------------------------------------------------------------


def cmd_sn(args: argparse.Namespace) -> int:
    periods = parse_periods(args.N)
    try:
        rows = sn_table(periods, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    render = render_sn_csv if args.format == "csv" else render_sn_text
    with open_output(args.out) as out:
        out.write(render(rows))
    return EXIT_OK


# -- analyze -----------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    if not 2 <= args.n <= ORACLE_MAX_N:
        raise UsageError(f"-n must lie in [2, {ORACLE_MAX_N}], got {args.n}")
    if args.precision < 1:
        raise UsageError(f"--precision must be >= 1, got {args.precision}")
    rows = analysis.residual_table(args.n)
    report = analysis.bounds_report(args.n, rows)
    with open_output(args.out) as out:
        analysis.write_csv(rows, out, args.precision)
    print(report.summary(args.precision), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_INVARIANT


# -- wiring -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutpoly", description="Closed-form vertex enumeration for CUT(n)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="stream vertices of 1-CUT(n) or CUT(n)")
    gen.add_argument("-n", type=int, required=True)
    gen.add_argument("--polytope", choices=[p.value for p in Polytope], default="one-cut")
    gen.add_argument("--format", choices=[f.value for f in OutputFormat], default="dec")
    gen.add_argument("--range", metavar="LO:HI", help="1-based inclusive index range")
    gen.add_argument("--out", metavar="PATH")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="cross-check closed form, recursion and oracle")
    ver.add_argument("--n-max", type=int, default=12)
    ver.set_defaults(func=cmd_verify)

    sn = sub.add_parser("sn", help="print alternating cycle function tables")
    sn.add_argument("-N", required=True, help="comma-separated periods, e.g. 2,4,8")
    sn.add_argument("-k", type=int, default=16, help="largest argument")
    sn.add_argument("--format", choices=["text", "csv"], default="text")
    sn.add_argument("--out", metavar="PATH")
    sn.set_defaults(func=cmd_sn)

    an = sub.add_parser("analyze", help="scaled codes and residuals as CSV")
    an.add_argument("-n", type=int, required=True)
    an.add_argument("--precision", type=int, default=analysis.DEFAULT_PRECISION)
    an.add_argument("--out", metavar="PATH")
    an.set_defaults(func=cmd_analyze)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cutpoly {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
