"""Exact scaled codes and residuals against the reference line ``y = k - 1/2``.

Scaling divides ``v^n(k)`` by ``2**C(n-1,2)``. Every scaled value is a dyadic
rational, kept as a :class:`fractions.Fraction`; decimals are produced only
when rendering.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import Context, Decimal
from fractions import Fraction
from typing import Iterable, Iterator, TextIO

from .oracle import ORACLE_MAX_N
from .vertexgen import GeneratorParams, binom2, codes_stream

DEFAULT_PRECISION = 12
CSV_COLUMNS = (
    "n",
    "k",
    "v",
    "scaled_num",
    "scaled_den_exp",
    "scaled_decimal",
    "residual_decimal",
)

_HALF = Fraction(1, 2)


def render_decimal(q: Fraction, precision: int = DEFAULT_PRECISION) -> str:
    """Round ``q`` to ``precision`` significant digits, plain notation."""
    ctx = Context(prec=precision)
    d = ctx.divide(Decimal(q.numerator), Decimal(q.denominator))
    s = format(d, "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


@dataclass(frozen=True)
class ResidualRow:
    n: int
    k: int
    v: int
    exponent: int

    @property
    def scaled(self) -> Fraction:
        return Fraction(self.v, 1 << self.exponent)

    @property
    def residual(self) -> Fraction:
        return self.scaled - (self.k - _HALF)

    def in_bounds(self) -> bool:
        # (k-1) * 2**e <= v < k * 2**e, integers only
        return (self.k - 1) << self.exponent <= self.v < self.k << self.exponent

    def scaled_decimal(self, precision: int = DEFAULT_PRECISION) -> str:
        return render_decimal(self.scaled, precision)

    def residual_decimal(self, precision: int = DEFAULT_PRECISION) -> str:
        return render_decimal(self.residual, precision)


def _check(n: int, max_n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the materialisation cap {max_n}")


def iter_residuals(n: int, max_n: int = ORACLE_MAX_N) -> Iterator[ResidualRow]:
    _check(n, max_n)
    e = binom2(n - 1)
    for k, v in enumerate(codes_stream(GeneratorParams(n)), start=1):
        yield ResidualRow(n, k, v, e)


def residual_table(n: int, max_n: int = ORACLE_MAX_N) -> list[ResidualRow]:
    """One row per vertex index ``k = 1..2**(n-1)``, in order."""
    return list(iter_residuals(n, max_n))


@dataclass(frozen=True)
class BoundsReport:
    n: int
    passed: bool
    rows: int
    max_abs_residual: Fraction
    argmax_k: int
    first_failure_k: int | None = None

    def summary(self, precision: int = DEFAULT_PRECISION) -> str:
        status = "pass" if self.passed else f"FAIL at k={self.first_failure_k}"
        return (
            f"n={self.n} rows={self.rows} bounds={status} "
            f"max|residual|={render_decimal(self.max_abs_residual, precision)} "
            f"at k={self.argmax_k}"
        )


def check_bounds(n: int, max_n: int = ORACLE_MAX_N) -> BoundsReport:
    """Check ``k - 1 <= v^n(k) / 2**C(n-1,2) < k`` for every ``k``."""
    return bounds_report(n, iter_residuals(n, max_n))


def bounds_report(n: int, rows: Iterable[ResidualRow]) -> BoundsReport:
    passed = True
    first_bad = None
    best = Fraction(-1)
    best_k = 0
    count = 0
    for row in rows:
        count += 1
        if not row.in_bounds() and passed:
            passed = False
            first_bad = row.k
        r = abs(row.residual)
        if r > best:
            best, best_k = r, row.k
    return BoundsReport(n, passed, count, best, best_k, first_bad)


def write_csv(
    rows: Iterable[ResidualRow], out: TextIO, precision: int = DEFAULT_PRECISION
) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            (
                row.n,
                row.k,
                row.v,
                row.v,
                row.exponent,
                row.scaled_decimal(precision),
                row.residual_decimal(precision),
            )
        )


def residual_csv(n: int, precision: int = DEFAULT_PRECISION) -> str:
    buf = io.StringIO()
    write_csv(iter_residuals(n), buf, precision)
    return buf.getvalue()
