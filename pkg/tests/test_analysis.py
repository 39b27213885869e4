import csv
import io
from fractions import Fraction

import pytest

from cutpoly.analysis import (
    CSV_COLUMNS,
    ResidualRow,
    bounds_report,
    check_bounds,
    render_decimal,
    residual_csv,
    residual_table,
    write_csv,
)
from cutpoly.vertexgen import binom2

from reference_values import V4


def test_n4_rows():
    rows = residual_table(4)
    assert [r.v for r in rows] == list(V4)
    assert rows[0].scaled == Fraction(7, 8)
    assert rows[0].residual == Fraction(3, 8)
    assert rows[-1].scaled == Fraction(63, 8)
    assert rows[-1].residual == Fraction(63, 8) - Fraction(15, 2) == Fraction(3, 8)


def test_n2_rows():
    rows = residual_table(2)
    assert [r.scaled for r in rows] == [0, 1]
    assert [r.residual for r in rows] == [Fraction(-1, 2)] * 2
    assert [r.residual_decimal() for r in rows] == ["-0.5", "-0.5"]


def test_n3_rows():
    rows = residual_table(3)
    # v^3 = (1, 2, 4, 7) over 2**1
    assert [r.scaled for r in rows] == [Fraction(1, 2), 1, 2, Fraction(7, 2)]
    assert [r.residual for r in rows] == [0, Fraction(-1, 2), Fraction(-1, 2), 0]


@pytest.mark.parametrize("n", range(2, 15))
def test_bounds_pass(n):
    rep = check_bounds(n)
    assert rep.passed
    assert rep.rows == 1 << (n - 1)
    assert rep.first_failure_k is None
    assert Fraction(0) <= rep.max_abs_residual <= Fraction(1, 2)


@pytest.mark.parametrize("n", range(2, 12))
def test_rows_in_range(n):
    for r in residual_table(n):
        assert r.k - 1 <= r.scaled < r.k
        assert Fraction(-1, 2) <= r.residual < Fraction(1, 2)
        assert r.in_bounds() == ((r.k - 1) * 2 ** binom2(n - 1) <= r.v < r.k * 2 ** binom2(n - 1))


def test_report_detects_violation():
    rows = [ResidualRow(3, 1, 1, 1), ResidualRow(3, 2, 9, 1)]
    rep = bounds_report(3, rows)
    assert not rep.passed
    assert rep.first_failure_k == 2
    assert "FAIL" in rep.summary()


def test_check_bounds_reports_argmax():
    rep = check_bounds(2)
    assert rep.max_abs_residual == Fraction(1, 2)
    assert rep.argmax_k == 1


def test_cap():
    with pytest.raises(ValueError):
        residual_table(21)
    with pytest.raises(ValueError):
        residual_table(8, max_n=7)
    with pytest.raises(ValueError):
        check_bounds(1)


@pytest.mark.parametrize(
    "q, prec, text",
    [
        (Fraction(7, 8), 12, "0.875"),
        (Fraction(-1, 2), 12, "-0.5"),
        (Fraction(0), 12, "0"),
        (Fraction(1, 3), 5, "0.33333"),
        (Fraction(2, 3), 3, "0.667"),
        (Fraction(123456, 1), 3, "123000"),
        (Fraction(1, 1 << 40), 4, "0.0000000000009095"),
    ],
)
def test_render_decimal(q, prec, text):
    assert render_decimal(q, prec) == text


def test_csv_layout():
    text = residual_csv(4)
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[1] == ["4", "1", "7", "7", "3", "0.875", "0.375"]
    assert len(rows) == 9


def test_csv_precision():
    buf = io.StringIO()
    write_csv(residual_table(7)[:2], buf, precision=4)
    line = buf.getvalue().splitlines()[1].split(",")
    assert line[:5] == ["7", "1", "32767", "32767", "15"]
    assert line[5] == "1"  # 32767/32768 to 4 digits
