"""Line renderers for vertex streams and the EXT V-representation block."""

from __future__ import annotations

import enum
from typing import Iterable, Iterator, TextIO

from .bitcodec import BitString


class OutputFormat(str, enum.Enum):
    DEC = "dec"
    BIN = "bin"
    COORDS = "coords"
    EXT = "ext"
    CSV = "csv"


def _bits(code: int, width: int) -> str:
    return format(code, f"0{width}b") if width else ""


def write_vertices(
    n: int,
    width: int,
    indexed_codes: Iterable[tuple[int, int]],
    count: int,
    fmt: OutputFormat,
    out: TextIO,
) -> None:
    """Write ``(k, code)`` pairs in the requested format, one vertex per line.

    ``count`` is only used by the EXT header and must match the number of
    pairs supplied.
    """
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.EXT:
        out.write("V-representation\nbegin\n")
        out.write(f"{count} {width + 1} integer\n")
    elif fmt is OutputFormat.CSV:
        out.write("n,k,code,bits\n")
    for k, code in indexed_codes:
        if fmt is OutputFormat.DEC:
            out.write(f"{code}\n")
        elif fmt is OutputFormat.BIN:
            out.write(_bits(code, width) + "\n")
        elif fmt is OutputFormat.COORDS:
            out.write(" ".join(_bits(code, width)) + "\n")
        elif fmt is OutputFormat.EXT:
            out.write(" ".join("1" + _bits(code, width)) + "\n")
        else:
            out.write(f"{n},{k},{code},{_bits(code, width)}\n")
    if fmt is OutputFormat.EXT:
        out.write("end\n")


class ExtFormatError(ValueError):
    pass


def parse_ext(text: str) -> list[BitString]:
    """Read back the 0/1 generator rows of a V-representation block.

    Comment lines (starting with ``*``) and anything outside ``begin``/``end``
    are ignored.
    """
    lines = iter(line.strip() for line in text.splitlines())
    header_seen = False
    for line in lines:
        if line == "V-representation":
            header_seen = True
        elif line == "begin":
            break
    else:
        raise ExtFormatError("no 'begin' line")
    if not header_seen:
        raise ExtFormatError("missing 'V-representation' header")
    size = next(_content(lines), None)
    if size is None:
        raise ExtFormatError("missing size line")
    try:
        rows_s, cols_s, _numtype = size.split()
        n_rows, n_cols = int(rows_s), int(cols_s)
    except ValueError as exc:
        raise ExtFormatError(f"bad size line: {size!r}") from exc
    out = []
    for line in _content(lines):
        if line == "end":
            break
        entries = line.split()
        if len(entries) != n_cols:
            raise ExtFormatError(f"expected {n_cols} entries, got {len(entries)}")
        if entries[0] != "1":
            raise ExtFormatError(f"row is not a vertex (leading {entries[0]!r})")
        out.append(BitString(tuple(int(e) for e in entries[1:])))
    else:
        raise ExtFormatError("no 'end' line")
    if len(out) != n_rows:
        raise ExtFormatError(f"header declares {n_rows} rows, found {len(out)}")
    return out


def _content(lines: Iterator[str]) -> Iterator[str]:
    for line in lines:
        if line and not line.startswith("*"):
            yield line
