"""Fixed-width bit strings and their integer codes.

Bit 1 is the most significant (leftmost) bit, so a string ``x_1 x_2 ... x_w``
has code ``sum(x_j * 2**(w - j))``. Codes are plain Python ints and therefore
arbitrary precision.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Code = int


class Order(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class BitString:
    """An immutable 0/1 vector with an explicit width (possibly zero)."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        for b in bits:
            if b not in (0, 1) or isinstance(b, bool):
                raise ValueError(f"bit entries must be 0 or 1, got {b!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_str(cls, s: str) -> BitString:
        """Parse an ASCII run of '0'/'1' characters, MSB first."""
        if any(c not in "01" for c in s):
            raise ValueError(f"not a bit string: {s!r}")
        return cls(tuple(1 if c == "1" else 0 for c in s))

    @classmethod
    def of(cls, bits: Iterable[int]) -> BitString:
        return cls(tuple(bits))

    @property
    def width(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


EMPTY = BitString(())


def encode(x: BitString) -> Code:
    k = 0
    for b in x.bits:
        k = (k << 1) | b
    return k


def decode(k: Code, width: int) -> BitString:
    """Return the ``width``-bit string whose code is ``k``, zero-padded on the left.

    Raises ValueError when ``k`` does not fit in ``width`` bits.
    """
    if width < 0:
        raise ValueError(f"width must be non-negative, got {width}")
    if k < 0:
        raise ValueError(f"code must be non-negative, got {k}")
    if k >> width:
        raise ValueError(f"code {k} does not fit in {width} bits")
    if width == 0:
        return EMPTY
    return BitString.from_str(format(k, f"0{width}b"))


def complement(x: BitString) -> BitString:
    return BitString(tuple(1 - b for b in x.bits))


def concat(a: BitString, b: BitString) -> BitString:
    return BitString(a.bits + b.bits)


def lex_compare(a: BitString, b: BitString) -> Order:
    if a.width != b.width:
        raise ValueError(
            f"lexicographic order needs equal widths, got {a.width} and {b.width}"
        )
    for x, y in zip(a.bits, b.bits):
        if x != y:
            return Order.LT if x < y else Order.GT
    return Order.EQ


def format_code(k: Code, width: int | None = None, binary: bool = False) -> str:
    """Render a code in decimal, or as a binary run padded to ``width``."""
    if not binary:
        return str(k)
    if width is None:
        return format(k, "b")
    return str(decode(k, width))


def support(x: Sequence[int]) -> frozenset[int]:
    """1-based positions holding a 1."""
    return frozenset(i for i, b in enumerate(x, start=1) if b)
