"""Agreement maps, cut vectors and the brute-force vertex oracle.

Everything here is computed pair by pair from the definitions. It shares no
code with :mod:`cutpoly.vertexgen` other than the bit codec, so the two can
be checked against each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .bitcodec import BitString, Code, complement, concat, decode, encode

#: Largest n for which full vertex lists are materialised (2**19 records).
ORACLE_MAX_N = 20


@dataclass(frozen=True)
class EdgeIndexing:
    """Pairs ``(i, j)``, ``1 <= i < j <= n``, in coordinate order.

    The order is (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n); position ``p``
    (1-based) of a coordinate vector refers to ``pairs[p - 1]``.
    """

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"edge indexing needs n >= 2, got {self.n}")

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(itertools.combinations(range(1, self.n + 1), 2))

    @property
    def m(self) -> int:
        return self.n * (self.n - 1) // 2

    def position(self, i: int, j: int) -> int:
        if not 1 <= i < j <= self.n:
            raise ValueError(f"need 1 <= i < j <= {self.n}, got ({i}, {j})")
        # pairs starting with 1..i-1 come first
        return (i - 1) * self.n - (i - 1) * i // 2 + (j - i)

    def pair(self, position: int) -> tuple[int, int]:
        if not 1 <= position <= self.m:
            raise ValueError(f"position must lie in [1, {self.m}], got {position}")
        return self.pairs[position - 1]


@dataclass(frozen=True)
class VertexRecord:
    """One vertex of 1-CUT(n) or CUT(n): index ``k``, code, optional coordinates."""

    n: int
    k: int
    code: Code
    coords: BitString | None = None

    def __post_init__(self) -> None:
        m = self.n * (self.n - 1) // 2
        if self.code < 0 or self.code >> m:
            raise ValueError(f"code {self.code} does not fit in C({self.n},2)={m} bits")
        if self.coords is not None:
            if self.coords.width != m:
                raise ValueError(f"coords must have width {m}, got {self.coords.width}")
            if encode(self.coords) != self.code:
                raise ValueError("coords do not encode to code")


def cut_vector(S: Iterable[int], n: int) -> BitString:
    """Cut vector of ``S`` in K_n: edge (i,j) is 1 iff exactly one end is in S."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    S = frozenset(S)
    bad = [s for s in S if not 1 <= s <= n]
    if bad:
        raise ValueError(f"elements outside [1, {n}]: {sorted(bad)}")
    return BitString(
        tuple(int((i in S) != (j in S)) for i, j in EdgeIndexing(n).pairs)
    )


def _check_width(x: BitString) -> None:
    if x.width < 2:
        raise ValueError(f"agreement map needs width >= 2, got {x.width}")


def lambda_vec(x: BitString) -> BitString:
    """Agreement vector: coordinate (i,j) is 1 iff ``x_i == x_j``."""
    _check_width(x)
    b = x.bits
    return BitString(
        tuple(int(b[i - 1] == b[j - 1]) for i, j in EdgeIndexing(x.width).pairs)
    )


def lambda_str(x: BitString) -> BitString:
    """Agreement string built by peeling off the leading bit.

    A leading 0 contributes the complement of the tail, a leading 1 the
    tail itself, followed by the agreement string of the tail.
    """
    _check_width(x)
    if x.width == 2:
        return BitString((int(x[0] == x[1]),))
    tail = BitString(x.bits[1:])
    head = tail if x[0] == 1 else complement(tail)
    return concat(head, lambda_str(tail))


def lambda_int(k: Code, n: int) -> Code:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 0 <= k < 1 << n:
        raise ValueError(f"k must lie in [0, 2^{n}), got {k}")
    return encode(lambda_vec(decode(k, n)))


def oracle_vertices(
    n: int, k_lo: int = 1, k_hi: int | None = None, max_n: int = ORACLE_MAX_N
) -> list[VertexRecord]:
    """Vertices of 1-CUT(n) in index order, by brute force.

    Vertex ``k`` is the agreement vector of the ``n``-bit string with code
    ``2**(n-1) + k - 1``. A sub-range ``[k_lo, k_hi]`` may be requested so
    the work can be split into disjoint pieces.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the materialisation cap {max_n}")
    count = 1 << (n - 1)
    if k_hi is None:
        k_hi = count
    if not 1 <= k_lo <= k_hi <= count:
        raise ValueError(f"need 1 <= k_lo <= k_hi <= {count}, got [{k_lo}, {k_hi}]")
    out = []
    for k in range(k_lo, k_hi + 1):
        coords = lambda_vec(decode(count + k - 1, n))
        out.append(VertexRecord(n, k, encode(coords), coords))
    return out
