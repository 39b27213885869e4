"""Closed-form and recursive vertex codes for 1-CUT(n) and CUT(n).

For ``n >= 3`` and ``1 <= k <= 2**(n-1)`` the code of vertex ``k`` is::

    2**C(n-1,2) * (k - 1) + sum_{j=1}^{n-2} 2**C(j,2) * (S^(2**j)(k) - 1)

where ``S^N`` is the alternating cycle function. CUT(n) codes are the bitwise
complements within ``C(n,2)`` bits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .altcycle import alt_cycle
from .bitcodec import Code, decode
from .oracle import VertexRecord


class Polytope(str, enum.Enum):
    ONE_CUT = "one-cut"
    CUT = "cut"


def binom2(a: int) -> int:
    """C(a, 2), with C(0, 2) = C(1, 2) = 0."""
    return a * (a - 1) // 2 if a >= 2 else 0


def vertex_count(n: int) -> int:
    _check_n(n)
    return 1 << (n - 1)


def _check_n(n: int, lowest: int = 1) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < lowest:
        raise ValueError(f"n must be >= {lowest}, got {n}")


def _check_k(n: int, k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError(f"k must be an int, got {type(k).__name__}")
    if not 1 <= k <= 1 << (n - 1):
        raise ValueError(f"k must lie in [1, 2^{n - 1}] for n={n}, got {k}")


@dataclass(frozen=True)
class GeneratorParams:
    """Dimension ``n`` and an inclusive index range, defaulting to all vertices."""

    n: int
    k_lo: int = 1
    k_hi: int | None = None

    def __post_init__(self) -> None:
        _check_n(self.n)
        count = 1 << (self.n - 1)
        if self.k_hi is None:
            object.__setattr__(self, "k_hi", count)
        if not 1 <= self.k_lo <= self.k_hi <= count:
            raise ValueError(
                f"range must satisfy 1 <= lo <= hi <= {count}, got {self.k_lo}:{self.k_hi}"
            )

    @property
    def count(self) -> int:
        return self.k_hi - self.k_lo + 1

    def a(self, k: int) -> int:
        """Code of the n-bit representative string with leading 1."""
        return (1 << (self.n - 1)) + k - 1


@lru_cache(maxsize=64)
def _weights(n: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    # (2**C(n-1,2), ((2**j, 2**C(j,2)) for j = 1..n-2))
    lead = 1 << binom2(n - 1)
    terms = tuple((1 << j, 1 << binom2(j)) for j in range(1, n - 1))
    return lead, terms


def _closed(n: int, k: int) -> Code:
    if n == 1:
        return 0
    lead, terms = _weights(n)
    v = lead * (k - 1)
    for N, w in terms:
        # S^N(k) - 1, inlined
        r = (k - 1) % (2 * N)
        v += w * (N - 1 - r if r < N else r - N)
    return v


def vertex_code_closed(n: int, k: int) -> Code:
    """Code of vertex ``k`` of 1-CUT(n) from the closed-form sum."""
    _check_n(n)
    _check_k(n, k)
    return _closed(n, k)


def vertex_code_recursive(n: int, k: int) -> Code:
    """Code of vertex ``k`` via ``v^n(k) = 2**C(n-1,2)(k-1) + v^(n-1)(S^(2**(n-2))(k))``."""
    _check_n(n, lowest=2)
    _check_k(n, k)
    if n == 2:
        return k - 1
    return (1 << binom2(n - 1)) * (k - 1) + vertex_code_recursive(
        n - 1, alt_cycle(1 << (n - 2), k)
    )


def _full_mask(n: int) -> int:
    return (1 << binom2(n)) - 1


def cut_vertex_code(n: int, k: int) -> Code:
    """Code of vertex ``k`` of CUT(n), the complement of the 1-CUT(n) code."""
    _check_n(n)
    _check_k(n, k)
    return _full_mask(n) - _closed(n, k)


def vertex_code(n: int, k: int, polytope: Polytope = Polytope.ONE_CUT) -> Code:
    polytope = Polytope(polytope)
    if polytope is Polytope.CUT:
        return cut_vertex_code(n, k)
    return vertex_code_closed(n, k)


def vertex_coords(
    n: int, k: int, polytope: Polytope = Polytope.ONE_CUT
) -> VertexRecord:
    code = vertex_code(n, k, polytope)
    return VertexRecord(n, k, code, decode(code, binom2(n)))


def vertices_stream(
    params: GeneratorParams,
    polytope: Polytope = Polytope.ONE_CUT,
    coords: bool = False,
) -> Iterator[VertexRecord]:
    """Yield vertex records for ``params.k_lo..params.k_hi`` in ascending ``k``.

    Nothing is accumulated between records, so memory use does not depend on
    the number of vertices.
    """
    polytope = Polytope(polytope)
    n = params.n
    d = binom2(n)
    mask = _full_mask(n) if polytope is Polytope.CUT else 0
    # mask ^ v equals mask - v since v < 2**d
    for k in range(params.k_lo, params.k_hi + 1):
        code = mask ^ _closed(n, k)
        yield VertexRecord(n, k, code, decode(code, d) if coords else None)


def codes_stream(
    params: GeneratorParams, polytope: Polytope = Polytope.ONE_CUT
) -> Iterator[Code]:
    """Like :func:`vertices_stream` but yields bare codes."""
    polytope = Polytope(polytope)
    n = params.n
    mask = _full_mask(n) if polytope is Polytope.CUT else 0
    for k in range(params.k_lo, params.k_hi + 1):
        yield mask ^ _closed(n, k)
