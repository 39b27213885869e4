"""The alternating cycle function and table helpers.

``alt_cycle(N, k)`` has period ``2N``: on each block it walks N, N-1, ..., 1
and then 1, 2, ..., N.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def _check_period(N: int) -> None:
    if N < 2:
        raise ValueError(f"period N must be >= 2, got {N}")


def alt_cycle(N: int, k: int) -> int:
    """Evaluate the alternating cycle function at ``k >= 1``.

    ``k`` may be arbitrarily large; it is reduced modulo ``2N`` before the
    one-period branch is applied.
    """
    _check_period(N)
    if k < 1:
        raise ValueError(f"argument k must be >= 1, got {k}")
    r = (k - 1) % (2 * N)
    return N - r if r < N else r - N + 1


def alt_cycle_one_period(M: int, k: int) -> int:
    """One-period form, valid for ``1 <= k <= 2M`` only."""
    _check_period(M)
    if not 1 <= k <= 2 * M:
        raise ValueError(f"k must lie in [1, {2 * M}], got {k}")
    if k <= M:
        return M + 1 - k
    return k - M


def is_power_of_two(N: int) -> bool:
    return N > 0 and N & (N - 1) == 0


def sn_table(periods: Iterable[int], k_max: int) -> list[tuple[int, list[int]]]:
    """Rows ``(N, [S^N(1), ..., S^N(k_max)])`` for each requested period."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    rows = []
    for N in periods:
        _check_period(N)
        rows.append((N, [alt_cycle(N, k) for k in range(1, k_max + 1)]))
    return rows


def render_sn_text(rows: Sequence[tuple[int, list[int]]]) -> str:
    if not rows:
        return ""
    k_max = len(rows[0][1])
    labels = ["k"] + [f"S^{N}(k)" for N, _ in rows]
    cells = [list(range(1, k_max + 1))] + [vals for _, vals in rows]
    width = max(len(str(v)) for line in cells for v in line)
    label_w = max(len(s) for s in labels)
    lines = []
    for label, line in zip(labels, cells):
        lines.append(
            label.ljust(label_w) + " | " + " ".join(str(v).rjust(width) for v in line)
        )
    return "\n".join(lines) + "\n"


def render_sn_csv(rows: Sequence[tuple[int, list[int]]]) -> str:
    if not rows:
        return ""
    k_max = len(rows[0][1])
    out = ["N," + ",".join(str(k) for k in range(1, k_max + 1))]
    for N, vals in rows:
        out.append(f"{N}," + ",".join(str(v) for v in vals))
    return "\n".join(out) + "\n"
