import pytest
from hypothesis import given
from hypothesis import strategies as st

from cutpoly.altcycle import (
    alt_cycle,
    alt_cycle_one_period,
    is_power_of_two,
    render_sn_csv,
    render_sn_text,
    sn_table,
)

from reference_values import TABLE2


def sn_by_definition(N, k):
    """Literal floor-based definition, kept independent of the modular shortcut."""
    q = (k - 1) // N
    if q % 2 == 0:
        return N + 1 - (k - q * N)
    return k - q * N


def wave(N, length):
    """Descend N..1, ascend 1..N, repeated."""
    block = list(range(N, 0, -1)) + list(range(1, N + 1))
    return [block[i % (2 * N)] for i in range(length)]


@pytest.mark.parametrize("N, k, value", [(2, 1, 2), (8, 9, 1), (4, 7, 3), (32, 5, 28)])
def test_alt_cycle_examples(N, k, value):
    assert alt_cycle(N, k) == value


@pytest.mark.parametrize("M, k, value", [(8, 3, 6), (4, 5, 1), (2, 4, 2)])
def test_one_period_examples(M, k, value):
    assert alt_cycle_one_period(M, k) == value


@pytest.mark.parametrize("N", sorted(TABLE2))
def test_table2_rows(N):
    assert tuple(alt_cycle(N, k) for k in range(1, 17)) == TABLE2[N]


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        alt_cycle(4, 0)
    with pytest.raises(ValueError):
        alt_cycle(1, 3)
    with pytest.raises(ValueError):
        alt_cycle_one_period(4, 9)
    with pytest.raises(ValueError):
        alt_cycle_one_period(4, 0)


def test_non_power_of_two_period_allowed():
    assert [alt_cycle(3, k) for k in range(1, 7)] == [3, 2, 1, 1, 2, 3]
    assert not is_power_of_two(3)
    assert is_power_of_two(32)


@pytest.mark.parametrize("N", [2, 3, 4, 5, 8, 16, 32])
def test_matches_literal_definition(N):
    for k in range(1, 6 * N + 1):
        assert alt_cycle(N, k) == sn_by_definition(N, k)


@pytest.mark.parametrize("N", [2, 4, 8])
def test_figure_wave_first_30(N):
    assert [alt_cycle(N, k) for k in range(1, 31)] == wave(N, 30)


@pytest.mark.parametrize("M", [2, 3, 4, 8, 16, 64])
def test_one_period_matches_general(M):
    for k in range(1, 2 * M + 1):
        assert alt_cycle_one_period(M, k) == alt_cycle(M, k)


@given(st.integers(2, 1 << 12), st.integers(1, 1 << 200))
def test_huge_arguments_match_definition(N, k):
    v = alt_cycle(N, k)
    assert 1 <= v <= N
    assert v == sn_by_definition(N, k)
    assert alt_cycle(N, k + 2 * N) == v


@given(st.integers(2, 64), st.integers(0, 50))
def test_block_palindrome(N, t):
    block = [alt_cycle(N, 2 * N * t + i) for i in range(1, 2 * N + 1)]
    assert block == block[::-1]
    assert block[:N] == list(range(N, 0, -1))


def test_sn_table_and_renderers():
    rows = sn_table([2, 4], 4)
    assert rows == [(2, [2, 1, 1, 2]), (4, [4, 3, 2, 1])]
    assert render_sn_csv(rows) == "N,1,2,3,4\n2,2,1,1,2\n4,4,3,2,1\n"
    text = render_sn_text(rows).splitlines()
    assert text[0].split("|")[1].split() == ["1", "2", "3", "4"]
    assert text[1].startswith("S^2(k)")
    with pytest.raises(ValueError):
        sn_table([2], 0)


@given(st.integers(1, 10), st.integers(1, 6), st.integers(1, 1 << 64))
def test_power_of_two_composition_invariance(j, m, k):
    N = 1 << j
    assert alt_cycle(N, alt_cycle((1 << m) * N, k)) == alt_cycle(N, k)


@given(st.integers(2, 1000), st.integers(1, 1 << 64))
def test_self_composition(N, k):
    s = alt_cycle(N, k)
    assert alt_cycle(N, s) == N + 1 - s
    assert alt_cycle(N, alt_cycle(N, s)) == s
