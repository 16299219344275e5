import pytest
from hypothesis import given
from hypothesis import strategies as st

from godel_chain.chain import Chain, ChainError, goedel_implies, implication_table

TABLE1 = [
    [3, 3, 3, 3],
    [0, 3, 3, 3],
    [0, 1, 3, 3],
    [0, 1, 2, 3],
]


def test_godel4_table_matches_operation_table():
    assert implication_table(Chain(4)) == TABLE1


def test_two_valued_is_classical():
    # only 1 => 0 is false
    assert implication_table(Chain(2)) == [[1, 1], [0, 1]]


def test_known_entries():
    c = Chain(4)
    assert goedel_implies(c, 2, 1) == 1  # b => a = a
    assert goedel_implies(c, 3, 0) == 0  # 1 => 0 = 0


@pytest.mark.parametrize("m", [2, 3, 7, 64])
def test_exhaustive_laws(m):
    c = Chain(m)
    table = implication_table(c)
    assert table[0] == [m - 1] * m
    for x in range(m):
        for y in range(m):
            out = goedel_implies(c, x, y)
            assert out == table[x][y]
            assert (out == m - 1) == (x <= y)
            if x > y:
                assert out == y
            assert out >= y


@given(st.integers(2, 10_000).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, m - 1), st.integers(0, m - 1))))
def test_order_reflection_random_chains(mxy):
    m, x, y = mxy
    out = goedel_implies(Chain(m), x, y)
    assert (out == m - 1) == (x <= y)
    assert out >= y


@pytest.mark.parametrize("m", [0, 1, -3])
def test_chain_too_small(m):
    with pytest.raises(ChainError):
        Chain(m)


def test_chain_cap():
    with pytest.raises(ChainError):
        Chain(10_001)
    assert Chain(20_000, max_m=50_000).m == 20_000


@pytest.mark.parametrize("x,y", [(4, 0), (0, 4), (-1, 2)])
def test_invalid_truth_value(x, y):
    with pytest.raises(ChainError):
        goedel_implies(Chain(4), x, y)
