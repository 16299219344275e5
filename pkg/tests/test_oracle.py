import random

import pytest
from conftest import load_truth_table
from hypothesis import given, settings
from hypothesis import strategies as st

from godel_chain.chain import Chain, ChainError
from godel_chain.oracle import (
    Bracketing,
    ResourceLimitError,
    brute_counts,
    brute_pair_counts,
    distribution_dp,
    dp_counts,
    enumerate_bracketings,
    evaluate,
    valuations,
)

G4 = Chain(4)


def test_three_variable_bracketings():
    bs = enumerate_bracketings(3)
    assert [str(b) for b in bs] == ["p1⇒(p2⇒p3)", "(p1⇒p2)⇒p3"]


def test_single_leaf():
    assert enumerate_bracketings(1) == [Bracketing(1, 1)]


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 14), (8, 429)])
def test_catalan_many_shapes(n, count):
    bs = enumerate_bracketings(n)
    assert len(bs) == count
    assert len({b.tree for b in bs}) == count


def test_bracketing_cap():
    with pytest.raises(ResourceLimitError):
        enumerate_bracketings(13)
    with pytest.raises(ValueError):
        enumerate_bracketings(0)


def _leaves_in_order(tree):
    return [tree] if isinstance(tree, int) else _leaves_in_order(tree[0]) + _leaves_in_order(tree[1])


@pytest.mark.parametrize("n", range(1, 8))
def test_leaf_order(n):
    for b in enumerate_bracketings(n):
        assert _leaves_in_order(b.tree) == list(range(1, n + 1))


def test_valuation_order_p1_most_significant():
    vs = list(valuations(2, G4))
    assert vs[:5] == [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0)]


def test_truth_table_n2():
    b = enumerate_bracketings(2)[0]
    rows = load_truth_table("table8_n2.txt")
    assert [v for v, _ in rows] == list(valuations(2, G4))
    for v, want in rows:
        assert evaluate(b, v, G4) == want


@pytest.mark.parametrize("fixture,tree", [
    ("table9_left.txt", ((1, 2), 3)),
    ("table9_right.txt", (1, (2, 3))),
])
def test_truth_tables_n3(fixture, tree):
    b = Bracketing(tree, 3)
    rows = load_truth_table(fixture)
    assert len(rows) == 64
    assert [v for v, _ in rows] == list(valuations(3, G4))
    for v, want in rows:
        assert evaluate(b, v, G4) == want


def test_evaluate_examples():
    left = Bracketing(((1, 2), 3), 3)
    right = Bracketing((1, (2, 3)), 3)
    assert evaluate(left, (1, 0, 0), G4) == 3
    assert evaluate(right, (2, 2, 1), G4) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_all_top_evaluates_to_top(n):
    for b in enumerate_bracketings(n):
        assert evaluate(b, (3,) * n, G4) == 3


def test_evaluate_length_mismatch():
    with pytest.raises(ChainError):
        evaluate(enumerate_bracketings(3)[0], (0, 1), G4)


@pytest.mark.parametrize("n,want", [(1, (1, 1, 1, 1)), (2, (3, 2, 1, 10)), (3, (22, 15, 11, 80))])
def test_brute_counts_godel4(n, want):
    assert brute_counts(n, G4).counts == want


def test_budget_exceeded():
    with pytest.raises(ResourceLimitError, match="1000"):
        brute_counts(5, G4, budget=1000)
    with pytest.raises(ResourceLimitError):
        brute_pair_counts(5, G4, budget=1000)


def test_distribution_dp_examples():
    (b2,) = enumerate_bracketings(2)
    assert distribution_dp(b2, G4).counts == (3, 2, 1, 10)
    assert distribution_dp(Bracketing(1, 1), Chain(7)).counts == (1,) * 7
    assert dp_counts(3, G4).counts == (22, 15, 11, 80)


def test_brute_pairs():
    assert brute_pair_counts(1, G4) == [[0] * 4 for _ in range(4)]
    assert brute_pair_counts(2, G4)[1][0] == 1
    assert brute_pair_counts(3, G4)[3][0] == 13


@pytest.mark.parametrize("m,n", [(2, 7), (3, 5), (4, 5), (6, 4)])
def test_two_oracles_agree(m, n):
    chain = Chain(m)
    brute = brute_counts(n, chain)
    assert dp_counts(n, chain) == brute
    from godel_chain.sequences import catalan

    assert brute.total == m**n * catalan(n - 1)


@pytest.mark.parametrize("m,n", [(2, 6), (3, 5), (4, 4), (5, 4)])
def test_pairs_recover_outputs(m, n):
    chain = Chain(m)
    counts = brute_counts(n, chain).counts
    pairs = brute_pair_counts(n, chain)
    for j in range(m - 1):
        assert counts[j] == sum(pairs[i][j] for i in range(j + 1, m))
    assert counts[m - 1] == sum(pairs[i][j] for i in range(m) for j in range(i, m))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.integers(1, 6), st.randoms(use_true_random=False))
def test_dp_matches_row_by_row(m, n, rnd):
    chain = Chain(m)
    b = rnd.choice(enumerate_bracketings(n))
    counts = [0] * m
    for v in valuations(n, chain):
        counts[evaluate(b, v, chain)] += 1
    assert distribution_dp(b, chain).counts == tuple(counts)


def test_dp_scales_to_large_trees():
    # right comb of 300 leaves, far beyond brute force
    tree = 300
    for label in range(299, 0, -1):
        tree = (label, tree)
    out = distribution_dp(Bracketing(tree, 300), Chain(5))
    assert sum(out.counts) == 5**300
    assert all(c > 0 for c in out.counts)
