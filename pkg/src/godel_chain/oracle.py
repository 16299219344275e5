"""Brute-force ground truth for the output counts.

Two independent routes are provided:

* :func:`brute_counts` / :func:`brute_pair_counts` evaluate every bracketing
  on every valuation, one row at a time.
* :func:`distribution_dp` propagates per-value row counts bottom-up through a
  single bracketing tree.

Neither route uses the Catalan-split recurrences, so both can serve as an
oracle for :mod:`godel_chain.sequences`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence, Union

from .chain import Chain, ChainError, TruthValue, implication_table

DEFAULT_MAX_N = 12
DEFAULT_BUDGET = 10**8

# leaf: 1-based variable label; internal node: (left, right)
Tree = Union[int, tuple]


class ResourceLimitError(RuntimeError):
    """A brute-force request is larger than the configured cap."""


@dataclass(frozen=True)
class Bracketing:
    tree: Tree
    n: int

    def __str__(self) -> str:
        return _render(self.tree, top=True)


@dataclass(frozen=True)
class CountVector:
    counts: tuple[int, ...]
    n: int
    m: int

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __add__(self, other: "CountVector") -> "CountVector":
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError("cannot add count vectors of different shape")
        return CountVector(tuple(a + b for a, b in zip(self.counts, other.counts)), self.n, self.m)


def _render(tree: Tree, top: bool = False) -> str:
    if isinstance(tree, int):
        return f"p{tree}"
    s = f"{_render(tree[0])}⇒{_render(tree[1])}"
    return s if top else f"({s})"


def _shapes(lo: int, hi: int) -> list[Tree]:
    # leaves lo..hi inclusive; left-subtree size ascending, recursively
    if lo == hi:
        return [lo]
    out: list[Tree] = []
    for split in range(lo, hi):
        for left in _shapes(lo, split):
            for right in _shapes(split + 1, hi):
                out.append((left, right))
    return out


def enumerate_bracketings(n: int, max_n: int = DEFAULT_MAX_N) -> list[Bracketing]:
    """All Catalan(n-1) full bracketings of ``p1 => ... => pn``, in canonical order."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the bracketing cap max_n={max_n}")
    return [Bracketing(t, n) for t in _shapes(1, n)]


def valuations(n: int, chain: Chain) -> Iterator[tuple[int, ...]]:
    """Mixed-radix order with p1 most significant."""
    return itertools.product(range(chain.m), repeat=n)


def evaluate(b: Bracketing, v: Sequence[TruthValue], chain: Chain) -> TruthValue:
    if len(v) != b.n:
        raise ChainError(f"valuation has {len(v)} entries, bracketing has {b.n} variables")
    for x in v:
        chain.check(x)
    top = chain.top

    def ev(t: Tree) -> int:
        if isinstance(t, int):
            return v[t - 1]
        x, y = ev(t[0]), ev(t[1])
        return top if x <= y else y

    return ev(b.tree)


def _compile(tree: Tree, table: list[list[int]]) -> Callable[[tuple[int, ...]], int]:
    # closure tree: avoids re-walking the structure for every valuation
    if isinstance(tree, int):
        i = tree - 1
        return lambda v: v[i]
    left = _compile(tree[0], table)
    right = _compile(tree[1], table)
    return lambda v: table[left(v)][right(v)]


def _check_budget(n: int, chain: Chain, budget: int) -> int:
    from .sequences import catalan

    work = chain.m**n * catalan(n - 1)
    if work > budget:
        raise ResourceLimitError(
            f"m^n * Catalan(n-1) = {work} evaluations exceeds the budget of {budget}"
        )
    return work


def brute_counts(n: int, chain: Chain, budget: int = DEFAULT_BUDGET) -> CountVector:
    """Tally the output value of every (bracketing, valuation) row."""
    _check_budget(n, chain, budget)
    table = implication_table(chain)
    counts = [0] * chain.m
    for b in enumerate_bracketings(n, max_n=max(n, DEFAULT_MAX_N)):
        f = _compile(b.tree, table)
        for v in valuations(n, chain):
            counts[f(v)] += 1
    return CountVector(tuple(counts), n, chain.m)


def brute_pair_counts(n: int, chain: Chain, budget: int = DEFAULT_BUDGET) -> list[list[int]]:
    """Tally the (left, right) values at the root split of every row.

    ``n = 1`` has no root split and yields the all-zero table.
    """
    m = chain.m
    pairs = [[0] * m for _ in range(m)]
    if n == 1:
        return pairs
    _check_budget(n, chain, budget)
    table = implication_table(chain)
    for b in enumerate_bracketings(n, max_n=max(n, DEFAULT_MAX_N)):
        fl = _compile(b.tree[0], table)
        fr = _compile(b.tree[1], table)
        for v in valuations(n, chain):
            pairs[fl(v)][fr(v)] += 1
    return pairs


def _dp(tree: Tree, chain: Chain, table: list[list[int]]) -> list[int]:
    m = chain.m
    if isinstance(tree, int):
        return [1] * m
    left = _dp(tree[0], chain, table)
    right = _dp(tree[1], chain, table)
    out = [0] * m
    for x, cx in enumerate(left):
        row = table[x]
        for y, cy in enumerate(right):
            out[row[y]] += cx * cy
    return out


def distribution_dp(b: Bracketing, chain: Chain) -> CountVector:
    """Output distribution of one bracketing over all m^n valuations."""
    return CountVector(tuple(_dp(b.tree, chain, implication_table(chain))), b.n, chain.m)


def dp_counts(n: int, chain: Chain, max_n: int = DEFAULT_MAX_N) -> CountVector:
    """Sum of :func:`distribution_dp` over every bracketing of size ``n``."""
    total = CountVector((0,) * chain.m, n, chain.m)
    for b in enumerate_bracketings(n, max_n=max_n):
        total = total + distribution_dp(b, chain)
    return total
