"""Exact output counts via the Catalan-split recurrences.

For ``n >= 2`` a bracketing splits at its root into a left part on ``i``
variables and a right part on ``n - i``.  A non-top value ``v_j`` is produced
exactly when the right side evaluates to ``v_j`` and the left side to some
strictly larger value, so

    g[n][j] = sum_{i=1}^{n-1} (sum_{p>j} g[i][p]) * g[n-i][j]      (j <= m-2)

and the top count follows from the total ``m^n * Catalan(n-1)``.

All public indexing is 1-based in ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from operator import mul

_CATALAN: list[int] = [1]


def catalan(k: int) -> int:
    """Catalan number C_k from the convolution ``C_k = sum C_i C_{k-1-i}``."""
    if k < 0:
        raise ValueError(f"Catalan index must be >= 0, got {k}")
    c = _CATALAN
    while len(c) <= k:
        j = len(c)
        c.append(sum(map(mul, c[:j], reversed(c[:j]))))
    return c[k]


def _conv(a: list[int], b: list[int], n: int) -> int:
    # sum_{i=1}^{n-1} a[i] * b[n-i], both lists stored 1-based (index 0 unused)
    return sum(map(mul, a[1:n], b[n - 1 : 0 : -1]))


@dataclass(frozen=True)
class LevelCounts:
    """``g[n][j]`` = number of rows at size ``n`` with output ``v_j``."""

    m: int
    n_max: int
    columns: tuple[tuple[int, ...], ...]  # columns[j][n], index 0 unused
    totals: tuple[int, ...]  # totals[n], index 0 unused

    def value(self, n: int, j: int) -> int:
        self._check_n(n)
        return self.columns[j][n]

    def row(self, n: int) -> tuple[int, ...]:
        self._check_n(n)
        return tuple(col[n] for col in self.columns)

    def total(self, n: int) -> int:
        self._check_n(n)
        return self.totals[n]

    def tail(self, n: int, k: int) -> int:
        """``H[n][k]``: rows at size ``n`` whose output is ``>= v_k``."""
        self._check_n(n)
        return sum(col[n] for col in self.columns[k:])

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(n) for n in range(1, self.n_max + 1)]

    def __getitem__(self, n: int) -> tuple[int, ...]:
        return self.row(n)

    def _check_n(self, n: int) -> None:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n={n} outside 1..{self.n_max}")


def level_counts(m: int, n_max: int) -> LevelCounts:
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    cols = [[0, 1] for _ in range(m)]
    # strict tails: above[j][i] = sum_{p>j} g[i][p]
    above = [[0, m - 1 - j] for j in range(m)]
    totals = [0, m]
    for n in range(2, n_max + 1):
        total = m**n * catalan(n - 1)
        lower = [_conv(above[j], cols[j], n) for j in range(m - 1)]
        top = total - sum(lower)
        row = lower + [top]
        running = 0
        for j in range(m - 1, -1, -1):
            above[j].append(running)
            running += row[j]
            cols[j].append(row[j])
        totals.append(total)
    return LevelCounts(m, n_max, tuple(tuple(c) for c in cols), tuple(totals))


@dataclass(frozen=True)
class PairCounts:
    """``N[n][i][j]``: rows whose root split has left value ``v_i``, right ``v_j``."""

    m: int
    n_max: int
    tables: tuple  # tables[n] is an m x m tuple-of-tuples, index 0 unused

    def table(self, n: int) -> tuple[tuple[int, ...], ...]:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n={n} outside 1..{self.n_max}")
        return self.tables[n]

    def value(self, n: int, i: int, j: int) -> int:
        return self.table(n)[i][j]

    def sequence(self, i: int, j: int) -> list[int]:
        return [self.tables[n][i][j] for n in range(1, self.n_max + 1)]

    def __getitem__(self, n: int):
        return self.table(n)


def pair_count(lc: LevelCounts, n: int, i: int, j: int) -> int:
    """Single entry ``N[n][i][j] = sum_t g[t][i] * g[n-t][j]``."""
    if n == 1:
        return 0
    lc._check_n(n)
    return _conv(list(lc.columns[i]), list(lc.columns[j]), n)


def pair_counts(lc: LevelCounts) -> PairCounts:
    m = lc.m
    cols = [list(c) for c in lc.columns]
    tables: list = [None, tuple(tuple(0 for _ in range(m)) for _ in range(m))]
    for n in range(2, lc.n_max + 1):
        tables.append(tuple(tuple(_conv(cols[i], cols[j], n) for j in range(m)) for i in range(m)))
    return PairCounts(m, lc.n_max, tuple(tables))


def recover_outputs_from_pairs(pc: PairCounts) -> dict[int, tuple[int, ...]]:
    """Output counts rebuilt from root-split pairs, for every ``n >= 2``.

    A non-top value ``v_j`` comes from pairs ``(i, j)`` with ``i > j``; the top
    value from every pair with ``i <= j``.
    """
    m = pc.m
    out: dict[int, tuple[int, ...]] = {}
    for n in range(2, pc.n_max + 1):
        t = pc.tables[n]
        lower = [sum(t[i][j] for i in range(j + 1, m)) for j in range(m - 1)]
        top = sum(t[i][j] for i in range(m) for j in range(i, m))
        out[n] = tuple(lower) + (top,)
    return out


def _round_half_up(num: int, den: int, digits: int) -> Decimal:
    scaled = (2 * num * 10**digits + den) // (2 * den)
    return Decimal(scaled).scaleb(-digits)


def proportions(lc: LevelCounts, n: int, digits: int = 6) -> list[Decimal]:
    """``g[n][j] / g_total[n]`` rounded half-up to ``digits`` decimals.

    The division is exact integer arithmetic, so there is no double rounding.
    """
    total = lc.total(n)
    return [_round_half_up(x, total, digits) for x in lc.row(n)]


def exact_proportions(lc: LevelCounts, n: int) -> list[Fraction]:
    total = lc.total(n)
    return [Fraction(x, total) for x in lc.row(n)]


def non_true_counts(lc: LevelCounts) -> dict[int, int]:
    """``s[n] = g_total[n] - g[n][m-1]``, the rows whose output is not top."""
    top = lc.columns[-1]
    return {n: lc.totals[n] - top[n] for n in range(1, lc.n_max + 1)}
