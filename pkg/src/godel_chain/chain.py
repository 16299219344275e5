"""The m-valued Gödel chain and its implication.

Truth values are bare integer indices ``0 .. m-1`` with ``0`` the bottom
(false) and ``m-1`` the top (true).  Human-readable labels live in the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_MAX_M = 10_000


class ChainError(ValueError):
    """Invalid chain size or truth value."""


@dataclass(frozen=True)
class Chain:
    m: int
    max_m: int = DEFAULT_MAX_M

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 2:
            raise ChainError(f"chain needs m >= 2, got {self.m!r}")
        if self.m > self.max_m:
            raise ChainError(f"m={self.m} exceeds the configured maximum {self.max_m}")

    @property
    def top(self) -> int:
        return self.m - 1

    @property
    def bottom(self) -> int:
        return 0

    def values(self) -> range:
        return range(self.m)

    def check(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.m:
            raise ChainError(f"truth value {x!r} is not in 0..{self.m - 1}")
        return x


# A TruthValue is just its index; the alias documents intent in signatures.
TruthValue = int


def goedel_implies(chain: Chain, x: TruthValue, y: TruthValue) -> TruthValue:
    """``x => y`` on the chain: top when ``x <= y``, otherwise ``y``."""
    chain.check(x)
    chain.check(y)
    return chain.top if x <= y else y


def implication_table(chain: Chain) -> list[list[TruthValue]]:
    """Full m x m operation table; entry ``[p][q]`` is ``v_p => v_q``."""
    top = chain.top
    return [[top if p <= q else q for q in range(chain.m)] for p in range(chain.m)]
