"""The m -> infinity limit of the rescaled output level.

The level ``K_m`` with ``P(K_m = k) = p_k(m)`` is rescaled to
``T_m = K_m / (m - 1)``.  Its limit ``T`` has density ``(1 + 2t)^(-3/2)`` on
``[0, 1)`` plus an atom of mass ``1/sqrt(3)`` at ``t = 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

import mpmath

from .analytic import Precision, critical_data

QUAD_DIGITS = 30
# right end of the quadrature interval; the atom at 1 is added separately
QUAD_END = mpmath.mpf(1) - mpmath.mpf(10) ** -12


def _ctx():
    return Precision(QUAD_DIGITS).ctx


def density(t):
    ctx = _ctx()
    return (1 + 2 * ctx.mpf(t)) ** ctx.mpf(-1.5)


def survival(t):
    """``P(T >= t) = (1 + 2t)^(-1/2)`` for ``0 <= t < 1``."""
    if not 0 <= t < 1:
        raise ValueError(f"survival is defined on [0, 1), got t={t}")
    ctx = _ctx()
    return 1 / ctx.sqrt(1 + 2 * ctx.mpf(t))


def atom_mass():
    return 1 / _ctx().sqrt(3)


@dataclass(frozen=True)
class LimitMeasure:
    density: Callable = density
    atom_location: int = 1

    @property
    def atom_mass(self):
        return atom_mass()

    def integrate(self, fn: Callable) -> object:
        """``int_[0,1) fn * density dt + atom_mass * fn(1)``."""
        ctx = _ctx()
        body = ctx.quad(lambda t: fn(t) * density(t), [0, ctx.mpf(QUAD_END)])
        return body + self.atom_mass * fn(ctx.mpf(1))


def density_integral():
    """Mass of the continuous part, by quadrature.  Should equal ``1 - 1/sqrt(3)``."""
    ctx = _ctx()
    return ctx.quad(density, [0, ctx.mpf(QUAD_END)])


def mean():
    """``E[T] = sqrt(3) - 1``."""
    return _ctx().sqrt(3) - 1


def mean_by_quadrature():
    return LimitMeasure().integrate(lambda t: t)


@dataclass(frozen=True)
class ScaledLevelDistribution:
    m: int
    support: tuple
    weights: tuple

    @classmethod
    def from_limits(cls, m: int, prec: Precision | int | None = None) -> "ScaledLevelDistribution":
        cd = critical_data(m, prec)
        return cls(m, tuple(Fraction(k, m - 1) for k in range(m)), cd.p)

    def integrate(self, fn: Callable):
        return sum(w * fn(w.context.mpf(s.numerator) / s.denominator) for s, w in zip(self.support, self.weights))


def cut_index(m: int, t) -> int:
    """``floor(t * (m - 1))`` computed exactly for binary floats and fractions."""
    return math.floor(Fraction(t) * (m - 1))


def macroscopic_cut(m: int, t, prec: Precision | int | None = None):
    """Tail constant ``q_k(m)`` at the rank ``k = floor(t(m-1))``."""
    if not 0 <= t <= 1:
        raise ValueError(f"cut position must lie in [0, 1], got {t}")
    return critical_data(m, prec).q[cut_index(m, t)]


def weak_convergence_check(m: int, testfn: Callable, prec: Precision | int | None = None):
    """``(sum_k p_k(m) fn(k/(m-1)), int fn dmu)`` for a bounded continuous ``fn``."""
    discrete = ScaledLevelDistribution.from_limits(m, prec).integrate(testfn)
    return discrete, LimitMeasure().integrate(testfn)


def fixed_level_vanishing(j: int, m_list: Iterable[int], prec: Precision | int | None = None) -> list:
    ms = list(m_list)
    if not ms or j >= min(ms):
        raise ValueError(f"level j={j} must be below every m in {ms}")
    return [critical_data(m, prec).p[j] for m in ms]
