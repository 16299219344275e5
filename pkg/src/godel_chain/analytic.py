"""Limit proportions and singular constants at the dominant singularity.

With ``r = 1/(4m)`` the total generating function ``G(x) = (1 - sqrt(1-4mx))/2``
has a square-root branch point and ``G(r) = 1/2``.  The tail sums obey
``H_k = Phi_x(H_{k+1})``, so walking down from ``G`` with the inverse branch
``Psi_x`` produces every tail.  Evaluated at ``x = r`` this gives the critical
iterates ``w_k``; the derivative factors ``d_k = dPsi/dv(r, w_k)`` multiply the
square-root coefficient from one tail to the next.

Every real is an mpmath number from a private context running at the requested
digits plus :data:`GUARD_DIGITS`, so results do not depend on ``mpmath.mp.dps``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath

GUARD_DIGITS = 10
DEFAULT_DIGITS = 60


class PrecisionError(ValueError):
    """The requested precision cannot support the computation."""


class AnalyticDomainError(ValueError):
    """An argument lies outside the real domain of the map."""


class SingularInputError(AnalyticDomainError):
    """``phi`` evaluated at its pole ``u = 1``."""


@dataclass(frozen=True)
class Precision:
    digits: int = DEFAULT_DIGITS

    def __post_init__(self) -> None:
        if self.digits < 20:
            raise PrecisionError(f"need at least 20 digits, got {self.digits}")

    @property
    def ctx(self) -> mpmath.ctx_mp.MPContext:
        return _context(self.digits + GUARD_DIGITS)

    @property
    def tolerance(self):
        """Agreement expected between two routes: ``10^-(digits-10)``."""
        return self.ctx.mpf(10) ** (-(self.digits - 10))


@lru_cache(maxsize=None)
def _context(dps: int) -> mpmath.ctx_mp.MPContext:
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


def _prec(prec: Precision | int | None) -> Precision:
    if prec is None:
        return Precision()
    if isinstance(prec, int):
        return Precision(prec)
    return prec


def phi(x, u, prec: Precision | int | None = None):
    """``Phi_x(u) = u + x / (1 - u)``."""
    ctx = _prec(prec).ctx
    x, u = ctx.mpf(x), ctx.mpf(u)
    if u == 1:
        raise SingularInputError("phi has a pole at u = 1")
    return u + x / (1 - u)


def _radicand(ctx, x, v):
    return (1 - v) ** 2 + 4 * x


def psi(x, v, prec: Precision | int | None = None):
    """Inverse branch of ``phi`` with ``Psi_x(0) = 0`` at ``x = 0``.

    Uses ``(v - x) / u_plus`` (Vieta, product of the two roots) instead of
    ``(1 + v - sqrt(...)) / 2``; the two agree but the former does not cancel
    when ``v`` and ``x`` are both small.
    """
    ctx = _prec(prec).ctx
    x, v = ctx.mpf(x), ctx.mpf(v)
    rad = _radicand(ctx, x, v)
    if rad < 0:
        raise AnalyticDomainError(f"negative radicand (1-v)^2 + 4x = {ctx.nstr(rad, 10)}")
    u_plus = (1 + v + ctx.sqrt(rad)) / 2
    if u_plus == 0:
        return (1 + v) / 2
    return (v - x) / u_plus


def psi_deriv(x, v, prec: Precision | int | None = None):
    """``dPsi_x/dv = (1 + (1-v)/sqrt((1-v)^2 + 4x)) / 2``."""
    ctx = _prec(prec).ctx
    x, v = ctx.mpf(x), ctx.mpf(v)
    rad = _radicand(ctx, x, v)
    if rad <= 0:
        raise AnalyticDomainError("dPsi/dv needs (1-v)^2 + 4x > 0")
    return (1 + (1 - v) / ctx.sqrt(rad)) / 2


@dataclass(frozen=True)
class CriticalData:
    m: int
    digits: int
    r: object
    w: tuple  # critical iterates w_0..w_{m-1}
    d: tuple  # derivative factors d_0..d_{m-2}
    q: tuple  # tail limit constants q_0..q_{m-1}
    p: tuple  # level limit constants p_0..p_{m-1}
    c: tuple  # square-root coefficients of the tails H_k
    a_level: tuple  # value of each level G_k at r
    b_level: tuple  # square-root coefficient of each level G_k

    @property
    def u(self) -> tuple:
        return tuple(1 - w for w in self.w)


def _check_guard(m: int, prec: Precision) -> None:
    # each of the m-1 steps may add about one ulp; keep 10 clean digits on top
    if prec.digits - math.log10(m) < 10:
        raise PrecisionError(
            f"{prec.digits} digits cannot hold 10 guard digits over {m - 1} iterations; "
            f"use at least {math.ceil(math.log10(m)) + 10 + 10} digits"
        )


def critical_data(m: int, prec: Precision | int | None = None) -> CriticalData:
    prec = _prec(prec)
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    _check_guard(m, prec)
    return _critical_data(m, prec.digits)


@lru_cache(maxsize=32)
def _critical_data(m: int, digits: int) -> CriticalData:
    prec = Precision(digits)
    ctx = prec.ctx
    r = ctx.mpf(1) / (4 * m)
    w = [ctx.mpf(1) / 2]
    d = []
    for _ in range(m - 1):
        d.append(psi_deriv(r, w[-1], prec))
        w.append(psi(r, w[-1], prec))
    q = [ctx.mpf(1)]
    c = [ctx.mpf(1) / 2]
    for dk in d:
        q.append(q[-1] * dk)
        c.append(c[-1] * dk)
    p = [q[k] - q[k + 1] for k in range(m - 1)] + [q[-1]]
    a_level = [w[k] - w[k + 1] for k in range(m - 1)] + [w[-1]]
    b_level = [c[k] - c[k + 1] for k in range(m - 1)] + [c[-1]]
    return CriticalData(
        m=m,
        digits=digits,
        r=r,
        w=tuple(w),
        d=tuple(d),
        q=tuple(q),
        p=tuple(p),
        c=tuple(c),
        a_level=tuple(a_level),
        b_level=tuple(b_level),
    )


def p_top(m: int, prec: Precision | int | None = None):
    """Limiting share of top-valued outputs, ``prod_k dPsi/dv(r, w_k)``."""
    return critical_data(m, prec).p[-1]


def p_bottom_closed(m: int, prec: Precision | int | None = None):
    """Limiting share of bottom-valued outputs, ``(1 - sqrt(m/(m+4))) / 2``."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    ctx = _prec(prec).ctx
    s = ctx.sqrt(ctx.mpf(m) / (m + 4))
    # 1 - s rewritten to avoid cancellation at large m
    return (ctx.mpf(4) / (m + 4)) / (1 + s) / 2


@dataclass(frozen=True)
class Godel4Radicals:
    beta: object
    alpha: object
    gamma: object
    p_bot: object
    p_a: object
    p_b: object
    p_top: object
    w: tuple  # closed forms of w_0..w_3
    d: tuple  # closed forms of d_0..d_2


def godel4_exact(prec: Precision | int | None = None) -> Godel4Radicals:
    """Nested-radical closed forms of the four-valued limit constants."""
    ctx = _prec(prec).ctx
    s2 = ctx.sqrt(2)
    beta = ctx.sqrt(7 + 2 * s2)
    alpha = 1 + s2 + beta
    gamma = ctx.sqrt(16 + alpha**2)
    p_bot = ctx.mpf(1) / 2 - s2 / 4
    p_a = (2 + s2) / (2 * alpha * beta)
    p_b = (2 + s2) * alpha / (beta * gamma * (alpha + gamma))
    p_t = (2 + s2) * alpha * (alpha + gamma) / (16 * beta * gamma)
    w = (
        ctx.mpf(1) / 2,
        ctx.mpf(3) / 4 - s2 / 4,
        ctx.mpf(7) / 8 - s2 / 8 - beta / 8,
        ctx.mpf(15) / 16 - s2 / 16 - beta / 16 - gamma / 16,
    )
    d = ((2 + s2) / 4, alpha / (2 * beta), (alpha + gamma) / (2 * gamma))
    return Godel4Radicals(beta, alpha, gamma, p_bot, p_a, p_b, p_t, w, d)


def pair_singular_coefficient(cd: CriticalData, i: int, j: int):
    """Square-root coefficient of ``G_i * G_j`` at ``r``: ``a_i b_j + a_j b_i``."""
    a, b = cd.a_level, cd.b_level
    return a[i] * b[j] + a[j] * b[i]


@dataclass(frozen=True)
class ScaledReal:
    """``mantissa * 10**exponent`` with ``1 <= |mantissa| < 10``."""

    mantissa: object
    exponent: int
    value: object  # the same number as a context mpf (exponent range is unbounded)

    def ratio(self, exact: int):
        """``exact / self`` at the working precision of ``value``."""
        return self.value.context.mpf(exact) / self.value

    def __str__(self) -> str:
        return f"{mpmath.nstr(self.mantissa, 15)}e{self.exponent}"


def _scaled(ctx, logval) -> ScaledReal:
    log10 = logval / ctx.ln(10)
    e = int(ctx.floor(log10))
    mant = ctx.power(10, log10 - e)
    if mant >= 10:  # floor rounding at the boundary
        mant, e = mant / 10, e + 1
    return ScaledReal(mant, e, ctx.exp(logval))


def asymptotic_estimate(m: int, j: int | None, n: int, cd: CriticalData | None = None) -> ScaledReal:
    """``(p_j / 4) * (4m)^n / (sqrt(pi) * n^(3/2))``.

    ``j=None`` gives the estimate of the total ``m^n Catalan(n-1)`` (``p = 1``).
    Computed in the log domain.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if cd is None:
        cd = critical_data(m)
    elif cd.m != m:
        raise ValueError(f"critical data is for m={cd.m}, not {m}")
    ctx = Precision(cd.digits).ctx
    weight = ctx.mpf(1) if j is None else cd.p[j]
    logval = (
        ctx.ln(weight / 4) + n * ctx.ln(4 * m) - ctx.ln(ctx.pi) / 2 - ctx.mpf(3) / 2 * ctx.ln(n)
    )
    return _scaled(ctx, logval)
