"""The weighted q-maximal operator and its sup-norm bound."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .analytic import QParameter, plog
from .functions import ExpWeight, UDFunction, lipschitz_norm
from .integral import (
    GUARD,
    Ball,
    _thm1_inner,
    as_param,
    riemann_sum,
    thm1_closed_form,
    thm1_direct_sum,
    thm1_lhs,
)
from .padic import DomainError, PadicError, PadicNumber, PrecisionContext, pnorm

__all__ = [
    "DegenerateDenominator",
    "LevelEntry",
    "MaximalResult",
    "BoundReport",
    "level_value",
    "level_value_thm2",
    "maximal_operator",
    "weight_l1_norm",
    "k_factor",
    "check_bound",
]


class DegenerateDenominator(DomainError):
    pass


def _pnorm_exp(x: PadicNumber) -> int | None:
    """e with |x|_p = p^e, None for zero."""
    return None if pnorm(x) == 0 else -int(x.val)


@dataclass(frozen=True)
class LevelEntry:
    n: int
    numerator: PadicNumber | None = None
    denominator: PadicNumber | None = None
    value: PadicNumber | None = None
    error: str | None = None

    @property
    def norm(self) -> Fraction:
        return pnorm(self.value) if self.value is not None else Fraction(-1)

    def to_json(self) -> dict:
        if self.error is not None:
            return {"n": self.n, "error": self.error}
        return {
            "n": self.n,
            "numerator": self.numerator.to_json(),
            "denominator": self.denominator.to_json(),
            "value": self.value.to_json(),
            "pnorm_exp": _pnorm_exp(self.value),
        }


@dataclass(frozen=True)
class MaximalResult:
    a: int
    value: PadicNumber
    argmax_n: int
    levels: list[LevelEntry] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "value": self.value.to_json(),
            "argmax_n": self.argmax_n,
            "levels": [e.to_json() for e in self.levels],
        }


@dataclass(frozen=True)
class BoundReport:
    left: Fraction
    k_factor: Fraction
    f_norm: Fraction
    weight_norm: Fraction
    right: Fraction
    holds: bool
    argmax_point: int | None = None

    def to_json(self) -> dict:
        return {
            "left": str(self.left),
            "K": str(self.k_factor),
            "f_norm": str(self.f_norm),
            "weight_norm": str(self.weight_norm),
            "right": str(self.right),
            "holds": self.holds,
            "argmax_point": self.argmax_point,
        }


def _level_parts(f, omega, q, a, n, m, ctx, direct_denominator):
    p = q.p
    ball = Ball.around(a, n, p)
    num = thm1_lhs(f, omega, q, ball, m, ctx)
    if direct_denominator:
        den = thm1_direct_sum(omega, q, ball, m, ctx)
    else:
        den = thm1_closed_form(omega, q, ball, ctx)
    if pnorm(den) == 0:
        raise DegenerateDenominator(f"denominator vanishes to precision at n={n}")
    return num, den


def level_value(
    f: UDFunction,
    omega: QParameter,
    q: QParameter,
    a: int,
    n: int,
    m: int,
    ctx: PrecisionContext | None = None,
    direct_denominator: bool = False,
) -> PadicNumber:
    """Ball average at level n: the rescaled integral over a + p^n Z_p divided
    by the weighted mass of the same ball."""
    q = as_param(q, ctx.p if ctx else None)
    omega = as_param(omega, q.p)
    num, den = _level_parts(f, omega, q, a, n, m, ctx, direct_denominator)
    return num / den


def level_value_thm2(
    f: UDFunction,
    omega: QParameter,
    q: QParameter,
    a: int,
    n: int,
    m: int,
    ctx: PrecisionContext | None = None,
) -> PadicNumber:
    """(1-omega q) log q / ((1-q) log(omega q)) * q^(-a/p^n) * I_q(omega^xi f(a+p^n xi) q^-xi)."""
    q = as_param(q, ctx.p if ctx else None)
    omega = as_param(omega, q.p)
    p = q.p
    ctx = ctx if ctx is not None else PrecisionContext(p)
    a_n = a % p**n
    wq = omega * q
    if wq.is_one():
        raise DomainError("pole at omega*q = 1")
    extra = 2 * int(q.closeness) + 2 * int(wq.closeness)
    K = ctx.digits + n + m + extra + GUARD
    q.require_depth(n, "q")
    omega.require_depth(n, "ω")
    q1 = q.root(n, K, "q")
    qv, wqv = q.at(K), wq.at(K)
    factor = (1 - wqv) * plog(qv) / ((1 - qv) * plog(wqv))
    inner = riemann_sum(_thm1_inner(f, omega, q, a_n, n, p), q, m, ctx=ctx.with_digits(ctx.digits + n))
    return factor * q1 ** (-a_n) * inner


def maximal_operator(
    f: UDFunction,
    omega: QParameter,
    q: QParameter,
    a: int,
    n_range: tuple[int, int],
    m: int,
    ctx: PrecisionContext | None = None,
    direct_denominator: bool = False,
) -> MaximalResult:
    """Level value of largest p-adic norm over n in n_range (smallest n on ties)."""
    q = as_param(q, ctx.p if ctx else None)
    omega = as_param(omega, q.p)
    lo, hi = n_range
    if lo < 0 or hi < lo:
        raise ValueError(f"n_range must satisfy 0 <= lo <= hi, got {n_range}")
    # the deepest root must exist; other per-level failures go into the table
    q.require_depth(hi, "q")
    omega.require_depth(hi, "ω")
    levels = []
    for n in range(lo, hi + 1):
        try:
            num, den = _level_parts(f, omega, q, a, n, m, ctx, direct_denominator)
            levels.append(LevelEntry(n, num, den, num / den))
        except PadicError as exc:
            levels.append(LevelEntry(n, error=str(exc)))
    ok = [e for e in levels if e.error is None]
    if not ok:
        raise DomainError("; ".join(f"n={e.n}: {e.error}" for e in levels))
    best = ok[0]
    for e in ok[1:]:
        if e.norm > best.norm:
            best = e
    return MaximalResult(a, best.value, best.n, levels)


def weight_l1_norm(
    omega: QParameter,
    q: QParameter,
    m: int,
    ctx: PrecisionContext | None = None,
) -> PadicNumber:
    """Riemann sum of xi -> (q/omega)^(-xi) at level m."""
    q = as_param(q, ctx.p if ctx else None)
    omega = as_param(omega, q.p)
    return riemann_sum(ExpWeight(omega / q), q, m, ctx=ctx)


def k_factor(
    omega: QParameter,
    q: QParameter,
    a_points,
    n_range: tuple[int, int],
    ctx: PrecisionContext | None = None,
) -> Fraction:
    """|(1-omega q) log q|_p / |(1-q) log(omega q)|_p * max_{a,n} |q^(-a/p^n)|_p."""
    p = q.p
    ctx = ctx if ctx is not None else PrecisionContext(p)
    wq = omega * q
    K = ctx.digits + n_range[1] + GUARD
    qv, wqv = q.at(K), wq.at(K)
    ratio = pnorm((1 - wqv) * plog(qv)) / pnorm((1 - qv) * plog(wqv))
    sup = max(
        pnorm(q.root(n, K) ** (-(a % p**n)))
        for a in a_points
        for n in range(n_range[0], n_range[1] + 1)
    )
    return ratio * sup


def check_bound(
    f: UDFunction,
    omega: QParameter,
    q: QParameter,
    a_points,
    n_range: tuple[int, int],
    m: int,
    depth: int = 4,
    ctx: PrecisionContext | None = None,
) -> BoundReport:
    """Compare sup_a |M f(a)|_p against K ||f||_1 |int (q/omega)^-xi dmu_q|_p."""
    q = as_param(q, ctx.p if ctx else None)
    omega = as_param(omega, q.p)
    ctx = ctx if ctx is not None else PrecisionContext(q.p)
    a_points = list(a_points)
    left, where = Fraction(0), None
    for a in a_points:
        r = maximal_operator(f, omega, q, a, n_range, m, ctx)
        v = pnorm(r.value)
        if where is None or v > left:
            left, where = v, a
    K = k_factor(omega, q, a_points, n_range, ctx)
    fn = lipschitz_norm(f, depth, ctx).value
    wn = pnorm(weight_l1_norm(omega, q, m, ctx))
    right = K * fn * wn
    return BoundReport(left, K, fn, wn, right, left <= right, where)

