"""q-Volkenborn integrals as limits of Riemann sums, ball measures and the
weighted ball measure with its rescaling identities.

Truncation conventions
----------------------
``riemann_sum`` uses a *total* level m: the points are xi < p**m (restricted
to the ball when one is given) and the sum is normalized by [p**m]_q.

The rescaled ball integrals (``thm1_lhs`` and friends) use an *inner* level
m: the points are xi = a + p**n k with k < p**m, measured against
q' = q**(1/p**n) and normalized by [p**(n+m)]_{q'}.  Both cost p**m terms
at inner level m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .analytic import QParameter, plog, qbracket
from .functions import Dilate, ExpWeight, Product, UDFunction
from .padic import (
    DomainError,
    PadicNumber,
    PrecisionContext,
    Scalar,
    pnorm,
    residual_exponent,
)
from .ring import Grid, make_ring

__all__ = [
    "Ball",
    "IntegralResult",
    "WeightedMeasureValue",
    "as_param",
    "riemann_sum",
    "integrate",
    "ball_measure",
    "weighted_measure",
    "invariance_residual",
    "thm1_lhs",
    "thm1_rhs",
    "thm1_closed_form",
    "thm1_direct_sum",
    "residual_string",
]

GUARD = 6
EXACT, CONVERGED, MAX_LEVEL = "Exact", "Converged", "MaxLevel"


@dataclass(frozen=True)
class Ball:
    """a + p**n Z_p with 0 <= a < p**n."""

    a: int
    n: int
    p: int

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.a < self.p**self.n:
            raise DomainError(f"ball needs 0 <= a < p^n, got a={self.a}, n={self.n}")

    @classmethod
    def around(cls, x: int, n: int, p: int) -> "Ball":
        """The level-n ball containing the integer x."""
        return cls(x % p**n, n, p)

    def children(self) -> list["Ball"]:
        s = self.p**self.n
        return [Ball(self.a + i * s, self.n + 1, self.p) for i in range(self.p)]

    def to_json(self) -> dict:
        return {"a": self.a, "n": self.n}


@dataclass(frozen=True)
class IntegralResult:
    value: PadicNumber
    level: int
    residual: Fraction
    residual_exp: float  # certified: residual <= p**residual_exp
    status: str
    history: tuple = ()  # (m, value, residual_exp or None) per computed level

    def to_json(self) -> dict:
        return {
            "value": self.value.to_json(),
            "level": self.level,
            "residual": residual_string(self.value.p, self.residual_exp),
            "status": self.status,
        }


@dataclass(frozen=True)
class WeightedMeasureValue:
    value: PadicNumber
    ball: Ball
    weight: QParameter
    q: QParameter
    level: int


def residual_string(p: int, exp: float) -> str:
    """'p^-k' for a residual bounded by p**-k, '0' for an exact zero."""
    if exp == -math.inf:
        return "0"
    return f"{p}^{int(exp)}"


def as_param(x, p: int) -> QParameter:
    if isinstance(x, QParameter):
        return x
    return QParameter(x, p)


def _one(p: int) -> QParameter:
    return QParameter(1, p)


def _ctx(ctx: PrecisionContext | None, p: int) -> PrecisionContext:
    return ctx if ctx is not None else PrecisionContext(p)


def _weighted_total(f: UDFunction, base: PadicNumber, ring, x0: int, step: int, count: int) -> PadicNumber:
    """sum_k f(x0 + step k) * base**(x0 + step k)."""
    M = ring.M
    w = Grid(ring, 0, ring.powers(pow(base.unit, step, M), count, pow(base.unit, x0, M)), base.absprec)
    return f.grid(ring, x0, step, count).dot(w)


def riemann_sum(
    f: UDFunction,
    q: QParameter | Scalar,
    m: int,
    weight: QParameter | Scalar | None = None,
    ball: Ball | None = None,
    ctx: PrecisionContext | None = None,
) -> PadicNumber:
    """(1/[p^m]_q) sum_{xi < p^m, xi in ball} omega^xi f(xi) q^xi."""
    q = as_param(q, getattr(q, "p", None) or (ctx.p if ctx else None))
    p = q.p
    ctx = _ctx(ctx, p)
    if q.is_one():
        raise DomainError("q = 1 has no q-Volkenborn measure")
    a, n = (ball.a, ball.n) if ball is not None else (0, 0)
    if m < n:
        raise ValueError(f"truncation m={m} below the ball level n={n}")
    K = ctx.digits + m + GUARD
    ring = make_ring(p, K)
    w = as_param(weight, p) if weight is not None else _one(p)
    base = (w * q).at(K)
    S = _weighted_total(f, base, ring, a, p**n, p ** (m - n))
    return S / qbracket(p**m, q.at(K))


def integrate(
    f: UDFunction,
    q: QParameter | Scalar,
    weight: QParameter | Scalar | None = None,
    ball: Ball | None = None,
    tol: Fraction | None = None,
    m_max: int = 8,
    ctx: PrecisionContext | None = None,
) -> IntegralResult:
    """Deepen the Riemann sum until |S_m - S_{m-1}|_p <= tol or m = m_max."""
    q = as_param(q, ctx.p if ctx else None)
    p = q.p
    ctx = _ctx(ctx, p)
    if tol is None:
        tol = Fraction(1, p**6)
    if tol <= 0:
        raise ValueError("tol must be positive")
    lc = f.local_constancy()
    if weight is not None and not as_param(weight, p).is_one():
        lc = None
    m0 = max(1, ball.n if ball is not None else 0, lc or 0)
    if m0 >= m_max:
        m0 = max(1, m_max - 1)
    prev = riemann_sum(f, q, m0, weight, ball, ctx)
    history = [(m0, prev, None)]
    all_zero = True
    m = m0
    while True:
        m += 1
        cur = riemann_sum(f, q, m, weight, ball, ctx)
        diff = cur - prev
        res = pnorm(diff)
        exp = residual_exponent(diff)
        history.append((m, cur, exp))
        all_zero = all_zero and res == 0
        if all_zero and lc is not None and m >= lc:
            return IntegralResult(cur, m, Fraction(0), -math.inf, EXACT, tuple(history))
        # a zero difference only certifies |diff| <= p^exp
        if exp == -math.inf or Fraction(p) ** int(exp) <= tol:
            return IntegralResult(cur, m, res, exp, CONVERGED, tuple(history))
        if m >= m_max:
            return IntegralResult(cur, m, res, exp, MAX_LEVEL, tuple(history))
        prev = cur


def ball_measure(q: QParameter | Scalar, ball: Ball, ctx: PrecisionContext | None = None) -> PadicNumber:
    """q^a / [p^n]_q in closed form."""
    q = as_param(q, ball.p)
    ctx = _ctx(ctx, ball.p)
    K = ctx.digits + ball.n + GUARD
    qv = q.at(K)
    return qv**ball.a / qbracket(ball.p**ball.n, qv)


def weighted_measure(
    f: UDFunction,
    omega: QParameter | Scalar,
    q: QParameter | Scalar,
    ball: Ball,
    m: int,
    ctx: PrecisionContext | None = None,
) -> WeightedMeasureValue:
    """The integral of omega^xi f(xi) over the ball against mu_q, truncated at m."""
    p = ball.p
    omega, q = as_param(omega, p), as_param(q, p)
    v = riemann_sum(f, q, m, omega, ball, ctx)
    return WeightedMeasureValue(v, ball, omega, q, m)


def invariance_residual(
    f: UDFunction,
    omega: QParameter | Scalar,
    q: QParameter | Scalar,
    a: int,
    n: int,
    m: int,
    ctx: PrecisionContext | None = None,
) -> Fraction:
    """|[p^n]_q mu(a + p^n Z_p) - [p^(n+1)]_q mu(a + p^(n+1) Z_p)|_p."""
    q = as_param(q, getattr(q, "p", None) or ctx.p)
    p = q.p
    ctx = _ctx(ctx, p)
    K = ctx.digits + m + GUARD
    qv = q.at(K)
    outer = weighted_measure(f, omega, q, Ball.around(a, n, p), m, ctx).value
    inner = weighted_measure(f, omega, q, Ball.around(a, n + 1, p), m, ctx).value
    return pnorm(qbracket(p**n, qv) * outer - qbracket(p ** (n + 1), qv) * inner)


def _root_params(omega: QParameter, q: QParameter, n: int, K: int):
    q.require_depth(n, "q")
    omega.require_depth(n, "ω")
    return omega.root(n, K, "ω"), q.root(n, K, "q")


def thm1_lhs(
    f: UDFunction,
    omega: QParameter | Scalar,
    q: QParameter | Scalar,
    ball: Ball,
    m: int,
    ctx: PrecisionContext | None = None,
) -> PadicNumber:
    """Integral over the ball of omega^(xi/p^n) f(xi) q^(-xi/p^n) against mu_{q'}.

    Inner level m: xi = a + p^n k, k < p^m, normalized by [p^(n+m)]_{q'}.
    """
    p, a, n = ball.p, ball.a, ball.n
    omega, q = as_param(omega, p), as_param(q, p)
    ctx = _ctx(ctx, p)
    K = ctx.digits + n + m + GUARD
    w1, q1 = _root_params(omega, q, n, K)
    ring = make_ring(p, K)
    # omega'^xi q'^-xi q'^xi, each factor as its own power grid
    step, count, M = p**n, p**m, ring.M
    grids = []
    for b in (w1, q1.invert(), q1):
        grids.append(Grid(ring, 0, ring.powers(pow(b.unit, step, M), count, pow(b.unit, a, M)), b.absprec))
    weight = grids[0] * grids[1] * grids[2]
    S = f.grid(ring, a, step, count).dot(weight)
    return S / qbracket(p ** (n + m), q1)


def _thm1_inner(f: UDFunction, omega: QParameter, q: QParameter, a: int, n: int, p: int) -> UDFunction:
    # xi -> omega^xi f(a + p^n xi) q^-xi
    return Product(Product(ExpWeight(omega), Dilate(f, a, n, p)), ExpWeight(q.inverse()))


def thm1_rhs(
    f: UDFunction,
    omega: QParameter | Scalar,
    q: QParameter | Scalar,
    ball: Ball,
    m: int,
    ctx: PrecisionContext | None = None,
) -> PadicNumber:
    """omega'^a / [p^n]_{q'} times the q-integral of omega^xi f(a+p^n xi) q^-xi."""
    p, a, n = ball.p, ball.a, ball.n
    omega, q = as_param(omega, p), as_param(q, p)
    ctx = _ctx(ctx, p)
    K = ctx.digits + n + m + GUARD
    w1, q1 = _root_params(omega, q, n, K)
    inner = riemann_sum(_thm1_inner(f, omega, q, a, n, p), q, m, ctx=ctx.with_digits(ctx.digits + n))
    return w1**a / qbracket(p**n, q1) * inner


def thm1_closed_form(
    omega: QParameter | Scalar,
    q: QParameter | Scalar,
    ball: Ball,
    ctx: PrecisionContext | None = None,
) -> PadicNumber:
    """(1-q) omega'^a q'^a / ((1 - omega q) [p^n]_{q'}) * (1 + log omega / log q)."""
    p, a, n = ball.p, ball.a, ball.n
    omega, q = as_param(omega, p), as_param(q, p)
    ctx = _ctx(ctx, p)
    if q.is_one():
        raise DomainError("q = 1: log q vanishes")
    wq = omega * q
    if wq.is_one():
        raise DomainError("pole at omega*q = 1")
    # each of 1-q, 1-omega q, log q, log(omega q) costs its valuation in digits
    extra = 2 * int(q.closeness) + 2 * int(wq.closeness)
    K = ctx.digits + n + extra + GUARD
    w1, q1 = _root_params(omega, q, n, K)
    qv = q.at(K)
    factor = plog(wq.at(K)) / plog(qv)
    return (1 - qv) * w1**a * q1**a / ((1 - wq.at(K)) * qbracket(p**n, q1)) * factor


def thm1_direct_sum(
    omega: QParameter | Scalar,
    q: QParameter | Scalar,
    ball: Ball,
    m: int,
    ctx: PrecisionContext | None = None,
) -> PadicNumber:
    """The ball integral of omega^(xi/p^n) against mu_{q'} at inner level m."""
    p, a, n = ball.p, ball.a, ball.n
    omega, q = as_param(omega, p), as_param(q, p)
    ctx = _ctx(ctx, p)
    K = ctx.digits + n + m + GUARD
    w1, q1 = _root_params(omega, q, n, K)
    ring = make_ring(p, K)
    step, count, M = p**n, p**m, ring.M
    b = w1 * q1
    S = Grid(ring, 0, ring.powers(pow(b.unit, step, M), count, pow(b.unit, a, M)), b.absprec).total()
    return S / qbracket(p ** (n + m), q1)
