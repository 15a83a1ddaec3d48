"""Seeded randomized verification of the integral identities.

Each suite draws ``cases`` parameter sets from ``random.Random(seed)``,
evaluates both sides of one identity and records the certified residual
exponent e (|lhs - rhs|_p <= p**e).  A case fails when e exceeds the
suite's tolerance or when evaluation raises.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .analytic import QParameter, pexp, plog, ppow
from .functions import BallIndicator, ExpWeight, Polynomial, UDFunction
from .integral import (
    Ball,
    ball_measure,
    thm1_closed_form,
    thm1_direct_sum,
    thm1_lhs,
    thm1_rhs,
    weighted_measure,
)
from .maximal import check_bound, level_value, level_value_thm2
from .padic import PadicError, PadicNumber, PrecisionContext, from_rational, residual_exponent

__all__ = ["SUITES", "VerificationReport", "run_suite", "UnknownSuite"]


class UnknownSuite(KeyError):
    pass


@dataclass
class VerificationReport:
    identity: str
    p: int
    seed: int
    cases: int
    m: int
    max_residual_exp: int | None
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "p": self.p,
            "seed": self.seed,
            "cases": self.cases,
            "m": self.m,
            "max_residual_exp": self.max_residual_exp,
            "failures": self.failures,
        }


# -- random parameters -------------------------------------------------------


def _rand_unit_rational(rng: random.Random, p: int) -> Fraction:
    while True:
        s = rng.randint(1, p * p)
        if s % p:
            break
    t = rng.choice([1, 1, 2, 4]) if p > 2 else 1
    if t % p == 0:
        t = 1
    return Fraction(s, t)


def rand_one_unit(rng: random.Random, p: int, k_min: int, spread: int = 2) -> Fraction:
    """1 + p^k u with k in [k_min, k_min + spread] and u a p-adic unit."""
    k = rng.randint(k_min, k_min + spread)
    return 1 + Fraction(p) ** k * _rand_unit_rational(rng, p)


def rand_coeffs(rng: random.Random, max_degree: int = 3) -> list[int]:
    return [rng.randint(-9, 9) for _ in range(rng.randint(1, max_degree + 1))]


def rand_function(rng: random.Random, p: int) -> UDFunction:
    kind = rng.choice(["poly", "poly", "expw", "ind", "mixed"])
    if kind == "poly":
        return Polynomial(rand_coeffs(rng))
    if kind == "expw":
        return ExpWeight(rand_one_unit(rng, p, 1), p)
    if kind == "ind":
        n = rng.randint(0, 2)
        return BallIndicator(rng.randrange(p**n), n, p)
    return ExpWeight(rand_one_unit(rng, p, 1), p) * Polynomial(rand_coeffs(rng, 2))


def rand_ball(rng: random.Random, p: int, n_max: int) -> Ball:
    n = rng.randint(0, n_max)
    return Ball(rng.randrange(p**n), n, p)


def _pair(rng, p, n):
    # a (q, omega) pair valid at root depth n with omega*q != 1
    while True:
        q = QParameter(rand_one_unit(rng, p, n + 1), p)
        w = QParameter(rand_one_unit(rng, p, n + 1), p)
        if not (w * q).is_one():
            return q, w


def _e(x: PadicNumber) -> float:
    return residual_exponent(x)


# -- suites ------------------------------------------------------------------
# each case function returns (params, [(residual_exp, tolerance, label), ...])


def _case_prop1(rng, p, ctx, m):
    ball = rand_ball(rng, p, 2)
    q, w = _pair(rng, p, 0)
    f, g = rand_function(rng, p), rand_function(rng, p)
    al, be = _rand_unit_rational(rng, p) * rng.choice([1, -1, p]), _rand_unit_rational(rng, p)
    combo = al * f + be * g
    mu = lambda h: weighted_measure(h, w, q, ball, m, ctx).value  # noqa: E731
    diff = mu(combo) - mu(f) * al - mu(g) * be
    params = _params(p, q=q, w=w, f=f.descriptor, g=g.descriptor, alpha=al, beta=be, ball=ball, m=m)
    return params, [(_e(diff), -(ctx.digits - 2), "linearity")]


def _case_thm1_1(rng, p, ctx, m):
    ball = rand_ball(rng, p, 2)
    q, w = _pair(rng, p, ball.n)
    f = rand_function(rng, p)
    diff = thm1_lhs(f, w, q, ball, m, ctx) - thm1_rhs(f, w, q, ball, m, ctx)
    return _params(p, q=q, w=w, f=f.descriptor, ball=ball, m=m), [(_e(diff), -(m - 2), "lhs-rhs")]


def _case_thm1_2(rng, p, ctx, m):
    ball = rand_ball(rng, p, 2)
    q, w = _pair(rng, p, ball.n)
    closed = thm1_closed_form(w, q, ball, ctx)
    e_lo = _e(thm1_direct_sum(w, q, ball, m - 2, ctx) - closed)
    e_hi = _e(thm1_direct_sum(w, q, ball, m, ctx) - closed)
    checks = [(e_hi, -4, "closed-form")]
    # strict improvement from m-2 to m: e_hi - e_lo <= -1
    checks.append((e_hi - e_lo, -1, "improvement"))
    return _params(p, q=q, w=w, ball=ball, m=m), checks


def _case_thm2_1(rng, p, ctx, m):
    q, w = _pair(rng, p, 2)
    f = rand_function(rng, p)
    a = rng.randrange(p**3)
    checks = []
    for n in range(0, 3):
        d = level_value(f, w, q, a, n, m, ctx) - level_value_thm2(f, w, q, a, n, m, ctx)
        checks.append((_e(d), -(m - 2), f"level n={n}"))
    return _params(p, q=q, w=w, f=f.descriptor, a=a, n_range="0,2", m=m), checks


def _case_thm2_2(rng, p, ctx, m):
    q, w = _pair(rng, p, 2)
    f = Polynomial(rand_coeffs(rng, 4))
    rep = check_bound(f, w, q, range(p), (0, 2), m, ctx=ctx)
    # log_p(left / right); holds iff <= 0
    if rep.left == 0:
        e = -math.inf
    else:
        e = round(math.log(rep.left / rep.right, p)) if rep.right else math.inf
    params = _params(p, q=q, w=w, f=f.descriptor, a="0.." + str(p - 1), n_range="0,2", m=m)
    params["report"] = rep.to_json()
    return params, [(e, 0, "bound")]


def _case_dist(rng, p, ctx, m):
    ball = rand_ball(rng, p, 2)
    q, w = _pair(rng, p, 0)
    f = rand_function(rng, p)
    closed = sum((ball_measure(q, c, ctx) for c in ball.children()), from_rational(0, 1, ctx))
    e_closed = _e(closed - ball_measure(q, ball, ctx))
    mm = max(m, ball.n + 1)
    parts = [weighted_measure(f, w, q, c, mm, ctx).value for c in ball.children()]
    total = parts[0]
    for v in parts[1:]:
        total = total + v
    e_sum = _e(total - weighted_measure(f, w, q, ball, mm, ctx).value)
    checks = [(e_closed, -(ctx.digits - 2), "closed"), (e_sum, -(mm - 1), "summation")]
    return _params(p, q=q, w=w, f=f.descriptor, ball=ball, m=mm), checks


def _case_explog(rng, p, ctx, m):
    N = ctx.digits
    k = rng.randint(1, 4)
    u = _rand_unit_rational(rng, p) * rng.choice([1, -1])
    t = from_rational(Fraction(p) ** k * u, 1, ctx)
    x = from_rational(1 + Fraction(p) ** k * u, 1, ctx)
    s1, s2 = _rand_unit_rational(rng, p) * rng.choice([1, p]), Fraction(rng.randint(-50, 50), rng.choice([1, 2, 4]))
    if s2.denominator % p == 0:
        s2 = Fraction(s2.numerator)
    e1 = _e(plog(pexp(t)) - t) + t.val
    e2 = _e(pexp(plog(x)) - x)
    e3 = _e(ppow(x, s1 + s2) - ppow(x, s1) * ppow(x, s2))
    tol = -(N - 2)
    checks = [(e1, tol, "log(exp t)"), (e2, tol, "exp(log x)"), (e3, tol, "pow additivity")]
    return _params(p, t=t.to_fraction(), x=x.to_fraction(), s1=s1, s2=s2), checks


SUITES: dict[str, tuple[Callable, int]] = {
    "prop1": (_case_prop1, 4),
    "thm1-1": (_case_thm1_1, 6),
    "thm1-2": (_case_thm1_2, 6),
    "thm2-1": (_case_thm2_1, 6),
    "thm2-2": (_case_thm2_2, 6),
    "dist": (_case_dist, 4),
    "explog": (_case_explog, 0),
}


def _params(p, **kw) -> dict:
    out = {"p": p}
    for k, v in kw.items():
        if isinstance(v, QParameter):
            out[k] = str(v.exact)
        elif isinstance(v, Ball):
            out[k] = f"{v.a},{v.n}"
        elif isinstance(v, Fraction):
            out[k] = str(v)
        else:
            out[k] = v
    return out


def _json_exp(e: float):
    if e == -math.inf:
        return None
    if e == math.inf:
        return "inf"
    return int(e)


def run_suite(
    name: str,
    p: int = 3,
    cases: int = 20,
    seed: int = 0,
    ctx: PrecisionContext | None = None,
    m: int | None = None,
) -> VerificationReport:
    if name not in SUITES:
        raise UnknownSuite(name)
    fn, m_default = SUITES[name]
    m = m_default if m is None else m
    ctx = ctx if ctx is not None else PrecisionContext(p)
    rng = random.Random(f"{name}:{p}:{seed}")
    worst = -math.inf
    failures = []
    for i in range(cases):
        try:
            params, checks = fn(rng, p, ctx, m)
        except PadicError as exc:
            failures.append({"case": i, "error": f"{type(exc).__name__}: {exc}"})
            continue
        for e, tol, label in checks:
            if label not in ("improvement",):
                worst = max(worst, e)
            if e > tol:
                failures.append(
                    {"case": i, "check": label, "residual_exp": _json_exp(e), "tolerance": tol, "params": params}
                )
    return VerificationReport(name, p, seed, cases, m, _json_exp(worst) if worst != -math.inf else None, failures)
