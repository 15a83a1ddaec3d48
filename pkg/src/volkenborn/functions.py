"""Functions Z_p -> Q_p: evaluation, difference quotients and norms.

Every function evaluates pointwise (``evaluate``) and on arithmetic grids
``x0 + step*k`` (``grid``), the latter feeding the Riemann sums.  The
built-in families also report upper bounds for their sup and Lipschitz
norms, which lets the finite sweeps certify exactness.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, NamedTuple

import numpy as np

from .analytic import QParameter, ppow
from .padic import (
    DomainError,
    PadicNumber,
    PrecisionContext,
    Scalar,
    from_rational,
    pnorm,
)
from .ring import Grid, ResidueRing, make_ring

__all__ = [
    "UDFunction",
    "Polynomial",
    "ExpWeight",
    "BallIndicator",
    "Sum",
    "Product",
    "Scale",
    "Dilate",
    "Evaluator",
    "NormBound",
    "evaluate",
    "difference_quotient",
    "supnorm",
    "lipschitz_norm",
    "constant",
]

GUARD = 4


class NormBound(NamedTuple):
    """A norm value found by a sweep; ``exact`` means it is the true supremum."""

    value: Fraction
    exact: bool


def _to_padic(c: Scalar, p: int, prec: int) -> PadicNumber:
    if isinstance(c, PadicNumber):
        return c
    return from_rational(Fraction(c), 1, prec, p=p)


class UDFunction:
    """Base class: subclasses implement ``evaluate`` and usually ``grid``."""

    descriptor = "f"

    def evaluate(self, x: PadicNumber, ctx: PrecisionContext) -> PadicNumber:
        raise NotImplementedError

    def grid(self, ring: ResidueRing, x0: int, step: int, count: int) -> Grid:
        """Values at ``x0 + step*k``, k < count; default evaluates pointwise."""
        ctx = PrecisionContext(ring.p, ring.K, 0)
        vals = [self.evaluate(from_rational(x0 + step * k, 1, ctx), ctx) for k in range(count)]
        return Grid.from_padics(ring, vals)

    def local_constancy(self) -> int | None:
        """n such that f is constant on every ball a + p^n Z_p, if known."""
        return None

    def sup_bound(self, p: int) -> Fraction | None:
        """An upper bound for ||f||_inf, if known."""
        return None

    def lip_bound(self, p: int) -> Fraction | None:
        """An upper bound for ||Delta_1 f||_inf, if known."""
        return None

    def __add__(self, other: "UDFunction") -> "UDFunction":
        return Sum(self, other)

    def __mul__(self, other):
        if isinstance(other, UDFunction):
            return Product(self, other)
        return Scale(other, self)

    def __rmul__(self, other):
        return Scale(other, self)

    def __neg__(self):
        return Scale(-1, self)

    def __sub__(self, other: "UDFunction") -> "UDFunction":
        return Sum(self, Scale(-1, other))

    def __repr__(self):
        return f"<{type(self).__name__} {self.descriptor}>"


class Polynomial(UDFunction):
    """sum c_i x**i with rational or p-adic coefficients."""

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("empty coefficient list")
        self.coeffs = [c if isinstance(c, PadicNumber) else Fraction(c) for c in coeffs]
        self.descriptor = "poly:" + ",".join(str(c) for c in self.coeffs)

    @property
    def degree(self) -> int:
        d = len(self.coeffs) - 1
        while d > 0 and _is_exact_zero(self.coeffs[d]):
            d -= 1
        return d

    def evaluate(self, x, ctx):
        if x.valuation < 0:
            raise DomainError("evaluation point must lie in Z_p")
        acc = _to_padic(self.coeffs[-1], ctx.p, ctx.digits)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + _to_padic(c, ctx.p, ctx.digits)
        return acc

    def _scaled(self, p: int, K: int):
        cs = [_to_padic(c, p, K) for c in self.coeffs]
        nonzero = [c.val for c in cs if not c.is_zero()]
        if not nonzero:
            return 0, [0], min(c.absprec for c in cs)
        s = min(nonzero)
        ints = [0 if c.is_zero() else c.unit * p ** (c.val - s) for c in cs]
        return s, ints, min(c.absprec for c in cs)

    def grid(self, ring, x0, step, count):
        s, ints, A = self._scaled(ring.p, ring.K)
        X = ring.arange(x0, step, count)
        return Grid(ring, s, ring.poly(ints, X), A)

    def local_constancy(self):
        return 0 if self.degree == 0 else None

    def sup_bound(self, p):
        return max(pnorm(c, p) for c in self.coeffs)

    def lip_bound(self, p):
        # Delta_1 x^k = sum_{i>=1} C(k,i) x^(k-i) m^(i-1): Gauss norm of the coefficients
        best = Fraction(0)
        for k, c in enumerate(self.coeffs):
            if k == 0:
                continue
            for i in range(1, k + 1):
                best = max(best, pnorm(c, p) * pnorm(comb(k, i), p))
        return best

    def sup_exact_from_sweep(self, found_val: float, depth: int, p: int) -> bool:
        s, _, _ = self._scaled(p, depth + 8)
        # f = p^s g with g integral: v(f(x)) < w is decided by x mod p^(w-s)
        return found_val - s <= depth


def _is_exact_zero(c) -> bool:
    if isinstance(c, PadicNumber):
        return c.is_exact_zero()
    return c == 0


def constant(c: Scalar) -> Polynomial:
    return Polynomial([c])


class ExpWeight(UDFunction):
    """x -> omega**x for a 1-unit omega."""

    def __init__(self, base: QParameter | Scalar, p: int | None = None):
        self.base = base if isinstance(base, QParameter) else QParameter(base, p)
        src = self.base.exact if self.base.exact is not None else self.base.value
        self.descriptor = f"expw:{src}"

    def evaluate(self, x, ctx):
        if x.valuation < 0:
            raise DomainError("evaluation point must lie in Z_p")
        return ppow(self.base.at(ctx.digits), x)

    def grid(self, ring, x0, step, count):
        w = self.base.at(ring.K)
        M = ring.M
        data = ring.powers(pow(w.unit, step, M), count, pow(w.unit, x0, M))
        return Grid(ring, 0, data, w.absprec)

    def local_constancy(self):
        return 0 if self.base.is_one() else None

    def sup_bound(self, p):
        return Fraction(1)

    def lip_bound(self, p):
        # |omega^m - 1| = |m log omega| and |log omega| = |omega - 1|
        if self.base.is_one():
            return Fraction(0)
        k = self.base.closeness
        return Fraction(p) ** (-k)


class BallIndicator(UDFunction):
    """Indicator of the ball a + p^n Z_p."""

    def __init__(self, a: int, n: int, p: int):
        if n < 0 or not 0 <= a < p**n:
            raise ValueError(f"ball needs 0 <= a < p^n, got a={a}, n={n}")
        self.a, self.n, self.p = a, n, p
        self.descriptor = f"ind:{a},{n}"

    def evaluate(self, x, ctx):
        hit = x.residue(self.n) == self.a
        return from_rational(1 if hit else 0, 1, ctx)

    def grid(self, ring, x0, step, count):
        mod = self.p**self.n
        k = np.arange(count, dtype=np.int64) if mod * count < 2**62 else np.arange(count, dtype=object)
        mask = ((x0 % mod) + (step % mod) * k) % mod == self.a
        return Grid(ring, 0, ring.from_mask(mask), float("inf"))

    def local_constancy(self):
        return self.n

    def sup_bound(self, p):
        return Fraction(1)

    def lip_bound(self, p):
        # a jump needs v(m) <= n-1, so |Delta| <= |1/m| <= p^(n-1)
        return Fraction(0) if self.n == 0 else Fraction(p) ** (self.n - 1)


class Sum(UDFunction):
    def __init__(self, f: UDFunction, g: UDFunction):
        self.f, self.g = f, g
        self.descriptor = f"{f.descriptor}+{g.descriptor}"

    def evaluate(self, x, ctx):
        return self.f.evaluate(x, ctx) + self.g.evaluate(x, ctx)

    def grid(self, ring, x0, step, count):
        return self.f.grid(ring, x0, step, count) + self.g.grid(ring, x0, step, count)

    def local_constancy(self):
        a, b = self.f.local_constancy(), self.g.local_constancy()
        return None if a is None or b is None else max(a, b)

    def sup_bound(self, p):
        a, b = self.f.sup_bound(p), self.g.sup_bound(p)
        return None if a is None or b is None else max(a, b)

    def lip_bound(self, p):
        a, b = self.f.lip_bound(p), self.g.lip_bound(p)
        return None if a is None or b is None else max(a, b)


class Product(UDFunction):
    def __init__(self, f: UDFunction, g: UDFunction):
        self.f, self.g = f, g
        self.descriptor = f"{_paren(f)}*{_paren(g)}"

    def evaluate(self, x, ctx):
        return self.f.evaluate(x, ctx) * self.g.evaluate(x, ctx)

    def grid(self, ring, x0, step, count):
        return self.f.grid(ring, x0, step, count) * self.g.grid(ring, x0, step, count)

    def local_constancy(self):
        a, b = self.f.local_constancy(), self.g.local_constancy()
        return None if a is None or b is None else max(a, b)

    def sup_bound(self, p):
        a, b = self.f.sup_bound(p), self.g.sup_bound(p)
        return None if a is None or b is None else a * b

    def lip_bound(self, p):
        # Delta(fg)(m,x) = f(x+m) Delta g + g(x) Delta f
        sf, sg = self.f.sup_bound(p), self.g.sup_bound(p)
        lf, lg = self.f.lip_bound(p), self.g.lip_bound(p)
        if None in (sf, sg, lf, lg):
            return None
        return max(sf * lg, sg * lf)


def _paren(f: UDFunction) -> str:
    return f"({f.descriptor})" if isinstance(f, Sum) else f.descriptor


class Scale(UDFunction):
    def __init__(self, c: Scalar, f: UDFunction):
        self.c = c if isinstance(c, PadicNumber) else Fraction(c)
        self.f = f
        self.descriptor = f"{self.c}*{_paren(f)}"

    def evaluate(self, x, ctx):
        return _to_padic(self.c, ctx.p, ctx.digits) * self.f.evaluate(x, ctx)

    def grid(self, ring, x0, step, count):
        return self.f.grid(ring, x0, step, count).scale(_to_padic(self.c, ring.p, ring.K))

    def local_constancy(self):
        return self.f.local_constancy()

    def sup_bound(self, p):
        b = self.f.sup_bound(p)
        return None if b is None else pnorm(self.c, p) * b

    def lip_bound(self, p):
        b = self.f.lip_bound(p)
        return None if b is None else pnorm(self.c, p) * b


class Dilate(UDFunction):
    """xi -> f(a + p^n xi), the integrand of the rescaled ball integrals."""

    def __init__(self, f: UDFunction, a: int, n: int, p: int):
        self.f, self.a, self.n, self.p = f, a, n, p
        self.descriptor = f"{_paren(f)}@({a}+{p}^{n}x)"

    def evaluate(self, x, ctx):
        return self.f.evaluate(from_rational(self.a, 1, ctx) + x * self.p**self.n, ctx)

    def grid(self, ring, x0, step, count):
        s = self.p**self.n
        return self.f.grid(ring, self.a + s * x0, s * step, count)

    def local_constancy(self):
        c = self.f.local_constancy()
        return None if c is None else max(0, c - self.n)

    def sup_bound(self, p):
        return self.f.sup_bound(p)

    def lip_bound(self, p):
        b = self.f.lip_bound(p)
        return None if b is None else b * Fraction(p) ** (-self.n)


class Evaluator(UDFunction):
    """Wrap an arbitrary pure callable ``fn(x, ctx) -> PadicNumber``."""

    def __init__(self, fn: Callable[[PadicNumber, PrecisionContext], PadicNumber], descriptor: str = "fn"):
        self.fn = fn
        self.descriptor = descriptor

    def evaluate(self, x, ctx):
        return self.fn(x, ctx)


def evaluate(f: UDFunction, x: Scalar, ctx: PrecisionContext) -> PadicNumber:
    x = _to_padic(x, ctx.p, ctx.digits)
    if x.valuation < 0:
        raise DomainError("evaluation point must lie in Z_p")
    return f.evaluate(x, ctx)


def difference_quotient(f: UDFunction, m: Scalar, x: Scalar, ctx: PrecisionContext) -> PadicNumber:
    """(f(x+m) - f(x)) / m for m != 0."""
    m = _to_padic(m, ctx.p, ctx.digits)
    x = _to_padic(x, ctx.p, ctx.digits)
    if m.is_zero():
        raise DomainError("difference quotient needs m != 0")
    if m.valuation < 0 or x.valuation < 0:
        raise DomainError("points must lie in Z_p")
    return (evaluate(f, x + m, ctx) - evaluate(f, x, ctx)) / m


def _sweep_ring(ctx: PrecisionContext, depth: int) -> ResidueRing:
    return make_ring(ctx.p, ctx.digits + depth + GUARD)


def _min_valuation(vals: list[float]) -> float:
    return min(vals) if vals else float("inf")


def _norm_from_val(p: int, v: float, ring: ResidueRing, shift: int) -> Fraction:
    # a zero to full working precision contributes nothing
    if v >= shift + ring.K or v == float("inf"):
        return Fraction(0)
    return Fraction(p) ** (-int(v))


def supnorm(f: UDFunction, depth: int = 4, ctx: PrecisionContext | None = None) -> NormBound:
    """max |f(x)|_p over x in {0, ..., p^depth - 1}."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    p = ctx.p
    ring = _sweep_ring(ctx, depth)
    g = f.grid(ring, 0, 1, p**depth)
    vals = g.valuations()
    w = _min_valuation(vals)
    found = Fraction(0) if w >= g.absprec else Fraction(p) ** (-int(w))
    ub = f.sup_bound(p)
    exact = ub is not None and found == ub
    if not exact and isinstance(f, Polynomial) and w < g.absprec:
        exact = f.sup_exact_from_sweep(w, depth, p)
    return NormBound(found, exact)


def lipschitz_norm(f: UDFunction, depth: int = 4, ctx: PrecisionContext | None = None) -> NormBound:
    """max(||f||_inf, max |Delta_1 f(m, x)|_p) over the depth-D sweep.

    m ranges over u*p^j, u in 1..p-1, j in 0..depth; x over 0..p^depth - 1.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    p = ctx.p
    sup = supnorm(f, depth, ctx)
    ring = _sweep_ring(ctx, 2 * depth)
    count = p**depth
    base = f.grid(ring, 0, 1, count)
    best = Fraction(0)
    for j in range(depth + 1):
        for u in range(1, p):
            m = u * p**j
            diff = f.grid(ring, m, 1, count) - base
            w = _min_valuation(diff.valuations())
            if w >= diff.absprec:
                continue
            # |Delta| = |diff| / |m| = p^(j - w)
            best = max(best, Fraction(p) ** (j - int(w)))
    found = max(sup.value, best)
    sb, lb = f.sup_bound(p), f.lip_bound(p)
    if sb is not None and lb is not None:
        exact = found == max(sb, lb)
    else:
        exact = False
    if not exact and sup.exact and best <= sup.value and lb is not None and lb <= sup.value:
        exact = True
    return NormBound(found, exact)
