"""Iwasawa logarithm, exponential, Z_p-powers, p-power roots and q-brackets."""

from __future__ import annotations

import math
from fractions import Fraction

from .padic import (
    DEFAULT_DIGITS,
    DomainError,
    PadicNumber,
    PrecisionContext,
    Scalar,
    _rational_valuation,
    from_rational,
)

__all__ = [
    "plog",
    "pexp",
    "ppow",
    "proot",
    "qbracket",
    "geometric_sum",
    "QParameter",
    "closeness",
]


def closeness(x: PadicNumber) -> float:
    """v_p(x - 1)."""
    return (x - 1).valuation


def _one_unit_check(x: PadicNumber, what: str = "x"):
    if x.is_zero() or x.val != 0 or closeness(x) < 1:
        raise DomainError(f"{what} must be a 1-unit: v_p({what}-1) >= 1")


def plog(x: PadicNumber) -> PadicNumber:
    """Iwasawa logarithm ``-sum_{k>=1} (1-x)**k / k`` on 1-units."""
    _one_unit_check(x)
    p = x.p
    A = x.absprec
    y = 1 - x
    if y.is_zero():
        return PadicNumber.zero(p, int(A))
    k0, uy = y.val, y.unit
    M = p ** int(A)
    total = 0
    power = 1
    j = 1
    # v(y**j / j) >= j*k0 - log_p(j), increasing in j
    while j * k0 - math.log(j, p) < A:
        power = (power * uy) % M
        vj, jj = _split_small(j, p)
        w = j * k0 - vj
        if w < A:
            total += p**w * ((power * pow(jj, -1, M)) % M)
        j += 1
    return PadicNumber.from_parts(p, 0, -total, A)


def pexp(t: PadicNumber) -> PadicNumber:
    """``sum t**k / k!`` for v_p(t) >= 1 (p odd)."""
    p = t.p
    A = t.absprec
    if t.is_zero():
        if A == math.inf:
            return from_rational(1, 1, DEFAULT_DIGITS, p=p)
        if A < 1:
            raise DomainError("exp argument must satisfy v_p(t) >= 1")
        return PadicNumber.from_parts(p, 0, 1, A)
    if t.val < 1:
        raise DomainError(f"exp argument must satisfy v_p(t) >= 1, got v_p(t) = {t.val}")
    M = p ** int(A)
    total = 1
    w = 0
    unit = 1
    j = 1
    slope = t.val - Fraction(1, p - 1)
    # v(t**j / j!) >= j*slope + 1/(p-1), increasing in j
    while j * slope + Fraction(1, p - 1) < A:
        vj, jj = _split_small(j, p)
        w += t.val - vj
        unit = (unit * t.unit * pow(jj, -1, M)) % M
        if w < A:
            total += p**w * unit
        j += 1
    return PadicNumber.from_parts(p, 0, total, A)


def _split_small(j: int, p: int) -> tuple[int, int]:
    v = 0
    while j % p == 0:
        j //= p
        v += 1
    return v, j


def ppow(x: PadicNumber, t: Scalar) -> PadicNumber:
    """x**t for a 1-unit x and t in Z_p.

    Integer exponents use exact modular powering, p-adic exponents
    ``exp(t * log x)``; the two agree on integers.
    """
    _one_unit_check(x)
    if isinstance(t, int):
        return x**t
    if isinstance(t, Fraction):
        if t.denominator == 1:
            return x ** int(t)
        if _rational_valuation(t, x.p) < 0:
            raise DomainError("exponent must lie in Z_p")
        t = from_rational(t, 1, x.prec, p=x.p)
    if not t.is_zero() and t.val < 0:
        raise DomainError("exponent must lie in Z_p")
    return pexp(t * plog(x))


def proot(x: PadicNumber, n: int, name: str = "x") -> PadicNumber:
    """The principal p**n-th root ``exp(p**-n * log x)``."""
    if n < 0:
        raise ValueError("root depth must be non-negative")
    _one_unit_check(x, name)
    if n == 0:
        return x
    k = closeness(x)
    if k < n + 1:
        raise DomainError(
            f"root depth n={n} requires v_p({name}−1) ≥ n+1 = {n + 1}, "
            f"have v_p({name}−1) = {k}"
        )
    lg = plog(x)
    return pexp(lg / x.p**n)


def geometric_sum(q: PadicNumber, count: int) -> PadicNumber:
    """``1 + q + ... + q**(count-1)`` for a p-adic unit q, exact to q's precision."""
    p = q.p
    if q.is_zero() or q.val != 0:
        raise DomainError("geometric_sum needs a unit ratio")
    if count < 0:
        raise ValueError("count must be non-negative")
    if count == 0:
        return PadicNumber.zero(p)
    M = p**q.prec
    s = _geom_int(q.unit, count, M)
    return PadicNumber.from_parts(p, 0, s, q.prec)


def _geom_int(u: int, n: int, M: int) -> int:
    # S(2k) = S(k) (1 + u^k), S(k+1) = 1 + u S(k)
    s, power = 0, 1  # S(0), u^0
    for bit in bin(n)[2:]:
        s = (s * (1 + power)) % M
        power = (power * power) % M
        if bit == "1":
            s = (1 + u * s) % M
            power = (power * u) % M
    return s


def qbracket(x: Scalar, q: PadicNumber) -> PadicNumber:
    """``[x]_q = (1 - q**x)/(1 - q)``.

    Integer x is evaluated as the exact geometric sum; p-adic x via ``ppow``.
    """
    if (q - 1).is_zero():
        raise DomainError("[x]_q is undefined at q = 1")
    if isinstance(x, Fraction) and x.denominator == 1:
        x = int(x)
    if isinstance(x, int):
        if x >= 0:
            return geometric_sum(q, x)
        # [-k]_q = -q**-k [k]_q
        return -(q**x) * geometric_sum(q, -x)
    return (1 - ppow(q, x)) / (1 - q)


class QParameter:
    """A 1-unit parameter (q or a weight omega) that can be lifted to any precision.

    Built from a rational, the value is recomputed exactly at whatever
    precision a caller requests; built from a :class:`PadicNumber`, its
    precision is whatever the number carries.
    """

    __slots__ = ("p", "exact", "_value")

    def __init__(self, value: Scalar, p: int | None = None, prec: int = DEFAULT_DIGITS):
        if isinstance(value, PadicNumber):
            self.p = value.p
            self.exact = None
            self._value = value
        else:
            if p is None:
                raise ValueError("prime required for rational parameter")
            self.p = p
            self.exact = Fraction(value)
            self._value = from_rational(self.exact, 1, prec, p=p)
        _one_unit_check(self._value, "q")

    @classmethod
    def from_rational(cls, num, den=1, ctx: PrecisionContext | None = None, *, p=None):
        p = ctx.p if ctx is not None else p
        prec = ctx.digits if ctx is not None else DEFAULT_DIGITS
        return cls(Fraction(num) / den, p, prec)

    @property
    def value(self) -> PadicNumber:
        return self._value

    @property
    def closeness(self) -> float:
        """v_p(q - 1); infinite for the exact rational 1."""
        if self.exact is not None:
            return math.inf if self.exact == 1 else _rational_valuation(self.exact - 1, self.p)
        return closeness(self._value)

    def is_one(self) -> bool:
        if self.exact is not None:
            return self.exact == 1
        return (self._value - 1).is_zero()

    def at(self, prec: int) -> PadicNumber:
        if self.exact is not None:
            return from_rational(self.exact, 1, prec, p=self.p)
        return self._value

    def log(self, prec: int) -> PadicNumber:
        return plog(self.at(prec))

    def root(self, n: int, prec: int, name: str = "q") -> PadicNumber:
        """q**(p**-n) with absolute precision ``prec`` when q is exact."""
        self.require_depth(n, name)
        return proot(self.at(prec + n), n, name)

    def require_depth(self, n: int, name: str = "q"):
        k = self.closeness
        if k < n + 1:
            raise DomainError(
                f"root depth n={n} requires v_p({name}−1) ≥ n+1 = {n + 1}, "
                f"have v_p({name}−1) = {k}"
            )

    def __mul__(self, other: "QParameter") -> "QParameter":
        if self.exact is not None and other.exact is not None:
            return QParameter(self.exact * other.exact, self.p)
        return QParameter(self._value * other._value)

    def inverse(self) -> "QParameter":
        if self.exact is not None:
            return QParameter(1 / self.exact, self.p)
        return QParameter(self._value.invert())

    def __truediv__(self, other: "QParameter") -> "QParameter":
        return self * other.inverse()

    def __repr__(self):
        src = self.exact if self.exact is not None else self._value
        return f"QParameter({src}, p={self.p})"
