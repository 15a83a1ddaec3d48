"""Exact arithmetic in Q_p at tracked finite precision.

A nonzero element is stored as ``p**val * unit`` where ``unit`` is a p-adic
unit known modulo ``p**prec`` (the relative precision).  Zeros carry only an
absolute precision: ``val`` is the exponent ``A`` in ``O(p**A)``, or ``None``
for the exact zero.

Addition tracks absolute precision, multiplication and division track
relative precision.  Subtracting two values that agree to all known digits
gives a zero ``O(p**A)`` rather than an error; asking for the unit of such a
zero (inverting it, taking its logarithm's inverse, ...) raises
:class:`PrecisionExhausted`.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "PadicError",
    "DomainError",
    "PrecisionExhausted",
    "DivisionByZero",
    "PrecisionContext",
    "PadicNumber",
    "Scalar",
    "from_rational",
    "residual_exponent",
    "pnorm",
    "valuation_of_int",
    "is_odd_prime",
]

DEFAULT_DIGITS = 32
DEFAULT_ROOT_DEPTH = 4


class PadicError(Exception):
    """Base class for all p-adic arithmetic errors."""


class DomainError(PadicError, ValueError):
    """An argument falls outside the domain of an analytic primitive."""


class PrecisionExhausted(PadicError, ArithmeticError):
    """Cancellation left no known digit where one was required."""


class DivisionByZero(PadicError, ZeroDivisionError):
    pass


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def valuation_of_int(n: int, p: int) -> int:
    """v_p(n) for a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _split(n: int, p: int) -> tuple[int, int]:
    v = valuation_of_int(n, p)
    return v, n // p**v


@dataclass(frozen=True)
class PrecisionContext:
    """Prime, working digit count and the deepest p-power root in use."""

    p: int
    digits: int = DEFAULT_DIGITS
    max_root_depth: int = DEFAULT_ROOT_DEPTH

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.max_root_depth < 0:
            raise ValueError("max_root_depth must be non-negative")
        if self.digits < self.max_root_depth + 4:
            raise ValueError(
                f"digits={self.digits} too small for root depth "
                f"{self.max_root_depth}; need digits >= max_root_depth + 4"
            )

    @property
    def N(self) -> int:
        return self.digits

    @classmethod
    def from_env(cls, p: int, max_root_depth: int = DEFAULT_ROOT_DEPTH) -> "PrecisionContext":
        digits = int(os.environ.get("VOLKENBORN_DIGITS", DEFAULT_DIGITS))
        return cls(p, digits, max_root_depth)

    def with_digits(self, digits: int) -> "PrecisionContext":
        return PrecisionContext(self.p, digits, min(self.max_root_depth, digits - 4))


class PadicNumber:
    """An element of Q_p known to finite precision.  Immutable."""

    __slots__ = ("p", "val", "unit", "prec")

    def __init__(self, p: int, val: int | None, unit: int = 0, prec: int = 0):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("PadicNumber is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, p: int, absprec: int | None = None) -> "PadicNumber":
        """``O(p**absprec)``; ``absprec=None`` is the exact zero."""
        return cls(p, absprec, 0, 0)

    @classmethod
    def from_parts(cls, p: int, val: int, n: int, absprec: float | int) -> "PadicNumber":
        """Normalize ``p**val * n`` known modulo ``p**absprec``."""
        if absprec == math.inf:
            raise ValueError("finite absolute precision required")
        rel = absprec - val
        if rel <= 0:
            return cls(p, int(absprec), 0, 0)
        n %= p**rel
        if n == 0:
            return cls(p, int(absprec), 0, 0)
        k, u = _split(n, p)
        return cls(p, val + k, u, rel - k)

    @classmethod
    def from_digits(cls, p: int, val: int, digits: Iterable[int]) -> "PadicNumber":
        digits = list(digits)
        if any(not 0 <= d < p for d in digits):
            raise ValueError(f"digits must lie in [0, {p})")
        if not digits:
            return cls.zero(p, val)
        if digits[0] == 0:
            raise ValueError("leading digit of a nonzero unit must be nonzero")
        unit = sum(d * p**i for i, d in enumerate(digits))
        return cls(p, val, unit, len(digits))

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.unit == 0

    def is_exact_zero(self) -> bool:
        return self.unit == 0 and self.val is None

    @property
    def absprec(self) -> float:
        if self.unit == 0:
            return math.inf if self.val is None else self.val
        return self.val + self.prec

    @property
    def valuation(self) -> float:
        """v_p(x); for a zero this is the lower bound given by its precision."""
        if self.unit == 0:
            return self.absprec
        return self.val

    @property
    def digits(self) -> list[int]:
        out, u = [], self.unit
        for _ in range(self.prec):
            u, d = divmod(u, self.p)
            out.append(d)
        return out

    def to_fraction(self) -> Fraction:
        """The rational representative ``p**val * unit`` (unit in [0, p**prec))."""
        if self.unit == 0:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.val

    def residue(self, k: int) -> int:
        """``x mod p**k`` as an integer in [0, p**k); requires x in Z_p known to k digits."""
        if self.valuation < 0:
            raise DomainError("residue of a non-integral element")
        if self.absprec < k:
            raise PrecisionExhausted(f"need {k} digits, have {self.absprec}")
        if self.unit == 0 or self.val >= k:
            return 0
        return (self.unit * self.p**self.val) % self.p**k

    def lift_int(self) -> int:
        """Least non-negative integer representative of an element of Z_p."""
        return self.residue(int(self.absprec))

    def add_precision_cap(self, absprec: int) -> "PadicNumber":
        """Forget digits beyond absolute precision ``absprec``."""
        if absprec >= self.absprec:
            return self
        if self.unit == 0:
            return PadicNumber.zero(self.p, absprec)
        return PadicNumber.from_parts(self.p, self.val, self.unit, absprec)

    def identical(self, other: "PadicNumber") -> bool:
        return (self.p, self.val, self.unit, self.prec) == (other.p, other.val, other.unit, other.prec)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "val": self.val, "digits": self.digits, "prec": self.prec}

    @classmethod
    def from_json(cls, obj: dict) -> "PadicNumber":
        p, val, digits, prec = obj["p"], obj["val"], obj["digits"], obj["prec"]
        if len(digits) != prec:
            raise ValueError("digit count disagrees with prec")
        if not digits:
            return cls.zero(p, val)
        return cls.from_digits(p, val, digits)

    def __repr__(self):
        if self.unit == 0:
            return "0" if self.val is None else f"O({self.p}^{self.val})"
        return f"PadicNumber(p={self.p}, val={self.val}, unit={self.unit}, prec={self.prec})"

    def __str__(self):
        if self.unit == 0:
            return repr(self)
        terms = [f"{d}*{self.p}^{self.val + i}" for i, d in enumerate(self.digits) if d]
        return " + ".join(terms) + f" + O({self.p}^{self.absprec})"

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other, relprec: float) -> "PadicNumber":
        if isinstance(other, PadicNumber):
            if other.p != self.p:
                raise ValueError(f"prime mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return PadicNumber.zero(self.p)
            if relprec == math.inf:
                relprec = DEFAULT_DIGITS
            return from_rational(other, 1, max(1, int(relprec)), p=self.p)
        return NotImplemented

    def _coerce_add(self, other):
        if isinstance(other, (int, Fraction)) and other != 0:
            v = _rational_valuation(Fraction(other), self.p)
            return self._coerce(other, self.absprec - v)
        return self._coerce(other, self.prec)

    # -- field operations -------------------------------------------------

    def __neg__(self):
        if self.unit == 0:
            return self
        return PadicNumber(self.p, self.val, (-self.unit) % self.p**self.prec, self.prec)

    def __add__(self, other):
        other = self._coerce_add(other)
        if other is NotImplemented:
            return other
        return _add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_add(other)
        if other is NotImplemented:
            return other
        return _add(self, -other)

    def __rsub__(self, other):
        other = self._coerce_add(other)
        if other is NotImplemented:
            return other
        return _add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other, self.prec or math.inf)
        if other is NotImplemented:
            return other
        return _mul(self, other)

    __rmul__ = __mul__

    def invert(self) -> "PadicNumber":
        if self.unit == 0:
            if self.val is None:
                raise DivisionByZero("inverse of exact zero")
            raise PrecisionExhausted(f"inverse of O({self.p}^{self.val}): no known digit")
        return PadicNumber(self.p, -self.val, pow(self.unit, -1, self.p**self.prec), self.prec)

    def __truediv__(self, other):
        other = self._coerce(other, self.prec or math.inf)
        if other is NotImplemented:
            return other
        return _mul(self, other.invert())

    def __rtruediv__(self, other):
        other = self._coerce(other, self.prec)
        if other is NotImplemented:
            return other
        return _mul(other, self.invert())

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return PadicNumber(self.p, 0, 1, max(self.prec, 1) if self.unit else DEFAULT_DIGITS)
        if self.unit == 0:
            if k < 0:
                return self.invert()
            return self if self.val is None else PadicNumber.zero(self.p, self.val * k)
        M = self.p**self.prec
        return PadicNumber(self.p, self.val * k, pow(self.unit, k, M), self.prec)

    def __eq__(self, other):
        """Equality to the common known precision."""
        try:
            diff = self - other
        except (ValueError, TypeError):
            return NotImplemented
        if diff is NotImplemented:
            return NotImplemented
        return diff.is_zero()

    __hash__ = None


Scalar = Union[int, Fraction, PadicNumber]


def _add(x: PadicNumber, y: PadicNumber) -> PadicNumber:
    p = x.p
    if x.is_exact_zero():
        return y
    if y.is_exact_zero():
        return x
    A = min(x.absprec, y.absprec)
    if x.unit == 0 and y.unit == 0:
        return PadicNumber.zero(p, A)
    vals = [z.val for z in (x, y) if z.unit]
    vmin = min(vals)
    s = 0
    for z in (x, y):
        if z.unit:
            s += z.unit * p ** (z.val - vmin)
    return PadicNumber.from_parts(p, vmin, s, A)


def _mul(x: PadicNumber, y: PadicNumber) -> PadicNumber:
    p = x.p
    if x.is_exact_zero() or y.is_exact_zero():
        return PadicNumber.zero(p)
    if x.unit == 0 or y.unit == 0:
        if x.unit == 0 and y.unit == 0:
            return PadicNumber.zero(p, x.val + y.val)
        z, w = (x, y) if x.unit == 0 else (y, x)
        return PadicNumber.zero(p, z.val + w.val)
    prec = min(x.prec, y.prec)
    return PadicNumber(p, x.val + y.val, (x.unit * y.unit) % p**prec, prec)


def _rational_valuation(r: Fraction, p: int) -> int:
    return valuation_of_int(r.numerator, p) - valuation_of_int(r.denominator, p)


def from_rational(
    numerator: int | Fraction,
    denominator: int = 1,
    ctx: PrecisionContext | int | None = None,
    *,
    p: int | None = None,
) -> PadicNumber:
    """p-adic expansion of ``numerator/denominator`` with ``ctx.digits`` digits.

    ``ctx`` may be a :class:`PrecisionContext` or an explicit relative
    precision (then ``p`` is required).
    """
    if denominator == 0:
        raise DivisionByZero("zero denominator")
    if isinstance(ctx, PrecisionContext):
        p, prec = ctx.p, ctx.digits
    else:
        prec = DEFAULT_DIGITS if ctx is None else ctx
        if p is None:
            raise ValueError("prime required")
    r = Fraction(numerator) / denominator
    if r == 0:
        return PadicNumber.zero(p)
    vn, un = _split(r.numerator, p)
    vd, ud = _split(r.denominator, p)
    M = p**prec
    return PadicNumber(p, vn - vd, (un * pow(ud, -1, M)) % M, prec)


def pnorm(x: Scalar, p: int | None = None) -> Fraction:
    """|x|_p = p**(-v_p(x)); 0 for zero (including zero to known precision)."""
    if isinstance(x, PadicNumber):
        if x.unit == 0:
            return Fraction(0)
        return Fraction(x.p) ** (-x.val)
    if p is None:
        raise ValueError("prime required for rational argument")
    r = Fraction(x)
    if r == 0:
        return Fraction(0)
    return Fraction(p) ** (-_rational_valuation(r, p))


def residual_exponent(x: PadicNumber) -> float:
    """Certified e with |x|_p <= p**e: -v for nonzero x, -absprec for a zero."""
    return -x.valuation
