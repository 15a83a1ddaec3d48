"""Vectorized residue arithmetic modulo p**K and grids of function values.

Two interchangeable backends implement :class:`ResidueRing`:

* ``numba`` -- multi-limb Montgomery kernels compiled with ``@njit``;
* ``numpy`` -- object-dtype arrays of Python integers.

``VOLKENBORN_JIT=0`` (or a missing numba) selects the numpy path.  Both
give bit-identical residues.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .padic import PadicNumber, PrecisionExhausted

__all__ = ["ResidueRing", "NumpyRing", "NumbaRing", "make_ring", "jit_enabled", "Grid"]


def _env_jit() -> bool:
    flag = os.environ.get("VOLKENBORN_JIT", "1").strip().lower()
    return flag not in ("0", "false", "no", "off")


try:  # pragma: no cover - import guard
    from . import _kernels as _k

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _k = None
    HAVE_NUMBA = False


def jit_enabled() -> bool:
    return HAVE_NUMBA and _env_jit()


class ResidueRing:
    """Z / p**K Z with array operations.  Subclasses fix the array layout."""

    backend = "abstract"

    def __init__(self, p: int, K: int):
        if K < 1:
            raise ValueError("K must be positive")
        self.p = p
        self.K = K
        self.M = p**K

    def __repr__(self):
        return f"{type(self).__name__}(p={self.p}, K={self.K})"


class NumpyRing(ResidueRing):
    backend = "numpy"

    def from_ints(self, vals) -> np.ndarray:
        arr = np.empty(len(vals), dtype=object)
        arr[:] = [int(v) % self.M for v in vals]
        return arr

    def to_ints(self, arr) -> list[int]:
        return [int(v) for v in arr]

    def const(self, c: int, count: int) -> np.ndarray:
        arr = np.empty(count, dtype=object)
        arr[:] = c % self.M
        return arr

    def zeros(self, count: int) -> np.ndarray:
        return self.const(0, count)

    def from_mask(self, mask: np.ndarray) -> np.ndarray:
        arr = np.empty(len(mask), dtype=object)
        arr[:] = [1 if m else 0 for m in mask]
        return arr

    def arange(self, x0: int, step: int, count: int) -> np.ndarray:
        k = np.arange(count, dtype=object)
        return (x0 + step * k) % self.M

    def powers(self, base: int, count: int, first: int = 1) -> np.ndarray:
        """first * base**k for k < count (baby-step/giant-step, vectorized)."""
        M = self.M
        if count == 0:
            return np.empty(0, dtype=object)
        B = max(1, int(count**0.5))
        baby = np.empty(B, dtype=object)
        cur = first % M
        for i in range(B):
            baby[i] = cur
            cur = (cur * base) % M
        big = pow(base, B, M)
        G = -(-count // B)
        giant = np.empty(G, dtype=object)
        cur = 1
        for j in range(G):
            giant[j] = cur
            cur = (cur * big) % M
        out = (giant[:, None] * baby[None, :]) % M
        return out.reshape(-1)[:count]

    def mul(self, a, b):
        return (a * b) % self.M

    def scale(self, a, c: int):
        return (a * (c % self.M)) % self.M

    def add(self, a, b):
        return (a + b) % self.M

    def sub(self, a, b):
        return (a - b) % self.M

    def poly(self, coeffs: list[int], X):
        acc = self.const(coeffs[-1], len(X))
        for c in reversed(coeffs[:-1]):
            acc = (acc * X + c) % self.M
        return acc

    def total(self, a) -> int:
        return int(sum(a.tolist())) % self.M

    def dot(self, a, b) -> int:
        return int(sum((a * b).tolist())) % self.M

    def length(self, a) -> int:
        return len(a)

    def take(self, a, idx):
        return a[idx]


class NumbaRing(ResidueRing):
    backend = "numba"

    def __init__(self, p: int, K: int):
        super().__init__(p, K)
        M = self.M
        self.L = L = (M.bit_length() + 31) // 32
        if L > _k.MAX_LIMBS:
            raise ValueError(f"modulus needs {L} limbs; kernels cover {_k.MAX_LIMBS}")
        self.kern = _k.KERNELS[L]
        self.R = 1 << (32 * L)
        self.Rinv = pow(self.R, -1, M)
        self.n = self._limbs(M)[0]
        self.n0inv = np.uint64((-pow(M, -1, 1 << 32)) % (1 << 32))
        self.one = self._mont_row(1)

    def _limbs(self, x: int) -> np.ndarray:
        return np.array([[(x >> (32 * i)) & 0xFFFFFFFF for i in range(self.L)]], dtype=np.uint64)

    def _mont_row(self, x: int) -> np.ndarray:
        return self._limbs((x % self.M) * self.R % self.M)

    def from_ints(self, vals) -> np.ndarray:
        M, R = self.M, self.R
        obj = np.empty(len(vals), dtype=object)
        obj[:] = [(int(v) % M) * R % M for v in vals]
        out = np.empty((len(vals), self.L), dtype=np.uint64)
        for i in range(self.L):
            out[:, i] = ((obj >> (32 * i)) & 0xFFFFFFFF).astype(np.uint64)
        return out

    def to_ints(self, arr) -> list[int]:
        if len(arr) == 0:
            return []
        acc = np.zeros(len(arr), dtype=object)
        for i in range(self.L):
            acc = acc + (arr[:, i].astype(object) << (32 * i))
        return [int(v) for v in (acc * self.Rinv) % self.M]

    def _row_to_int(self, row) -> int:
        x = 0
        for i in range(self.L):
            x |= int(row[0, i]) << (32 * i)
        return (x * self.Rinv) % self.M

    def const(self, c: int, count: int) -> np.ndarray:
        return np.tile(self._mont_row(c), (count, 1))

    def zeros(self, count: int) -> np.ndarray:
        return np.zeros((count, self.L), dtype=np.uint64)

    def from_mask(self, mask: np.ndarray) -> np.ndarray:
        out = self.zeros(len(mask))
        out[np.asarray(mask, dtype=bool)] = self.one[0]
        return out

    def arange(self, x0: int, step: int, count: int) -> np.ndarray:
        return _k.arange(self._mont_row(x0), self._mont_row(step), count, self.n)

    def powers(self, base: int, count: int, first: int = 1) -> np.ndarray:
        return self.kern["powers"](self._mont_row(base), self._mont_row(first), count, self.n, self.n0inv)

    def mul(self, a, b):
        return self.kern["vec_mul"](a, b, self.n, self.n0inv)

    def scale(self, a, c: int):
        return self.kern["vec_scale"](a, self._mont_row(c), self.n, self.n0inv)

    def add(self, a, b):
        return _k.vec_add(a, b, self.n)

    def sub(self, a, b):
        return _k.vec_sub(a, b, self.n)

    def poly(self, coeffs: list[int], X):
        C = np.concatenate([self._mont_row(c) for c in coeffs])
        return self.kern["horner"](C, X, self.n, self.n0inv)

    def total(self, a) -> int:
        return self._row_to_int(_k.total(a, self.n))

    def dot(self, a, b) -> int:
        return self._row_to_int(self.kern["dot"](a, b, self.n, self.n0inv))

    def length(self, a) -> int:
        return a.shape[0]

    def take(self, a, idx):
        return a[idx]


@lru_cache(maxsize=256)
def _cached_ring(cls, p: int, K: int) -> ResidueRing:
    return cls(p, K)


def make_ring(p: int, K: int, backend: str | None = None) -> ResidueRing:
    """A ring modulo p**K on the requested (default: environment) backend."""
    if backend is None:
        backend = "numba" if jit_enabled() else "numpy"
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable")
        if (p**K).bit_length() > 32 * _k.MAX_LIMBS:
            # beyond the unrolled kernels: exact object arithmetic
            return _cached_ring(NumpyRing, p, K)
        return _cached_ring(NumbaRing, p, K)
    if backend == "numpy":
        return _cached_ring(NumpyRing, p, K)
    raise ValueError(f"unknown backend {backend!r}")


@dataclass(frozen=True)
class Grid:
    """Values ``p**shift * data[k] (mod p**absprec)`` on a grid of points.

    ``shift`` is a common lower bound for the valuations; ``absprec`` never
    exceeds ``shift + ring.K``.
    """

    ring: ResidueRing
    shift: int
    data: object
    absprec: float

    def __post_init__(self):
        cap = self.shift + self.ring.K
        if self.absprec > cap:
            object.__setattr__(self, "absprec", cap)

    def __len__(self):
        return self.ring.length(self.data)

    @classmethod
    def constant(cls, ring: ResidueRing, c: PadicNumber, count: int) -> "Grid":
        if c.is_zero():
            A = c.absprec
            shift = ring.K if A == float("inf") else int(A)
            return cls(ring, shift, ring.zeros(count), A)
        return cls(ring, c.val, ring.const(c.unit, count), c.absprec)

    @classmethod
    def from_padics(cls, ring: ResidueRing, values: list[PadicNumber]) -> "Grid":
        if not values:
            return cls(ring, 0, ring.from_ints([]), float("inf"))
        nonzero = [v.val for v in values if not v.is_zero()]
        shift = min(nonzero) if nonzero else 0
        absprec = min(v.absprec for v in values)
        p = ring.p
        ints = []
        for v in values:
            if v.is_zero():
                ints.append(0)
            else:
                ints.append(v.unit * p ** (v.val - shift))
        return cls(ring, shift, ring.from_ints(ints), absprec)

    def _aligned(self, other: "Grid"):
        ring, p = self.ring, self.ring.p
        s = min(self.shift, other.shift)
        a = self.data if self.shift == s else ring.scale(self.data, p ** (self.shift - s))
        b = other.data if other.shift == s else ring.scale(other.data, p ** (other.shift - s))
        return s, a, b

    def __add__(self, other: "Grid") -> "Grid":
        s, a, b = self._aligned(other)
        return Grid(self.ring, s, self.ring.add(a, b), min(self.absprec, other.absprec))

    def __sub__(self, other: "Grid") -> "Grid":
        s, a, b = self._aligned(other)
        return Grid(self.ring, s, self.ring.sub(a, b), min(self.absprec, other.absprec))

    def __mul__(self, other: "Grid") -> "Grid":
        A = min(self.absprec + other.shift, other.absprec + self.shift)
        return Grid(self.ring, self.shift + other.shift, self.ring.mul(self.data, other.data), A)

    def scale(self, c: PadicNumber) -> "Grid":
        if c.is_zero():
            A = c.absprec + self.shift
            shift = self.shift + self.ring.K if A == float("inf") else int(A)
            return Grid(self.ring, shift, self.ring.zeros(len(self)), A)
        A = min(self.absprec + c.val, c.absprec + self.shift)
        return Grid(self.ring, self.shift + c.val, self.ring.scale(self.data, c.unit), A)

    def total(self) -> PadicNumber:
        return PadicNumber.from_parts(self.ring.p, self.shift, self.ring.total(self.data), self.absprec)

    def dot(self, other: "Grid") -> PadicNumber:
        A = min(self.absprec + other.shift, other.absprec + self.shift)
        s = self.ring.dot(self.data, other.data)
        return PadicNumber.from_parts(self.ring.p, self.shift + other.shift, s, A)

    def values(self) -> list[PadicNumber]:
        p = self.ring.p
        return [PadicNumber.from_parts(p, self.shift, v, self.absprec) for v in self.ring.to_ints(self.data)]

    def valuations(self) -> list[float]:
        """Per-point valuation; zeros report their absolute precision."""
        p, s, A = self.ring.p, self.shift, self.absprec
        out = []
        for v in self.ring.to_ints(self.data):
            rel = A - s
            if rel <= 0:
                out.append(A)
                continue
            v %= p ** int(rel)
            if v == 0:
                out.append(A)
                continue
            k = 0
            while v % p == 0:
                v //= p
                k += 1
            out.append(s + k)
        return out


def require_digits(x: PadicNumber, digits: int, what: str = "value"):
    if x.absprec < digits:
        raise PrecisionExhausted(f"{what} known only to p^{x.absprec}, need p^{digits}")
