"""Compiled residue kernels: multi-limb Montgomery arithmetic modulo p**K.

Residues are rows of ``L`` 32-bit limbs held in ``uint64`` (least significant
first), always in Montgomery form ``x * 2**(32L) mod M``.  Kernels that need
a product live in :mod:`._mont`, one copy per limb count, looked up through
``KERNELS[L]``; the additive ones below work for every ``L``.
"""

import numpy as np
from numba import njit

from ._limbs import _modadd, _modsub
from ._mont import KERNELS, MAX_LIMBS

__all__ = ["KERNELS", "MAX_LIMBS", "vec_add", "vec_sub", "arange", "total"]


@njit(cache=True)
def vec_add(A, B, n):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        _modadd(A, k, B, k, out, k, n)
    return out


@njit(cache=True)
def vec_sub(A, B, n):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        _modsub(A, k, B, k, out, k, n)
    return out


@njit(cache=True)
def arange(x0, step, count, n):
    """Rows x0 + k*step (Montgomery form is additive)."""
    L = n.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    if count == 0:
        return out
    for j in range(L):
        out[0, j] = x0[0, j]
    for k in range(1, count):
        _modadd(out, k - 1, step, 0, out, k, n)
    return out


@njit(cache=True)
def total(A, n):
    count, L = A.shape
    acc = np.zeros((1, L), dtype=np.uint64)
    for k in range(count):
        _modadd(acc, 0, A, k, acc, 0, n)
    return acc
