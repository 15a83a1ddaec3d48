"""Limb constants and inlined modular add/sub helpers shared by the kernels.

Literals stay ``uint64`` throughout: mixing with ``int64`` makes numba
promote to float.
"""

import numpy as np
from numba import njit

MASK = np.uint64(0xFFFFFFFF)
SHIFT = np.uint64(32)
ZERO = np.uint64(0)
ONE = np.uint64(1)
BASE = np.uint64(1) << np.uint64(32)


@njit(cache=True, inline="always")
def _geq(A, ia, n):
    L = n.shape[0]
    for j in range(L - 1, -1, -1):
        if A[ia, j] != n[j]:
            return A[ia, j] > n[j]
    return True


@njit(cache=True, inline="always")
def _sub_n(A, ia, n):
    L = n.shape[0]
    borrow = ZERO
    for j in range(L):
        nj = n[j] + borrow
        if A[ia, j] >= nj:
            A[ia, j] = A[ia, j] - nj
            borrow = ZERO
        else:
            A[ia, j] = A[ia, j] + BASE - nj
            borrow = ONE


@njit(cache=True, inline="always")
def _modadd(A, ia, B, ib, O, io, n):
    L = n.shape[0]
    carry = ZERO
    for j in range(L):
        s = A[ia, j] + B[ib, j] + carry
        O[io, j] = s & MASK
        carry = s >> SHIFT
    if carry != ZERO or _geq(O, io, n):
        _sub_n(O, io, n)


@njit(cache=True, inline="always")
def _modsub(A, ia, B, ib, O, io, n):
    L = n.shape[0]
    borrow = ZERO
    for j in range(L):
        bj = B[ib, j] + borrow
        if A[ia, j] >= bj:
            O[io, j] = A[ia, j] - bj
            borrow = ZERO
        else:
            O[io, j] = A[ia, j] + BASE - bj
            borrow = ONE
    if borrow != ZERO:
        carry = ZERO
        for j in range(L):
            s = O[io, j] + n[j] + carry
            O[io, j] = s & MASK
            carry = s >> SHIFT
