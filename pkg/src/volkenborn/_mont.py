"""Unrolled CIOS Montgomery products and per-limb-count kernels, 1..8 limbs.

Generated by tools/gen_kernels.py; do not edit by hand.  Each
``montmul_L(A, ia, B, ib, O, io, n, n0inv)`` writes
``A[ia] * B[ib] * 2**(-32L) mod n`` into ``O[io]``; the accumulator lives in
scalar locals so LLVM keeps it in registers.  The kernels that multiply are
stamped out once per ``L`` and call ``montmul_L`` as a global: passing the
product in as an argument would defeat numba's on-disk cache.
"""

import numpy as np
from numba import njit

from ._limbs import BASE, MASK, ONE, SHIFT, ZERO, _modadd


@njit(cache=True, inline="always")
def montmul_1(A, ia, B, ib, O, io, n, n0inv):
    t0 = ZERO
    t1 = ZERO
    t2 = ZERO
    bi = B[ib, 0]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + C
    t1 = s & MASK
    t2 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + C
    t0 = s & MASK
    C = s >> SHIFT
    t1 = t2 + C
    if t1 != ZERO:
        ge = True
    elif t0 != n[0]:
        ge = t0 > n[0]
    else:
        ge = True
    if ge:
        borrow = ZERO
        nj = n[0] + borrow
        if t0 >= nj:
            O[io, 0] = t0 - nj
            borrow = ZERO
        else:
            O[io, 0] = t0 + BASE - nj
            borrow = ONE
    else:
        O[io, 0] = t0


@njit(cache=True)
def vec_mul_1(A, B, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_1(A, k, B, k, out, k, n, n0inv)
    return out


@njit(cache=True)
def vec_scale_1(A, c, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_1(A, k, c, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def powers_1(base, first, count, n, n0inv):
    L = n.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    if count == 0:
        return out
    for j in range(L):
        out[0, j] = first[0, j]
    for k in range(1, count):
        montmul_1(out, k - 1, base, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def horner_1(coeffs, X, n, n0inv):
    count, L = X.shape
    d = coeffs.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        for j in range(L):
            out[k, j] = coeffs[d - 1, j]
        for i in range(d - 2, -1, -1):
            montmul_1(out, k, X, k, out, k, n, n0inv)
            _modadd(out, k, coeffs, i, out, k, n)
    return out


@njit(cache=True)
def dot_1(A, B, n, n0inv):
    count, L = A.shape
    acc = np.zeros((1, L), dtype=np.uint64)
    prod = np.empty((1, L), dtype=np.uint64)
    for k in range(count):
        montmul_1(A, k, B, k, prod, 0, n, n0inv)
        _modadd(acc, 0, prod, 0, acc, 0, n)
    return acc


@njit(cache=True, inline="always")
def montmul_2(A, ia, B, ib, O, io, n, n0inv):
    t0 = ZERO
    t1 = ZERO
    t2 = ZERO
    t3 = ZERO
    bi = B[ib, 0]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + C
    t2 = s & MASK
    t3 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + C
    t1 = s & MASK
    C = s >> SHIFT
    t2 = t3 + C
    bi = B[ib, 1]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + C
    t2 = s & MASK
    t3 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + C
    t1 = s & MASK
    C = s >> SHIFT
    t2 = t3 + C
    if t2 != ZERO:
        ge = True
    elif t1 != n[1]:
        ge = t1 > n[1]
    elif t0 != n[0]:
        ge = t0 > n[0]
    else:
        ge = True
    if ge:
        borrow = ZERO
        nj = n[0] + borrow
        if t0 >= nj:
            O[io, 0] = t0 - nj
            borrow = ZERO
        else:
            O[io, 0] = t0 + BASE - nj
            borrow = ONE
        nj = n[1] + borrow
        if t1 >= nj:
            O[io, 1] = t1 - nj
            borrow = ZERO
        else:
            O[io, 1] = t1 + BASE - nj
            borrow = ONE
    else:
        O[io, 0] = t0
        O[io, 1] = t1


@njit(cache=True)
def vec_mul_2(A, B, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_2(A, k, B, k, out, k, n, n0inv)
    return out


@njit(cache=True)
def vec_scale_2(A, c, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_2(A, k, c, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def powers_2(base, first, count, n, n0inv):
    L = n.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    if count == 0:
        return out
    for j in range(L):
        out[0, j] = first[0, j]
    for k in range(1, count):
        montmul_2(out, k - 1, base, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def horner_2(coeffs, X, n, n0inv):
    count, L = X.shape
    d = coeffs.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        for j in range(L):
            out[k, j] = coeffs[d - 1, j]
        for i in range(d - 2, -1, -1):
            montmul_2(out, k, X, k, out, k, n, n0inv)
            _modadd(out, k, coeffs, i, out, k, n)
    return out


@njit(cache=True)
def dot_2(A, B, n, n0inv):
    count, L = A.shape
    acc = np.zeros((1, L), dtype=np.uint64)
    prod = np.empty((1, L), dtype=np.uint64)
    for k in range(count):
        montmul_2(A, k, B, k, prod, 0, n, n0inv)
        _modadd(acc, 0, prod, 0, acc, 0, n)
    return acc


@njit(cache=True, inline="always")
def montmul_3(A, ia, B, ib, O, io, n, n0inv):
    t0 = ZERO
    t1 = ZERO
    t2 = ZERO
    t3 = ZERO
    t4 = ZERO
    bi = B[ib, 0]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + C
    t3 = s & MASK
    t4 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + C
    t2 = s & MASK
    C = s >> SHIFT
    t3 = t4 + C
    bi = B[ib, 1]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + C
    t3 = s & MASK
    t4 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + C
    t2 = s & MASK
    C = s >> SHIFT
    t3 = t4 + C
    bi = B[ib, 2]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + C
    t3 = s & MASK
    t4 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + C
    t2 = s & MASK
    C = s >> SHIFT
    t3 = t4 + C
    if t3 != ZERO:
        ge = True
    elif t2 != n[2]:
        ge = t2 > n[2]
    elif t1 != n[1]:
        ge = t1 > n[1]
    elif t0 != n[0]:
        ge = t0 > n[0]
    else:
        ge = True
    if ge:
        borrow = ZERO
        nj = n[0] + borrow
        if t0 >= nj:
            O[io, 0] = t0 - nj
            borrow = ZERO
        else:
            O[io, 0] = t0 + BASE - nj
            borrow = ONE
        nj = n[1] + borrow
        if t1 >= nj:
            O[io, 1] = t1 - nj
            borrow = ZERO
        else:
            O[io, 1] = t1 + BASE - nj
            borrow = ONE
        nj = n[2] + borrow
        if t2 >= nj:
            O[io, 2] = t2 - nj
            borrow = ZERO
        else:
            O[io, 2] = t2 + BASE - nj
            borrow = ONE
    else:
        O[io, 0] = t0
        O[io, 1] = t1
        O[io, 2] = t2


@njit(cache=True)
def vec_mul_3(A, B, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_3(A, k, B, k, out, k, n, n0inv)
    return out


@njit(cache=True)
def vec_scale_3(A, c, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_3(A, k, c, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def powers_3(base, first, count, n, n0inv):
    L = n.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    if count == 0:
        return out
    for j in range(L):
        out[0, j] = first[0, j]
    for k in range(1, count):
        montmul_3(out, k - 1, base, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def horner_3(coeffs, X, n, n0inv):
    count, L = X.shape
    d = coeffs.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        for j in range(L):
            out[k, j] = coeffs[d - 1, j]
        for i in range(d - 2, -1, -1):
            montmul_3(out, k, X, k, out, k, n, n0inv)
            _modadd(out, k, coeffs, i, out, k, n)
    return out


@njit(cache=True)
def dot_3(A, B, n, n0inv):
    count, L = A.shape
    acc = np.zeros((1, L), dtype=np.uint64)
    prod = np.empty((1, L), dtype=np.uint64)
    for k in range(count):
        montmul_3(A, k, B, k, prod, 0, n, n0inv)
        _modadd(acc, 0, prod, 0, acc, 0, n)
    return acc


@njit(cache=True, inline="always")
def montmul_4(A, ia, B, ib, O, io, n, n0inv):
    t0 = ZERO
    t1 = ZERO
    t2 = ZERO
    t3 = ZERO
    t4 = ZERO
    t5 = ZERO
    bi = B[ib, 0]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + C
    t4 = s & MASK
    t5 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + C
    t3 = s & MASK
    C = s >> SHIFT
    t4 = t5 + C
    bi = B[ib, 1]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + C
    t4 = s & MASK
    t5 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + C
    t3 = s & MASK
    C = s >> SHIFT
    t4 = t5 + C
    bi = B[ib, 2]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + C
    t4 = s & MASK
    t5 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + C
    t3 = s & MASK
    C = s >> SHIFT
    t4 = t5 + C
    bi = B[ib, 3]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + C
    t4 = s & MASK
    t5 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + C
    t3 = s & MASK
    C = s >> SHIFT
    t4 = t5 + C
    if t4 != ZERO:
        ge = True
    elif t3 != n[3]:
        ge = t3 > n[3]
    elif t2 != n[2]:
        ge = t2 > n[2]
    elif t1 != n[1]:
        ge = t1 > n[1]
    elif t0 != n[0]:
        ge = t0 > n[0]
    else:
        ge = True
    if ge:
        borrow = ZERO
        nj = n[0] + borrow
        if t0 >= nj:
            O[io, 0] = t0 - nj
            borrow = ZERO
        else:
            O[io, 0] = t0 + BASE - nj
            borrow = ONE
        nj = n[1] + borrow
        if t1 >= nj:
            O[io, 1] = t1 - nj
            borrow = ZERO
        else:
            O[io, 1] = t1 + BASE - nj
            borrow = ONE
        nj = n[2] + borrow
        if t2 >= nj:
            O[io, 2] = t2 - nj
            borrow = ZERO
        else:
            O[io, 2] = t2 + BASE - nj
            borrow = ONE
        nj = n[3] + borrow
        if t3 >= nj:
            O[io, 3] = t3 - nj
            borrow = ZERO
        else:
            O[io, 3] = t3 + BASE - nj
            borrow = ONE
    else:
        O[io, 0] = t0
        O[io, 1] = t1
        O[io, 2] = t2
        O[io, 3] = t3


@njit(cache=True)
def vec_mul_4(A, B, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_4(A, k, B, k, out, k, n, n0inv)
    return out


@njit(cache=True)
def vec_scale_4(A, c, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_4(A, k, c, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def powers_4(base, first, count, n, n0inv):
    L = n.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    if count == 0:
        return out
    for j in range(L):
        out[0, j] = first[0, j]
    for k in range(1, count):
        montmul_4(out, k - 1, base, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def horner_4(coeffs, X, n, n0inv):
    count, L = X.shape
    d = coeffs.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        for j in range(L):
            out[k, j] = coeffs[d - 1, j]
        for i in range(d - 2, -1, -1):
            montmul_4(out, k, X, k, out, k, n, n0inv)
            _modadd(out, k, coeffs, i, out, k, n)
    return out


@njit(cache=True)
def dot_4(A, B, n, n0inv):
    count, L = A.shape
    acc = np.zeros((1, L), dtype=np.uint64)
    prod = np.empty((1, L), dtype=np.uint64)
    for k in range(count):
        montmul_4(A, k, B, k, prod, 0, n, n0inv)
        _modadd(acc, 0, prod, 0, acc, 0, n)
    return acc


@njit(cache=True, inline="always")
def montmul_5(A, ia, B, ib, O, io, n, n0inv):
    t0 = ZERO
    t1 = ZERO
    t2 = ZERO
    t3 = ZERO
    t4 = ZERO
    t5 = ZERO
    t6 = ZERO
    bi = B[ib, 0]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + C
    t5 = s & MASK
    t6 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + C
    t4 = s & MASK
    C = s >> SHIFT
    t5 = t6 + C
    bi = B[ib, 1]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + C
    t5 = s & MASK
    t6 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + C
    t4 = s & MASK
    C = s >> SHIFT
    t5 = t6 + C
    bi = B[ib, 2]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + C
    t5 = s & MASK
    t6 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + C
    t4 = s & MASK
    C = s >> SHIFT
    t5 = t6 + C
    bi = B[ib, 3]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + C
    t5 = s & MASK
    t6 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + C
    t4 = s & MASK
    C = s >> SHIFT
    t5 = t6 + C
    bi = B[ib, 4]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + C
    t5 = s & MASK
    t6 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + C
    t4 = s & MASK
    C = s >> SHIFT
    t5 = t6 + C
    if t5 != ZERO:
        ge = True
    elif t4 != n[4]:
        ge = t4 > n[4]
    elif t3 != n[3]:
        ge = t3 > n[3]
    elif t2 != n[2]:
        ge = t2 > n[2]
    elif t1 != n[1]:
        ge = t1 > n[1]
    elif t0 != n[0]:
        ge = t0 > n[0]
    else:
        ge = True
    if ge:
        borrow = ZERO
        nj = n[0] + borrow
        if t0 >= nj:
            O[io, 0] = t0 - nj
            borrow = ZERO
        else:
            O[io, 0] = t0 + BASE - nj
            borrow = ONE
        nj = n[1] + borrow
        if t1 >= nj:
            O[io, 1] = t1 - nj
            borrow = ZERO
        else:
            O[io, 1] = t1 + BASE - nj
            borrow = ONE
        nj = n[2] + borrow
        if t2 >= nj:
            O[io, 2] = t2 - nj
            borrow = ZERO
        else:
            O[io, 2] = t2 + BASE - nj
            borrow = ONE
        nj = n[3] + borrow
        if t3 >= nj:
            O[io, 3] = t3 - nj
            borrow = ZERO
        else:
            O[io, 3] = t3 + BASE - nj
            borrow = ONE
        nj = n[4] + borrow
        if t4 >= nj:
            O[io, 4] = t4 - nj
            borrow = ZERO
        else:
            O[io, 4] = t4 + BASE - nj
            borrow = ONE
    else:
        O[io, 0] = t0
        O[io, 1] = t1
        O[io, 2] = t2
        O[io, 3] = t3
        O[io, 4] = t4


@njit(cache=True)
def vec_mul_5(A, B, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_5(A, k, B, k, out, k, n, n0inv)
    return out


@njit(cache=True)
def vec_scale_5(A, c, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_5(A, k, c, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def powers_5(base, first, count, n, n0inv):
    L = n.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    if count == 0:
        return out
    for j in range(L):
        out[0, j] = first[0, j]
    for k in range(1, count):
        montmul_5(out, k - 1, base, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def horner_5(coeffs, X, n, n0inv):
    count, L = X.shape
    d = coeffs.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        for j in range(L):
            out[k, j] = coeffs[d - 1, j]
        for i in range(d - 2, -1, -1):
            montmul_5(out, k, X, k, out, k, n, n0inv)
            _modadd(out, k, coeffs, i, out, k, n)
    return out


@njit(cache=True)
def dot_5(A, B, n, n0inv):
    count, L = A.shape
    acc = np.zeros((1, L), dtype=np.uint64)
    prod = np.empty((1, L), dtype=np.uint64)
    for k in range(count):
        montmul_5(A, k, B, k, prod, 0, n, n0inv)
        _modadd(acc, 0, prod, 0, acc, 0, n)
    return acc


@njit(cache=True, inline="always")
def montmul_6(A, ia, B, ib, O, io, n, n0inv):
    t0 = ZERO
    t1 = ZERO
    t2 = ZERO
    t3 = ZERO
    t4 = ZERO
    t5 = ZERO
    t6 = ZERO
    t7 = ZERO
    bi = B[ib, 0]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + C
    t6 = s & MASK
    t7 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + C
    t5 = s & MASK
    C = s >> SHIFT
    t6 = t7 + C
    bi = B[ib, 1]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + C
    t6 = s & MASK
    t7 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + C
    t5 = s & MASK
    C = s >> SHIFT
    t6 = t7 + C
    bi = B[ib, 2]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + C
    t6 = s & MASK
    t7 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + C
    t5 = s & MASK
    C = s >> SHIFT
    t6 = t7 + C
    bi = B[ib, 3]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + C
    t6 = s & MASK
    t7 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + C
    t5 = s & MASK
    C = s >> SHIFT
    t6 = t7 + C
    bi = B[ib, 4]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + C
    t6 = s & MASK
    t7 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + C
    t5 = s & MASK
    C = s >> SHIFT
    t6 = t7 + C
    bi = B[ib, 5]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + C
    t6 = s & MASK
    t7 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + C
    t5 = s & MASK
    C = s >> SHIFT
    t6 = t7 + C
    if t6 != ZERO:
        ge = True
    elif t5 != n[5]:
        ge = t5 > n[5]
    elif t4 != n[4]:
        ge = t4 > n[4]
    elif t3 != n[3]:
        ge = t3 > n[3]
    elif t2 != n[2]:
        ge = t2 > n[2]
    elif t1 != n[1]:
        ge = t1 > n[1]
    elif t0 != n[0]:
        ge = t0 > n[0]
    else:
        ge = True
    if ge:
        borrow = ZERO
        nj = n[0] + borrow
        if t0 >= nj:
            O[io, 0] = t0 - nj
            borrow = ZERO
        else:
            O[io, 0] = t0 + BASE - nj
            borrow = ONE
        nj = n[1] + borrow
        if t1 >= nj:
            O[io, 1] = t1 - nj
            borrow = ZERO
        else:
            O[io, 1] = t1 + BASE - nj
            borrow = ONE
        nj = n[2] + borrow
        if t2 >= nj:
            O[io, 2] = t2 - nj
            borrow = ZERO
        else:
            O[io, 2] = t2 + BASE - nj
            borrow = ONE
        nj = n[3] + borrow
        if t3 >= nj:
            O[io, 3] = t3 - nj
            borrow = ZERO
        else:
            O[io, 3] = t3 + BASE - nj
            borrow = ONE
        nj = n[4] + borrow
        if t4 >= nj:
            O[io, 4] = t4 - nj
            borrow = ZERO
        else:
            O[io, 4] = t4 + BASE - nj
            borrow = ONE
        nj = n[5] + borrow
        if t5 >= nj:
            O[io, 5] = t5 - nj
            borrow = ZERO
        else:
            O[io, 5] = t5 + BASE - nj
            borrow = ONE
    else:
        O[io, 0] = t0
        O[io, 1] = t1
        O[io, 2] = t2
        O[io, 3] = t3
        O[io, 4] = t4
        O[io, 5] = t5


@njit(cache=True)
def vec_mul_6(A, B, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_6(A, k, B, k, out, k, n, n0inv)
    return out


@njit(cache=True)
def vec_scale_6(A, c, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_6(A, k, c, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def powers_6(base, first, count, n, n0inv):
    L = n.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    if count == 0:
        return out
    for j in range(L):
        out[0, j] = first[0, j]
    for k in range(1, count):
        montmul_6(out, k - 1, base, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def horner_6(coeffs, X, n, n0inv):
    count, L = X.shape
    d = coeffs.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        for j in range(L):
            out[k, j] = coeffs[d - 1, j]
        for i in range(d - 2, -1, -1):
            montmul_6(out, k, X, k, out, k, n, n0inv)
            _modadd(out, k, coeffs, i, out, k, n)
    return out


@njit(cache=True)
def dot_6(A, B, n, n0inv):
    count, L = A.shape
    acc = np.zeros((1, L), dtype=np.uint64)
    prod = np.empty((1, L), dtype=np.uint64)
    for k in range(count):
        montmul_6(A, k, B, k, prod, 0, n, n0inv)
        _modadd(acc, 0, prod, 0, acc, 0, n)
    return acc


@njit(cache=True, inline="always")
def montmul_7(A, ia, B, ib, O, io, n, n0inv):
    t0 = ZERO
    t1 = ZERO
    t2 = ZERO
    t3 = ZERO
    t4 = ZERO
    t5 = ZERO
    t6 = ZERO
    t7 = ZERO
    t8 = ZERO
    bi = B[ib, 0]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t7 = s & MASK
    t8 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t6 = s & MASK
    C = s >> SHIFT
    t7 = t8 + C
    bi = B[ib, 1]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t7 = s & MASK
    t8 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t6 = s & MASK
    C = s >> SHIFT
    t7 = t8 + C
    bi = B[ib, 2]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t7 = s & MASK
    t8 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t6 = s & MASK
    C = s >> SHIFT
    t7 = t8 + C
    bi = B[ib, 3]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t7 = s & MASK
    t8 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t6 = s & MASK
    C = s >> SHIFT
    t7 = t8 + C
    bi = B[ib, 4]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t7 = s & MASK
    t8 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t6 = s & MASK
    C = s >> SHIFT
    t7 = t8 + C
    bi = B[ib, 5]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t7 = s & MASK
    t8 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t6 = s & MASK
    C = s >> SHIFT
    t7 = t8 + C
    bi = B[ib, 6]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t7 = s & MASK
    t8 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + C
    t6 = s & MASK
    C = s >> SHIFT
    t7 = t8 + C
    if t7 != ZERO:
        ge = True
    elif t6 != n[6]:
        ge = t6 > n[6]
    elif t5 != n[5]:
        ge = t5 > n[5]
    elif t4 != n[4]:
        ge = t4 > n[4]
    elif t3 != n[3]:
        ge = t3 > n[3]
    elif t2 != n[2]:
        ge = t2 > n[2]
    elif t1 != n[1]:
        ge = t1 > n[1]
    elif t0 != n[0]:
        ge = t0 > n[0]
    else:
        ge = True
    if ge:
        borrow = ZERO
        nj = n[0] + borrow
        if t0 >= nj:
            O[io, 0] = t0 - nj
            borrow = ZERO
        else:
            O[io, 0] = t0 + BASE - nj
            borrow = ONE
        nj = n[1] + borrow
        if t1 >= nj:
            O[io, 1] = t1 - nj
            borrow = ZERO
        else:
            O[io, 1] = t1 + BASE - nj
            borrow = ONE
        nj = n[2] + borrow
        if t2 >= nj:
            O[io, 2] = t2 - nj
            borrow = ZERO
        else:
            O[io, 2] = t2 + BASE - nj
            borrow = ONE
        nj = n[3] + borrow
        if t3 >= nj:
            O[io, 3] = t3 - nj
            borrow = ZERO
        else:
            O[io, 3] = t3 + BASE - nj
            borrow = ONE
        nj = n[4] + borrow
        if t4 >= nj:
            O[io, 4] = t4 - nj
            borrow = ZERO
        else:
            O[io, 4] = t4 + BASE - nj
            borrow = ONE
        nj = n[5] + borrow
        if t5 >= nj:
            O[io, 5] = t5 - nj
            borrow = ZERO
        else:
            O[io, 5] = t5 + BASE - nj
            borrow = ONE
        nj = n[6] + borrow
        if t6 >= nj:
            O[io, 6] = t6 - nj
            borrow = ZERO
        else:
            O[io, 6] = t6 + BASE - nj
            borrow = ONE
    else:
        O[io, 0] = t0
        O[io, 1] = t1
        O[io, 2] = t2
        O[io, 3] = t3
        O[io, 4] = t4
        O[io, 5] = t5
        O[io, 6] = t6


@njit(cache=True)
def vec_mul_7(A, B, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_7(A, k, B, k, out, k, n, n0inv)
    return out


@njit(cache=True)
def vec_scale_7(A, c, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_7(A, k, c, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def powers_7(base, first, count, n, n0inv):
    L = n.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    if count == 0:
        return out
    for j in range(L):
        out[0, j] = first[0, j]
    for k in range(1, count):
        montmul_7(out, k - 1, base, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def horner_7(coeffs, X, n, n0inv):
    count, L = X.shape
    d = coeffs.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        for j in range(L):
            out[k, j] = coeffs[d - 1, j]
        for i in range(d - 2, -1, -1):
            montmul_7(out, k, X, k, out, k, n, n0inv)
            _modadd(out, k, coeffs, i, out, k, n)
    return out


@njit(cache=True)
def dot_7(A, B, n, n0inv):
    count, L = A.shape
    acc = np.zeros((1, L), dtype=np.uint64)
    prod = np.empty((1, L), dtype=np.uint64)
    for k in range(count):
        montmul_7(A, k, B, k, prod, 0, n, n0inv)
        _modadd(acc, 0, prod, 0, acc, 0, n)
    return acc


@njit(cache=True, inline="always")
def montmul_8(A, ia, B, ib, O, io, n, n0inv):
    t0 = ZERO
    t1 = ZERO
    t2 = ZERO
    t3 = ZERO
    t4 = ZERO
    t5 = ZERO
    t6 = ZERO
    t7 = ZERO
    t8 = ZERO
    t9 = ZERO
    bi = B[ib, 0]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + A[ia, 7] * bi + C
    t7 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t8 = s & MASK
    t9 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + m * n[7] + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t7 = s & MASK
    C = s >> SHIFT
    t8 = t9 + C
    bi = B[ib, 1]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + A[ia, 7] * bi + C
    t7 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t8 = s & MASK
    t9 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + m * n[7] + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t7 = s & MASK
    C = s >> SHIFT
    t8 = t9 + C
    bi = B[ib, 2]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + A[ia, 7] * bi + C
    t7 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t8 = s & MASK
    t9 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + m * n[7] + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t7 = s & MASK
    C = s >> SHIFT
    t8 = t9 + C
    bi = B[ib, 3]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + A[ia, 7] * bi + C
    t7 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t8 = s & MASK
    t9 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + m * n[7] + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t7 = s & MASK
    C = s >> SHIFT
    t8 = t9 + C
    bi = B[ib, 4]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + A[ia, 7] * bi + C
    t7 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t8 = s & MASK
    t9 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + m * n[7] + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t7 = s & MASK
    C = s >> SHIFT
    t8 = t9 + C
    bi = B[ib, 5]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + A[ia, 7] * bi + C
    t7 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t8 = s & MASK
    t9 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + m * n[7] + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t7 = s & MASK
    C = s >> SHIFT
    t8 = t9 + C
    bi = B[ib, 6]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + A[ia, 7] * bi + C
    t7 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t8 = s & MASK
    t9 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + m * n[7] + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t7 = s & MASK
    C = s >> SHIFT
    t8 = t9 + C
    bi = B[ib, 7]
    C = ZERO
    s = t0 + A[ia, 0] * bi + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t1 + A[ia, 1] * bi + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t2 + A[ia, 2] * bi + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t3 + A[ia, 3] * bi + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t4 + A[ia, 4] * bi + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t5 + A[ia, 5] * bi + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t6 + A[ia, 6] * bi + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t7 + A[ia, 7] * bi + C
    t7 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t8 = s & MASK
    t9 = s >> SHIFT
    m = (t0 * n0inv) & MASK
    s = t0 + m * n[0]
    C = s >> SHIFT
    s = t1 + m * n[1] + C
    t0 = s & MASK
    C = s >> SHIFT
    s = t2 + m * n[2] + C
    t1 = s & MASK
    C = s >> SHIFT
    s = t3 + m * n[3] + C
    t2 = s & MASK
    C = s >> SHIFT
    s = t4 + m * n[4] + C
    t3 = s & MASK
    C = s >> SHIFT
    s = t5 + m * n[5] + C
    t4 = s & MASK
    C = s >> SHIFT
    s = t6 + m * n[6] + C
    t5 = s & MASK
    C = s >> SHIFT
    s = t7 + m * n[7] + C
    t6 = s & MASK
    C = s >> SHIFT
    s = t8 + C
    t7 = s & MASK
    C = s >> SHIFT
    t8 = t9 + C
    if t8 != ZERO:
        ge = True
    elif t7 != n[7]:
        ge = t7 > n[7]
    elif t6 != n[6]:
        ge = t6 > n[6]
    elif t5 != n[5]:
        ge = t5 > n[5]
    elif t4 != n[4]:
        ge = t4 > n[4]
    elif t3 != n[3]:
        ge = t3 > n[3]
    elif t2 != n[2]:
        ge = t2 > n[2]
    elif t1 != n[1]:
        ge = t1 > n[1]
    elif t0 != n[0]:
        ge = t0 > n[0]
    else:
        ge = True
    if ge:
        borrow = ZERO
        nj = n[0] + borrow
        if t0 >= nj:
            O[io, 0] = t0 - nj
            borrow = ZERO
        else:
            O[io, 0] = t0 + BASE - nj
            borrow = ONE
        nj = n[1] + borrow
        if t1 >= nj:
            O[io, 1] = t1 - nj
            borrow = ZERO
        else:
            O[io, 1] = t1 + BASE - nj
            borrow = ONE
        nj = n[2] + borrow
        if t2 >= nj:
            O[io, 2] = t2 - nj
            borrow = ZERO
        else:
            O[io, 2] = t2 + BASE - nj
            borrow = ONE
        nj = n[3] + borrow
        if t3 >= nj:
            O[io, 3] = t3 - nj
            borrow = ZERO
        else:
            O[io, 3] = t3 + BASE - nj
            borrow = ONE
        nj = n[4] + borrow
        if t4 >= nj:
            O[io, 4] = t4 - nj
            borrow = ZERO
        else:
            O[io, 4] = t4 + BASE - nj
            borrow = ONE
        nj = n[5] + borrow
        if t5 >= nj:
            O[io, 5] = t5 - nj
            borrow = ZERO
        else:
            O[io, 5] = t5 + BASE - nj
            borrow = ONE
        nj = n[6] + borrow
        if t6 >= nj:
            O[io, 6] = t6 - nj
            borrow = ZERO
        else:
            O[io, 6] = t6 + BASE - nj
            borrow = ONE
        nj = n[7] + borrow
        if t7 >= nj:
            O[io, 7] = t7 - nj
            borrow = ZERO
        else:
            O[io, 7] = t7 + BASE - nj
            borrow = ONE
    else:
        O[io, 0] = t0
        O[io, 1] = t1
        O[io, 2] = t2
        O[io, 3] = t3
        O[io, 4] = t4
        O[io, 5] = t5
        O[io, 6] = t6
        O[io, 7] = t7


@njit(cache=True)
def vec_mul_8(A, B, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_8(A, k, B, k, out, k, n, n0inv)
    return out


@njit(cache=True)
def vec_scale_8(A, c, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_8(A, k, c, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def powers_8(base, first, count, n, n0inv):
    L = n.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    if count == 0:
        return out
    for j in range(L):
        out[0, j] = first[0, j]
    for k in range(1, count):
        montmul_8(out, k - 1, base, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def horner_8(coeffs, X, n, n0inv):
    count, L = X.shape
    d = coeffs.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        for j in range(L):
            out[k, j] = coeffs[d - 1, j]
        for i in range(d - 2, -1, -1):
            montmul_8(out, k, X, k, out, k, n, n0inv)
            _modadd(out, k, coeffs, i, out, k, n)
    return out


@njit(cache=True)
def dot_8(A, B, n, n0inv):
    count, L = A.shape
    acc = np.zeros((1, L), dtype=np.uint64)
    prod = np.empty((1, L), dtype=np.uint64)
    for k in range(count):
        montmul_8(A, k, B, k, prod, 0, n, n0inv)
        _modadd(acc, 0, prod, 0, acc, 0, n)
    return acc


KERNELS = {
    1: {"vec_mul": vec_mul_1, "vec_scale": vec_scale_1, "powers": powers_1, "horner": horner_1, "dot": dot_1},
    2: {"vec_mul": vec_mul_2, "vec_scale": vec_scale_2, "powers": powers_2, "horner": horner_2, "dot": dot_2},
    3: {"vec_mul": vec_mul_3, "vec_scale": vec_scale_3, "powers": powers_3, "horner": horner_3, "dot": dot_3},
    4: {"vec_mul": vec_mul_4, "vec_scale": vec_scale_4, "powers": powers_4, "horner": horner_4, "dot": dot_4},
    5: {"vec_mul": vec_mul_5, "vec_scale": vec_scale_5, "powers": powers_5, "horner": horner_5, "dot": dot_5},
    6: {"vec_mul": vec_mul_6, "vec_scale": vec_scale_6, "powers": powers_6, "horner": horner_6, "dot": dot_6},
    7: {"vec_mul": vec_mul_7, "vec_scale": vec_scale_7, "powers": powers_7, "horner": horner_7, "dot": dot_7},
    8: {"vec_mul": vec_mul_8, "vec_scale": vec_scale_8, "powers": powers_8, "horner": horner_8, "dot": dot_8},
}
MAX_LIMBS = 8
