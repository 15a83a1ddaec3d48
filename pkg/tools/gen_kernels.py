"""Write src/volkenborn/_mont.py: unrolled Montgomery products per limb count.

Run from the repository root: ``python tools/gen_kernels.py``.
"""

from pathlib import Path

MAX_LIMBS = 8
TARGET = Path(__file__).resolve().parents[1] / "src" / "volkenborn" / "_mont.py"

HEADER = '''"""Unrolled CIOS Montgomery products and per-limb-count kernels, 1..{max_l} limbs.

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
'''

KERNELS = '''

@njit(cache=True)
def vec_mul_{L}(A, B, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_{L}(A, k, B, k, out, k, n, n0inv)
    return out


@njit(cache=True)
def vec_scale_{L}(A, c, n, n0inv):
    count, L = A.shape
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        montmul_{L}(A, k, c, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def powers_{L}(base, first, count, n, n0inv):
    L = n.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    if count == 0:
        return out
    for j in range(L):
        out[0, j] = first[0, j]
    for k in range(1, count):
        montmul_{L}(out, k - 1, base, 0, out, k, n, n0inv)
    return out


@njit(cache=True)
def horner_{L}(coeffs, X, n, n0inv):
    count, L = X.shape
    d = coeffs.shape[0]
    out = np.empty((count, L), dtype=np.uint64)
    for k in range(count):
        for j in range(L):
            out[k, j] = coeffs[d - 1, j]
        for i in range(d - 2, -1, -1):
            montmul_{L}(out, k, X, k, out, k, n, n0inv)
            _modadd(out, k, coeffs, i, out, k, n)
    return out


@njit(cache=True)
def dot_{L}(A, B, n, n0inv):
    count, L = A.shape
    acc = np.zeros((1, L), dtype=np.uint64)
    prod = np.empty((1, L), dtype=np.uint64)
    for k in range(count):
        montmul_{L}(A, k, B, k, prod, 0, n, n0inv)
        _modadd(acc, 0, prod, 0, acc, 0, n)
    return acc
'''

NAMES = ("vec_mul", "vec_scale", "powers", "horner", "dot")


def montmul_source(L: int) -> str:
    S = []
    for j in range(L + 2):
        S.append(f"t{j} = ZERO")
    for i in range(L):
        S.append(f"bi = B[ib, {i}]")
        S.append("C = ZERO")
        for j in range(L):
            S += [f"s = t{j} + A[ia, {j}] * bi + C", f"t{j} = s & MASK", "C = s >> SHIFT"]
        S += [f"s = t{L} + C", f"t{L} = s & MASK", f"t{L + 1} = s >> SHIFT"]
        S += ["m = (t0 * n0inv) & MASK", "s = t0 + m * n[0]", "C = s >> SHIFT"]
        for j in range(1, L):
            S += [f"s = t{j} + m * n[{j}] + C", f"t{j - 1} = s & MASK", "C = s >> SHIFT"]
        S += [f"s = t{L} + C", f"t{L - 1} = s & MASK", "C = s >> SHIFT", f"t{L} = t{L + 1} + C"]
    # result t < 2n: subtract n once if t >= n
    S.append(f"if t{L} != ZERO:")
    S.append("    ge = True")
    for j in range(L - 1, -1, -1):
        S.append(f"elif t{j} != n[{j}]:")
        S.append(f"    ge = t{j} > n[{j}]")
    S.append("else:")
    S.append("    ge = True")
    S.append("if ge:")
    S.append("    borrow = ZERO")
    for j in range(L):
        S += [
            f"    nj = n[{j}] + borrow",
            f"    if t{j} >= nj:",
            f"        O[io, {j}] = t{j} - nj",
            "        borrow = ZERO",
            "    else:",
            f"        O[io, {j}] = t{j} + BASE - nj",
            "        borrow = ONE",
        ]
    S.append("else:")
    for j in range(L):
        S.append(f"    O[io, {j}] = t{j}")
    body = "\n".join("    " + s for s in S)
    return (
        f"\n\n@njit(cache=True, inline=\"always\")\n"
        f"def montmul_{L}(A, ia, B, ib, O, io, n, n0inv):\n{body}\n"
    )


def main():
    src = HEADER.format(max_l=MAX_LIMBS)
    for L in range(1, MAX_LIMBS + 1):
        src += montmul_source(L)
        src += KERNELS.format(L=L)
    rows = []
    for L in range(1, MAX_LIMBS + 1):
        fields = ", ".join(f'"{name}": {name}_{L}' for name in NAMES)
        rows.append(f"    {L}: {{{fields}}},")
    src += "\n\nKERNELS = {\n" + "\n".join(rows) + "\n}\n"
    src += f"MAX_LIMBS = {MAX_LIMBS}\n"
    TARGET.write_text(src)
    print(f"wrote {TARGET} ({len(src.splitlines())} lines)")


if __name__ == "__main__":
    main()
