"""Compare the numba and numpy residue backends.

Times the ring kernels on 10**5 residues and two end-to-end workloads
(a level-8 Riemann sum at p=3 and a level-6 ball integral at p=5), checks
that both backends agree bit for bit, and prints a table.

    python benchmarks/bench_backends.py [--count N] [--repeat R]
"""

import argparse
import os
import random
import time

from volkenborn import ExpWeight, Polynomial, QParameter, riemann_sum, thm1_lhs
from volkenborn.integral import Ball
import volkenborn.ring as ring_mod
from volkenborn.ring import make_ring


def best_of(fn, repeat):
    out, best = None, float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def kernel_cases(p, K, count):
    rng = random.Random(7)
    M = p**K
    xs = [rng.randrange(M) for _ in range(count)]
    ys = [rng.randrange(M) for _ in range(count)]
    coeffs = [rng.randrange(M) for _ in range(5)]
    base = rng.randrange(M)

    def make(backend):
        ring = make_ring(p, K, backend)
        A, B = ring.from_ints(xs), ring.from_ints(ys)
        X = ring.arange(1, 3, count)
        # timed lambdas return raw ring data; decode() compares the results
        ops = {
            "mul": lambda: ring.mul(A, B),
            "powers": lambda: ring.powers(base, count),
            "arange": lambda: ring.arange(5, p, count),
            "poly(deg 4)": lambda: ring.poly(coeffs, X),
            "dot": lambda: ring.dot(A, B),
        }
        decode = lambda r: r if isinstance(r, int) else ring.to_ints(r)  # noqa: E731
        return ops, decode

    return make


def end_to_end():
    q3 = QParameter(1 + 3**2, 3)
    q5, w5 = QParameter(1 + 5**3, 5), QParameter(1 + 2 * 5**3, 5)
    f = ExpWeight(QParameter(1 + 3, 3)) * Polynomial([1, 2, 0, 1])
    g = Polynomial([0, 1, 1])
    return {
        "riemann p=3 m=8": lambda: riemann_sum(f, q3, 8).to_json(),
        "ball integral p=5 m=6": lambda: thm1_lhs(g, w5, q5, Ball(2, 2, 5), 6).to_json(),
    }


def run_pair(name, numba_fn, numpy_fn, repeat, dec_b, dec_n):
    t0 = time.perf_counter()
    numba_fn()  # first call: compile or cache load
    first = time.perf_counter() - t0
    tb, rb = best_of(numba_fn, repeat)
    tn, rn = best_of(numpy_fn, repeat)
    equal = dec_b(rb) == dec_n(rn)
    print(f"{name:24s} {tn * 1e3:10.2f} {tb * 1e3:10.2f} {tn / tb:8.2f}x {first * 1e3:10.1f}   {'yes' if equal else 'NO'}")
    return equal


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"{'case':24s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>9s} {'1st call ms':>11s}  equal")
    ok = True
    for p, K in [(3, 40), (5, 50), (7, 90)]:
        make = kernel_cases(p, K, args.count)
        (nb, dec_b), (np_, dec_n) = make("numba"), make("numpy")
        for k in nb:
            ok &= run_pair(f"{k} p={p} K={K}", nb[k], np_[k], args.repeat, dec_b, dec_n)

    cases = end_to_end()
    for name, fn in cases.items():
        os.environ["VOLKENBORN_JIT"] = "1"
        ring_mod._cached_ring.cache_clear()
        t0 = time.perf_counter()
        fn()
        first = time.perf_counter() - t0
        tb, rb = best_of(fn, args.repeat)
        os.environ["VOLKENBORN_JIT"] = "0"
        tn, rn = best_of(fn, args.repeat)
        same = "yes" if rb == rn else "NO"
        ok &= rb == rn
        print(f"{name:24s} {tn * 1e3:10.2f} {tb * 1e3:10.2f} {tn / tb:8.2f}x {first * 1e3:10.1f}   {same}")
    os.environ.pop("VOLKENBORN_JIT", None)
    if not ok:
        raise SystemExit("backends disagree")


if __name__ == "__main__":
    main()
