"""Shared fixtures and independent oracles.

The oracles work with exact Python rationals and plain modular integer
arithmetic only; they never call into the package's arithmetic.
"""

from fractions import Fraction

import pytest

import volkenborn.ring as ring_mod


def vp(r, p):
    """p-adic valuation of a nonzero rational by repeated division."""
    r = Fraction(r)
    num, den, v = r.numerator, r.denominator, 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def digits_of(r, p, N):
    """First N base-p digits of the unit part of r, peeled off one at a time."""
    r = Fraction(r)
    r /= Fraction(p) ** vp(r, p)
    out = []
    for _ in range(N):
        # r = num/den with p not dividing den: digit d = num * den^-1 mod p
        d = (r.numerator * pow(r.denominator, -1, p)) % p
        out.append(d)
        r = (r - d) / p
    return out


def agree_to(x, r, p):
    """Largest k with x = r mod p^k (x a PadicNumber, r a rational), capped at x's precision."""
    r = Fraction(r)
    A = x.absprec
    diff = x.to_fraction() - r
    if diff == 0:
        return A
    return min(A, vp(diff, p))


def qbracket_exact(x, q):
    q = Fraction(q)
    return sum((q**i for i in range(x)), Fraction(0))


def exact_riemann(f, q, m, p, weight=1, a=0, n=0):
    """(1/[p^m]_q) * sum over xi < p^m, xi = a mod p^n of w^xi f(xi) q^xi, in Q."""
    q, weight = Fraction(q), Fraction(weight)
    total = Fraction(0)
    for xi in range(a, p**m, p**n):
        total += weight**xi * f(xi) * q**xi
    return total / qbracket_exact(p**m, q)


@pytest.fixture(params=["numba", "numpy"])
def backend(request, monkeypatch):
    """Run a test once per residue backend."""
    if request.param == "numba" and not ring_mod.HAVE_NUMBA:
        pytest.skip("numba unavailable")
    monkeypatch.setenv("VOLKENBORN_JIT", "1" if request.param == "numba" else "0")
    ring_mod._cached_ring.cache_clear()
    yield request.param
    ring_mod._cached_ring.cache_clear()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
