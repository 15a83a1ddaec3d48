import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import volkenborn.ring as ring_mod
from volkenborn.ring import NumpyRing, jit_enabled, make_ring

SHAPES = [(3, 5), (3, 40), (5, 50), (7, 45), (7, 90), (11, 60)]


def ints(rng, M, n):
    return [rng.randrange(M) for _ in range(n)]


@pytest.mark.skipif(not ring_mod.HAVE_NUMBA, reason="numba unavailable")
@pytest.mark.parametrize("p,K", SHAPES)
def test_backends_bit_identical(p, K):
    rng = random.Random(p * 1000 + K)
    M = p**K
    n = 257
    xs, ys = ints(rng, M, n), ints(rng, M, n)
    coeffs = ints(rng, M, 4)
    c, base, first = (rng.randrange(M) for _ in range(3))
    results = {}
    for b in ("numba", "numpy"):
        r = make_ring(p, K, b)
        A, B = r.from_ints(xs), r.from_ints(ys)
        X = r.arange(2, p, n)
        results[b] = [
            r.to_ints(r.mul(A, B)),
            r.to_ints(r.add(A, B)),
            r.to_ints(r.sub(A, B)),
            r.to_ints(r.scale(A, c)),
            r.to_ints(r.powers(base, n, first)),
            r.to_ints(r.poly(coeffs, X)),
            r.to_ints(X),
            r.total(A),
            r.dot(A, B),
        ]
    assert results["numba"] == results["numpy"]


@pytest.mark.parametrize("p,K", SHAPES)
def test_numpy_ring_against_integers(p, K):
    rng = random.Random(K)
    M = p**K
    xs, ys = ints(rng, M, 50), ints(rng, M, 50)
    r = NumpyRing(p, K)
    A, B = r.from_ints(xs), r.from_ints(ys)
    assert r.to_ints(r.mul(A, B)) == [x * y % M for x, y in zip(xs, ys)]
    assert r.dot(A, B) == sum(x * y for x, y in zip(xs, ys)) % M
    assert r.to_ints(r.powers(7, 30, 2)) == [2 * pow(7, k, M) % M for k in range(30)]


@given(st.sampled_from([3, 5, 7]), st.integers(1, 60), st.lists(st.integers(-(10**40), 10**40), min_size=1, max_size=30))
@settings(max_examples=40, deadline=None)
def test_round_trip(p, K, vals):
    r = make_ring(p, K)
    M = p**K
    assert r.to_ints(r.from_ints(vals)) == [v % M for v in vals]


def test_wide_modulus_falls_back_to_objects():
    r = make_ring(3, 400, "numba") if ring_mod.HAVE_NUMBA else make_ring(3, 400)
    assert isinstance(r, NumpyRing)


def test_env_flag(monkeypatch):
    monkeypatch.setenv("VOLKENBORN_JIT", "0")
    assert not jit_enabled()
    assert make_ring(3, 10).backend == "numpy"
    monkeypatch.setenv("VOLKENBORN_JIT", "1")
    assert jit_enabled() == ring_mod.HAVE_NUMBA


def test_unknown_backend():
    with pytest.raises(ValueError):
        make_ring(3, 10, "cuda")
