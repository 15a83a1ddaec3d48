from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import digits_of, vp
from volkenborn.padic import (
    DivisionByZero,
    PadicNumber,
    PrecisionContext,
    PrecisionExhausted,
    from_rational,
    pnorm,
    residual_exponent,
)

PRIMES = [3, 5, 7, 11]


def nonzero_rationals(max_abs=10**6):
    return st.fractions(min_value=-max_abs, max_value=max_abs, max_denominator=10**4).filter(lambda r: r != 0)


class TestFromRational:
    def test_one(self):
        x = from_rational(1, 1, PrecisionContext(3))
        assert x.val == 0
        assert x.digits == [1] + [0] * 31

    def test_fifty_in_base_five(self):
        x = from_rational(50, 1, PrecisionContext(5))
        assert x.val == 2
        assert x.unit == 2

    def test_one_third_in_base_five(self):
        N = 32
        x = from_rational(1, 3, PrecisionContext(5, N))
        # oracle: modular inverse of 3 mod 5^N, then digit extraction
        u = pow(3, -1, 5**N)
        expected = [(u // 5**i) % 5 for i in range(N)]
        assert x.val == 0
        assert x.digits == expected

    def test_negative_valuation(self):
        x = from_rational(7, 9, PrecisionContext(3))
        assert x.val == -2
        assert pnorm(x) == 9

    def test_zero_denominator(self):
        with pytest.raises(DivisionByZero):
            from_rational(1, 0, PrecisionContext(3))

    @given(nonzero_rationals(), st.sampled_from(PRIMES))
    def test_digits_match_peeling_oracle(self, r, p):
        x = from_rational(r, 1, 20, p=p)
        assert x.val == vp(r, p)
        assert x.digits == digits_of(r, p, 20)
        assert x.digits[0] != 0


class TestContext:
    def test_defaults(self):
        ctx = PrecisionContext(5)
        assert ctx.digits == 32 and ctx.max_root_depth == 4

    @pytest.mark.parametrize("p", [2, 4, 9, 1])
    def test_rejects_bad_prime(self, p):
        with pytest.raises(ValueError):
            PrecisionContext(p)

    def test_digits_headroom(self):
        with pytest.raises(ValueError):
            PrecisionContext(3, digits=7, max_root_depth=4)
        PrecisionContext(3, digits=8, max_root_depth=4)

    def test_env(self, monkeypatch):
        monkeypatch.setenv("VOLKENBORN_DIGITS", "40")
        assert PrecisionContext.from_env(3).digits == 40


class TestArithmetic:
    def test_additive_identity(self):
        x = from_rational(17, 4, 20, p=3)
        assert (x + 0).identical(x)

    def test_two_plus_three_base_five(self):
        s = from_rational(2, 1, 10, p=5) + from_rational(3, 1, 10, p=5)
        assert s.val == 1 and s.unit == 1

    def test_inverse_law(self):
        x = from_rational(2, 1, PrecisionContext(3))
        one = x.invert() * x
        assert one.val == 0 and one.unit == 1 and one.prec == 32

    def test_addition_precision_is_min_absolute(self):
        x = from_rational(1, 1, 10, p=3)  # known mod 3^10
        y = from_rational(9, 1, 4, p=3)  # known mod 3^6
        assert (x + y).absprec == 6

    def test_multiplication_tracks_relative_precision(self):
        x = from_rational(9, 1, 10, p=3)
        y = from_rational(2, 1, 6, p=3)
        z = x * y
        assert z.val == 2 and z.prec == 6

    def test_cancellation_keeps_absolute_precision(self):
        x = from_rational(1, 1, 10, p=3)
        z = x - x
        assert z.is_zero() and not z.is_exact_zero()
        assert z.absprec == 10
        assert residual_exponent(z) == -10

    def test_inverting_cancelled_zero_exhausts_precision(self):
        x = from_rational(5, 1, 10, p=3)
        with pytest.raises(PrecisionExhausted):
            (x - x).invert()

    def test_exact_zero_division(self):
        with pytest.raises(DivisionByZero):
            PadicNumber.zero(3).invert()

    def test_partial_cancellation_loses_digits(self):
        x = from_rational(1 + 3**5, 1, 10, p=3)
        d = x - 1
        assert d.val == 5 and d.absprec == 10 and d.prec == 5

    def test_prime_mismatch(self):
        with pytest.raises(ValueError):
            from_rational(1, 1, 5, p=3) + from_rational(1, 1, 5, p=5)

    def test_power(self):
        x = from_rational(4, 1, 20, p=3)
        assert (x**7).to_fraction() % 3**20 == 4**7 % 3**20
        assert (x**-1 * x) == 1

    @given(nonzero_rationals(), nonzero_rationals(), st.sampled_from(PRIMES))
    def test_field_ops_against_rationals(self, r, s, p):
        N = 24
        x, y = from_rational(r, 1, N, p=p), from_rational(s, 1, N, p=p)
        for got, want in [(x * y, r * s), (x / y, r / s)]:
            assert got.val == vp(want, p)
            assert got.digits == digits_of(want, p, N)
        if r + s != 0:
            got = x + y
            want = r + s
            # absolute precision is min(v(r), v(s)) + N
            known = int(got.absprec) - vp(want, p)
            assert known >= 0
            assert got.digits[:known] == digits_of(want, p, known)


class TestNorm:
    def test_norm_of_p(self):
        for p in PRIMES:
            assert pnorm(from_rational(p, 1, 10, p=p)) == Fraction(1, p)

    def test_unit(self):
        assert pnorm(from_rational(1, 1, 10, p=3)) == 1

    def test_fifty(self):
        assert pnorm(from_rational(50, 1, 10, p=5)) == Fraction(1, 25)

    def test_zero(self):
        assert pnorm(PadicNumber.zero(3)) == 0
        assert pnorm(0, 3) == 0

    @given(nonzero_rationals(), nonzero_rationals(), st.sampled_from(PRIMES))
    def test_ultrametric_and_multiplicative(self, r, s, p):
        x, y = from_rational(r, 1, 30, p=p), from_rational(s, 1, 30, p=p)
        nx, ny = pnorm(x), pnorm(y)
        if r + s != 0:
            assert pnorm(x + y) <= max(nx, ny)
            if nx != ny:
                assert pnorm(x + y) == max(nx, ny)
        assert pnorm(x * y) == nx * ny


class TestSerialization:
    @given(nonzero_rationals(), st.sampled_from(PRIMES))
    @settings(max_examples=50)
    def test_json_round_trip(self, r, p):
        x = from_rational(r, 1, 16, p=p)
        y = PadicNumber.from_json(x.to_json())
        assert y.identical(x)

    def test_zero_round_trip(self):
        for z in (PadicNumber.zero(3), PadicNumber.zero(3, 12)):
            assert PadicNumber.from_json(z.to_json()).identical(z)
        assert PadicNumber.zero(3).to_json() == {"p": 3, "val": None, "digits": [], "prec": 0}

    def test_digits_invariant(self):
        with pytest.raises(ValueError):
            PadicNumber.from_digits(3, 0, [0, 1])
        with pytest.raises(ValueError):
            PadicNumber.from_digits(3, 0, [3])

    def test_immutable(self):
        x = from_rational(1, 1, 5, p=3)
        with pytest.raises(AttributeError):
            x.val = 2
