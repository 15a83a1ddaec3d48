from fractions import Fraction

import pytest

from conftest import agree_to
from volkenborn.analytic import QParameter
from volkenborn.functions import BallIndicator, Polynomial, constant
from volkenborn.maximal import (
    check_bound,
    k_factor,
    level_value,
    level_value_thm2,
    maximal_operator,
    weight_l1_norm,
)
from volkenborn.padic import DomainError, PrecisionContext, pnorm, residual_exponent

N = 32


def rooted(r, p, n):
    return QParameter(Fraction(r) ** (p**n), p)


class TestLevelValue:
    @pytest.mark.parametrize("p,a,n", [(3, 1, 1), (3, 7, 2), (5, 2, 1)])
    def test_constant_with_omega_equal_q(self, p, a, n):
        # numerator q'^a/[p^n]_{q'}, denominator 2 q'^{2a}(1-q)/((1-q^2)[p^n]_{q'})
        r = Fraction(1 + p**2)
        q = rooted(r, p, n)
        got = level_value(constant(1), q, q, a, n, 4, PrecisionContext(p, N))
        qv = r ** (p**n)
        want = (1 + qv) / 2 * r ** (-(a % p**n))
        assert agree_to(got, want, p) >= N - 3

    @pytest.mark.parametrize("c", [[1], [0, 1], [2, 0, 1]])
    def test_two_expressions_agree(self, c):
        p = 3
        q, w = QParameter(1 + p**4, p), QParameter(1 + 2 * p**4, p)
        ctx = PrecisionContext(p, N)
        for n in range(3):
            d = level_value(Polynomial(c), w, q, 1, n, 6, ctx) - level_value_thm2(Polynomial(c), w, q, 1, n, 6, ctx)
            assert residual_exponent(d) <= -4

    def test_direct_denominator_close_to_closed_form(self):
        p = 3
        q, w = QParameter(1 + p**4, p), QParameter(1 + 2 * p**4, p)
        ctx = PrecisionContext(p, N)
        f = Polynomial([1, 1])
        a = level_value(f, w, q, 2, 1, 6, ctx)
        b = level_value(f, w, q, 2, 1, 6, ctx, direct_denominator=True)
        assert residual_exponent(a - b) <= -4

    def test_pole(self):
        q = QParameter(1 + 81, 3)
        with pytest.raises(DomainError):
            level_value_thm2(constant(1), q.inverse(), q, 0, 1, 3)


class TestMaximalOperator:
    def test_singleton_range(self):
        p = 3
        q = QParameter(1 + p**4, p)
        ctx = PrecisionContext(p, N)
        r = maximal_operator(Polynomial([0, 1]), q, q, 1, (1, 1), 5, ctx)
        assert r.argmax_n == 1 and len(r.levels) == 1
        assert r.value == level_value(Polynomial([0, 1]), q, q, 1, 1, 5, ctx)

    def test_tie_break_smallest_level(self):
        # f = 1, omega = q: every level value has norm 1
        q = QParameter(1 + 3**4, 3)
        r = maximal_operator(constant(1), q, q, 0, (0, 2), 4, PrecisionContext(3, N))
        assert {e.norm for e in r.levels} == {1}
        assert r.argmax_n == 0

    def test_argmax_stable_in_truncation(self):
        q = QParameter(1 + 3**4, 3)
        f = BallIndicator(0, 1, 3)
        ctx = PrecisionContext(3, N)
        seen = {maximal_operator(f, q, q, 0, (0, 2), m, ctx).argmax_n for m in (5, 6, 7)}
        assert len(seen) == 1

    def test_value_is_the_largest_level(self):
        p = 3
        q, w = QParameter(1 + p**4, p), QParameter(1 + 2 * p**4, p)
        r = maximal_operator(Polynomial([0, 0, 1]), w, q, 1, (0, 2), 5, PrecisionContext(p, N))
        assert pnorm(r.value) == max(e.norm for e in r.levels)
        assert r.to_json()["argmax_n"] == r.argmax_n

    def test_depth_failure_reported_up_front(self):
        q = QParameter(1 + 9, 3)
        with pytest.raises(DomainError, match=r"v_p\(q−1\) ≥ n\+1 = 3"):
            maximal_operator(constant(1), q, q, 0, (0, 2), 3)

    def test_bad_range(self):
        q = QParameter(1 + 81, 3)
        with pytest.raises(ValueError):
            maximal_operator(constant(1), q, q, 0, (2, 1), 3)


class TestBound:
    def test_weight_norm_is_one_when_omega_equals_q(self):
        q = QParameter(1 + 3**4, 3)
        assert weight_l1_norm(q, q, 5) == 1

    def test_k_factor_trivial_case(self):
        q = QParameter(1 + 3**4, 3)
        assert k_factor(q, q, [0, 1, 2], (0, 2)) == 1

    def test_constant_bound_holds(self):
        q = QParameter(1 + 3**4, 3)
        rep = check_bound(constant(1), q, q, [0, 1, 2], (0, 2), 4, ctx=PrecisionContext(3, N))
        assert rep.left == 1 and rep.right == 1 and rep.holds

    def test_scaling_homogeneity(self):
        p = 3
        q, w = QParameter(1 + p**4, p), QParameter(1 + 2 * p**4, p)
        ctx = PrecisionContext(p, N)
        f = Polynomial([1, 1])
        r1 = check_bound(f, w, q, [0, 1], (0, 1), 4, ctx=ctx)
        r3 = check_bound(3 * f, w, q, [0, 1], (0, 1), 4, ctx=ctx)
        assert r3.left == r1.left / 3 and r3.right == r1.right / 3
        assert r3.holds == r1.holds
