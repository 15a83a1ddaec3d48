from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import agree_to, exact_riemann, qbracket_exact
from volkenborn.analytic import QParameter
from volkenborn.functions import BallIndicator, Polynomial, constant
from volkenborn.integral import (
    Ball,
    ball_measure,
    integrate,
    invariance_residual,
    riemann_sum,
    thm1_closed_form,
    thm1_direct_sum,
    thm1_lhs,
    thm1_rhs,
    weighted_measure,
)
from volkenborn.padic import DomainError, PrecisionContext, residual_exponent

N = 32


def poly_fn(coeffs):
    return lambda x: sum(Fraction(c) * x**i for i, c in enumerate(coeffs))


class TestBall:
    def test_around_reduces(self):
        assert Ball.around(10, 2, 3) == Ball(1, 2, 3)

    def test_rejects_bad_center(self):
        with pytest.raises(DomainError):
            Ball(9, 2, 3)

    def test_children_partition(self):
        kids = Ball(2, 1, 3).children()
        assert [c.a for c in kids] == [2, 5, 8] and all(c.n == 2 for c in kids)


class TestRiemannSum:
    def test_constant_one_is_one(self):
        ctx = PrecisionContext(3)
        for m in (1, 3, 5):
            assert riemann_sum(constant(1), QParameter(4, 3), m, ctx=ctx) == 1

    @given(
        st.sampled_from([3, 5]),
        st.lists(st.integers(-9, 9), min_size=1, max_size=4),
        st.integers(1, 3),
        st.integers(1, 30).filter(lambda s: s % 15),
        st.integers(0, 2),
    )
    @settings(max_examples=30, deadline=None)
    def test_matches_exact_sum(self, p, coeffs, m, s, wexp):
        q = 1 + p * s
        w = 1 + p**2 * wexp
        ctx = PrecisionContext(p, N)
        got = riemann_sum(Polynomial(coeffs), QParameter(q, p), m, weight=w, ctx=ctx)
        want = exact_riemann(poly_fn(coeffs), q, m, p, weight=w)
        assert agree_to(got, want, p) >= N - 1

    @pytest.mark.parametrize("a,n", [(0, 1), (2, 1), (4, 2)])
    def test_ball_restriction_matches_exact_sum(self, a, n):
        p, q, m = 3, 10, 4
        ctx = PrecisionContext(p, N)
        got = riemann_sum(Polynomial([1, 0, 2]), q, m, ball=Ball(a, n, p), ctx=ctx)
        want = exact_riemann(poly_fn([1, 0, 2]), q, m, p, a=a, n=n)
        assert agree_to(got, want, p) >= N - 1

    def test_level_below_ball_rejected(self):
        with pytest.raises(ValueError):
            riemann_sum(constant(1), QParameter(4, 3), 1, ball=Ball(0, 2, 3))

    def test_q_one_rejected(self):
        with pytest.raises(DomainError):
            riemann_sum(constant(1), QParameter(1, 3), 2)

    def test_identity_residuals_strictly_decrease(self):
        ctx = PrecisionContext(3)
        f, q = Polynomial([0, 1]), QParameter(4, 3)
        S = {m: riemann_sum(f, q, m, ctx=ctx) for m in range(2, 6)}
        exps = [residual_exponent(S[m] - S[m - 1]) for m in range(3, 6)]
        assert exps[0] > exps[1] > exps[2]

    def test_backends_agree(self, backend):
        ctx = PrecisionContext(5, N)
        got = riemann_sum(Polynomial([1, 2, 3]), QParameter(6, 5), 3, weight=26, ctx=ctx)
        want = exact_riemann(poly_fn([1, 2, 3]), 6, 3, 5, weight=26)
        assert agree_to(got, want, 5) >= N - 1


class TestIntegrate:
    def test_constant_is_exact(self):
        r = integrate(constant(1), QParameter(4, 3))
        assert r.status == "Exact" and r.value == 1 and r.residual == 0
        assert r.to_json()["residual"] == "0"

    def test_indicator_is_exact_and_equals_ball_measure(self):
        ctx = PrecisionContext(3)
        ball = Ball(2, 2, 3)
        r = integrate(BallIndicator(2, 2, 3), QParameter(4, 3), ctx=ctx)
        assert r.status == "Exact"
        want = Fraction(4) ** 2 / qbracket_exact(9, 4)
        assert agree_to(r.value, want, 3) >= N - 1
        assert (r.value - ball_measure(4, ball, ctx)).valuation >= N - 1

    def test_identity_converges_for_five(self):
        r = integrate(Polynomial([0, 1]), QParameter(1 + 25, 5), ctx=PrecisionContext(5))
        assert r.status == "Converged" and r.level <= 8
        assert r.residual <= Fraction(1, 5**6)

    def test_max_level(self):
        r = integrate(Polynomial([0, 1]), QParameter(4, 3), tol=Fraction(1, 3**30), m_max=4)
        assert r.status == "MaxLevel" and r.level == 4

    def test_history_residuals_certify(self):
        r = integrate(Polynomial([0, 1]), QParameter(4, 3), m_max=6)
        for (m0, v0, _), (m1, v1, e) in zip(r.history, r.history[1:]):
            assert residual_exponent(v1 - v0) == e

    def test_bad_tol(self):
        with pytest.raises(ValueError):
            integrate(constant(1), QParameter(4, 3), tol=Fraction(0))


class TestBallMeasure:
    @pytest.mark.parametrize("p,a,n,q", [(3, 0, 0, 4), (3, 2, 1, 10), (5, 7, 2, 6), (7, 3, 1, 8)])
    def test_closed_form(self, p, a, n, q):
        got = ball_measure(q, Ball(a, n, p), PrecisionContext(p, N))
        assert agree_to(got, Fraction(q) ** a / qbracket_exact(p**n, q), p) >= N - 1

    @pytest.mark.parametrize("p,a,n", [(3, 1, 1), (5, 3, 1), (3, 4, 2)])
    def test_distribution(self, p, a, n):
        ctx = PrecisionContext(p, N)
        q = QParameter(1 + p, p)
        parent = ball_measure(q, Ball(a, n, p), ctx)
        kids = sum((ball_measure(q, c, ctx) for c in Ball(a, n, p).children()), 0 * parent)
        assert (parent - kids).valuation >= N - 2


class TestWeightedMeasure:
    def test_golden_against_exact_sum(self):
        p, q, m = 3, 10, 6
        ball = Ball(1, 1, p)
        ctx = PrecisionContext(p, N)
        got = weighted_measure(constant(1), q, q, ball, m, ctx)
        want = exact_riemann(lambda x: 1, q, m, p, weight=q, a=1, n=1)
        assert agree_to(got.value, want, p) >= N - 1
        assert got.level == m and got.ball == ball

    def test_identity_golden_against_exact_sum(self):
        p, q, m = 3, 10, 6
        got = weighted_measure(Polynomial([0, 1]), q, q, Ball(1, 1, p), m, PrecisionContext(p, N))
        want = exact_riemann(lambda x: x, q, m, p, weight=q, a=1, n=1)
        assert agree_to(got.value, want, p) >= N - 1

    def test_children_sum_to_parent(self):
        p, m = 5, 4
        ctx = PrecisionContext(p, N)
        f = Polynomial([1, 1, 1])
        parent = Ball(2, 1, p)
        whole = weighted_measure(f, 26, 6, parent, m, ctx).value
        parts = [weighted_measure(f, 26, 6, c, m, ctx).value for c in parent.children()]
        assert (whole - sum(parts[1:], parts[0])).valuation >= N - 1


class TestInvariance:
    def test_constant_unweighted_cancels(self):
        # n >= 1 so that a = 1 is already the reduced center of both balls
        for n in range(1, 4):
            assert invariance_residual(constant(1), 1, 4, 1, n, 5, PrecisionContext(3)) == 0

    def test_identity_decays(self):
        p, q = 3, 1 + 3**3
        r = [invariance_residual(Polynomial([0, 1]), q, q, 1, n, 6, PrecisionContext(p)) for n in range(1, 5)]
        assert all(b <= a for a, b in zip(r, r[1:]))
        C = max(x * p**n for n, x in zip(range(1, 5), r))
        assert all(x <= C * Fraction(p) ** -n for n, x in zip(range(1, 5), r))

    def test_indicator_vanishes_past_its_level(self):
        f = BallIndicator(1, 2, 3)
        r = [invariance_residual(f, 1, 4, 1, n, 6, PrecisionContext(3)) for n in range(4)]
        assert r[2] == r[3] == 0 and r[1] > 0


def rooted(r, p, n):
    """q = r**(p**n), so the principal p**n-th root of q is r itself."""
    return QParameter(Fraction(r) ** (p**n), p)


class TestRescaledBallIntegral:
    @pytest.mark.parametrize("p,a,n", [(3, 1, 1), (3, 5, 2), (5, 3, 1)])
    def test_omega_equals_q_gives_root_ball_measure(self, p, a, n):
        # omega = q cancels the weight: the integral is q'^a / [p^n]_{q'}
        r = 1 + p**2
        q = rooted(r, p, n)
        got = thm1_lhs(constant(1), q, q, Ball(a, n, p), 3, PrecisionContext(p, N))
        assert agree_to(got, Fraction(r) ** a / qbracket_exact(p**n, r), p) >= N - 1

    @pytest.mark.parametrize("p,a,n", [(3, 1, 1), (3, 2, 1), (5, 4, 1)])
    def test_lhs_matches_exact_rescaled_sum(self, p, a, n):
        m = 3
        r, s = Fraction(1 + p**2), Fraction(1 + 2 * p**2)
        q, w = rooted(r, p, n), rooted(s, p, n)
        f = poly_fn([1, 1])
        pts = [a + p**n * k for k in range(p**m)]
        want = sum(s**x * f(x) * r ** (-x) * r**x for x in pts) / qbracket_exact(p ** (n + m), r)
        got = thm1_lhs(Polynomial([1, 1]), w, q, Ball(a, n, p), m, PrecisionContext(p, N))
        assert agree_to(got, want, p) >= N - 1

    @pytest.mark.parametrize("p,a,n,c", [(3, 1, 1, [0, 1]), (3, 4, 2, [1, 0, 1]), (5, 2, 1, [2, -1])])
    def test_lhs_equals_rhs(self, p, a, n, c):
        m = 6 if p == 3 else 4
        q, w = QParameter(1 + p**4, p), QParameter(1 + 2 * p**4, p)
        ctx = PrecisionContext(p, N)
        ball = Ball(a, n, p)
        d = thm1_lhs(Polynomial(c), w, q, ball, m, ctx) - thm1_rhs(Polynomial(c), w, q, ball, m, ctx)
        assert residual_exponent(d) <= -(m - 2)

    def test_closed_form_at_omega_equals_q(self):
        p, a, n = 3, 2, 1
        r = Fraction(1 + 9)
        q = rooted(r, p, n)
        qv = r**p
        want = 2 * r ** (2 * a) * (1 - qv) / ((1 - qv**2) * qbracket_exact(p**n, r))
        got = thm1_closed_form(q, q, Ball(a, n, p), PrecisionContext(p, N))
        assert agree_to(got, want, p) >= N - 2

    def test_closed_form_unweighted(self):
        # omega = 1: the factor collapses to (1-q)/(1-q) * 1 = 1, leaving q'^a/[p^n]_{q'}
        p, a, n = 5, 3, 1
        r = Fraction(1 + 25)
        got = thm1_closed_form(1, rooted(r, p, n), Ball(a, n, p), PrecisionContext(p, N))
        assert agree_to(got, r**a / qbracket_exact(p**n, r), p) >= N - 2

    def test_direct_sum_approaches_closed_form(self):
        p = 3
        q, w = QParameter(1 + p**4, p), QParameter(1 + 2 * p**4, p)
        ball = Ball(1, 1, p)
        ctx = PrecisionContext(p, N)
        closed = thm1_closed_form(w, q, ball, ctx)
        exps = [residual_exponent(thm1_direct_sum(w, q, ball, m, ctx) - closed) for m in (3, 4, 5, 6)]
        assert all(b <= a for a, b in zip(exps, exps[1:]))
        assert exps[-1] < exps[0]

    def test_pole_and_degenerate_q(self):
        p = 3
        q = QParameter(1 + 9, p)
        with pytest.raises(DomainError):
            thm1_closed_form(q.inverse(), q, Ball(0, 0, p))
        with pytest.raises(DomainError):
            thm1_closed_form(1, 1, Ball(0, 0, p))

    def test_depth_check(self):
        with pytest.raises(DomainError, match="v_p"):
            thm1_lhs(constant(1), 1, QParameter(1 + 9, 3), Ball(0, 2, 3), 2)

    def test_zero_depth_is_plain_integral(self):
        p, q = 3, QParameter(4, 3)
        ctx = PrecisionContext(p, N)
        got = thm1_lhs(Polynomial([0, 1]), 1, q, Ball(0, 0, p), 4, ctx)
        # omega = 1, n = 0: integrand f(x) q^-x against mu_q
        want = exact_riemann(lambda x: x * Fraction(4) ** -x, 4, 4, p)
        assert agree_to(got, want, p) >= N - 1
