import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kernelbasis.matern import (
    MaternBasisId,
    MaternOrder,
    MaternTruncation,
    matern_exact_hs_error,
    matern_feature_map,
    matern_kernel,
    matern_psi,
    matern_psi_bound,
    matern_psi_norm_sq,
    matern_psi_unified,
    matern_truncated,
    matern_truncation_error_bound,
)
from kernelbasis.quadrature import gauss_laguerre_rule, integrate

SQRT2 = math.sqrt(2.0)


def null_closed_form(nu: int, m: int, t):
    """Hand-checked closed forms of the whole-line basis members, nu <= 2.

    Certified against the reflection symmetry and the kernel
    reconstruction r(0, d); the t < 0 branch of the (nu=1, m=0) member
    carries -2t, the sign the symmetry forces.
    """
    t = np.asarray(t, dtype=float)
    neg = np.where(t < 0, 1.0, 0.0)
    pos = 1.0 - neg
    e_abs = np.exp(-np.abs(t))
    if nu == 0:
        return -e_abs
    if nu == 1:
        if m == 0:
            return (-2.0 * t * np.exp(np.minimum(t, 0.0)) * neg + e_abs) / SQRT2
        return -(2.0 * t * np.exp(-np.maximum(t, 0.0)) * pos + e_abs) / SQRT2
    c = 2.0 / math.sqrt(24.0)
    if m == 0:
        return c * (2.0 * (-t * t + t) * np.exp(np.minimum(t, 0.0)) * neg - e_abs)
    if m == 1:
        return 2.0 * c * (np.abs(t) + 1.0) * e_abs
    return c * (-2.0 * (t * t + t) * np.exp(-np.maximum(t, 0.0)) * pos - e_abs)


class TestKernel:
    def test_exponential_case(self):
        o = MaternOrder(0)
        assert matern_kernel(o, 2.0, 0.5) == pytest.approx(math.exp(-1.5), rel=1e-15)

    def test_three_halves(self):
        o = MaternOrder(1)
        assert matern_kernel(o, 1.0, 0.0) == pytest.approx(2.0 * math.exp(-1.0), rel=1e-14)

    def test_five_halves(self):
        o = MaternOrder(2)
        assert matern_kernel(o, 3.0, 0.0) == pytest.approx(7.0 * math.exp(-3.0), rel=1e-14)

    @given(st.integers(0, 6), st.floats(-20, 20, allow_nan=False))
    def test_unit_at_zero_distance(self, nu, t):
        assert matern_kernel(MaternOrder(nu), t, t) == pytest.approx(1.0, rel=1e-14)

    def test_length_scale(self):
        assert matern_kernel(MaternOrder(0, lam=2.0), 1.0, 0.0) == pytest.approx(
            math.exp(-2.0), rel=1e-14
        )

    def test_order_validation(self):
        with pytest.raises(ValueError):
            MaternOrder(-1)
        with pytest.raises(ValueError):
            MaternOrder(1, lam=0.0)


class TestBasisFunctions:
    def test_null_nu0_closed_form(self):
        o = MaternOrder(0)
        t = np.linspace(-5, 5, 41)
        np.testing.assert_allclose(
            matern_psi(o, MaternBasisId("null", 0), t), -np.exp(-np.abs(t)), atol=1e-14
        )

    def test_null_closed_forms(self):
        t = np.linspace(-5, 5, 81)
        for nu in (0, 1, 2):
            o = MaternOrder(nu)
            for m in range(nu + 1):
                np.testing.assert_allclose(
                    matern_psi(o, MaternBasisId("null", m), t),
                    null_closed_form(nu, m, t),
                    atol=1e-13,
                    err_msg=f"nu={nu} m={m}",
                )

    def test_null_value_at_zero(self):
        o = MaternOrder(1)
        assert matern_psi(o, MaternBasisId("null", 1), 0.0) == pytest.approx(
            -1.0 / SQRT2, rel=1e-14
        )

    def test_plus_vanishes_on_negative_axis(self):
        o = MaternOrder(2)
        assert matern_psi(o, MaternBasisId("plus", 0), -1.0) == 0.0

    def test_plus_against_frozen_convolution_value(self):
        # independent panel-quadrature convolution, frozen
        o = MaternOrder(1)
        assert matern_psi(o, MaternBasisId("plus", 2), 0.7) == pytest.approx(
            0.07914669357770908, rel=1e-12
        )

    def test_minus_is_reflected_plus(self):
        o = MaternOrder(3)
        t = np.linspace(-6, -0.01, 23)
        lhs = matern_psi(o, MaternBasisId("minus", 4), t)
        rhs = (-1.0) ** 3 * matern_psi(o, MaternBasisId("plus", 4), -t)
        np.testing.assert_allclose(lhs, rhs, rtol=1e-13)

    def test_disjoint_supports_exactly(self):
        o = MaternOrder(1)
        t = np.linspace(-6, 6, 101)
        plus = matern_psi(o, MaternBasisId("plus", 3), t)
        minus = matern_psi(o, MaternBasisId("minus", 3), t)
        assert np.all(plus * minus == 0.0)

    def test_invalid_null_index(self):
        o = MaternOrder(1)
        with pytest.raises(ValueError, match="nu"):
            matern_psi(o, MaternBasisId("null", 2), 0.0)
        with pytest.raises(ValueError):
            MaternBasisId("weird", 0)

    def test_unified_index_covers_all_classes(self):
        o = MaternOrder(1)
        t = np.linspace(-4, 4, 17)
        np.testing.assert_array_equal(
            matern_psi_unified(o, 3, t), matern_psi(o, MaternBasisId("plus", 3), t)
        )
        np.testing.assert_array_equal(
            matern_psi_unified(o, -1, t), matern_psi(o, MaternBasisId("null", 1), t)
        )
        np.testing.assert_array_equal(
            matern_psi_unified(o, -2, t), matern_psi(o, MaternBasisId("null", 0), t)
        )
        np.testing.assert_array_equal(
            matern_psi_unified(o, -3, t), matern_psi(o, MaternBasisId("minus", 0), t)
        )

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 4), st.integers(-25, 25), st.floats(-8, 8, allow_nan=False))
    def test_uniform_bound(self, nu, m, t):
        o = MaternOrder(nu)
        assert abs(matern_psi_unified(o, m, t)) <= matern_psi_bound(o) + 1e-12

    def test_scaling_is_argument_scaling(self):
        unit = MaternOrder(2)
        scaled = MaternOrder(2, lam=1.7)
        bid = MaternBasisId("plus", 1)
        t = np.linspace(-2, 2, 9)
        np.testing.assert_allclose(
            matern_psi(scaled, bid, t), matern_psi(unit, bid, 1.7 * t), rtol=1e-14
        )


class TestTruncation:
    def test_opposite_signs_exact_at_n1(self):
        o = MaternOrder(1)
        tr = MaternTruncation(o, 1)
        assert matern_truncated(tr, -2.0, 3.0) == pytest.approx(
            matern_kernel(o, -2.0, 3.0), abs=1e-12
        )

    def test_origin_value(self):
        for nu in range(4):
            tr = MaternTruncation(MaternOrder(nu), 2)
            assert matern_truncated(tr, 0.0, 0.0) == pytest.approx(1.0, abs=1e-12)

    def test_pointwise_convergence_slow_for_nu0(self):
        # same-sign arguments converge at the analytic O(n^{-1}) off-diagonal
        # rate: the error at n = 200 is ~2e-3, not small
        o = MaternOrder(0)
        ref = matern_kernel(o, 1.0, 2.0)
        err200 = abs(ref - matern_truncated(MaternTruncation(o, 200), 1.0, 2.0))
        err500 = abs(ref - matern_truncated(MaternTruncation(o, 500), 1.0, 2.0))
        assert 1e-4 < err200 < 5e-3
        assert err500 < err200

    def test_pointwise_convergence_fast_for_nu3(self):
        o = MaternOrder(3)
        ref = matern_kernel(o, 1.0, 2.0)
        err = abs(ref - matern_truncated(MaternTruncation(o, 200), 1.0, 2.0))
        assert err < 1e-6

    def test_term_count(self):
        tr = MaternTruncation(MaternOrder(2), 5)
        assert tr.dim == 2 + 1 + 2 * 5
        assert matern_feature_map(tr, 0.3).shape == (13,)

    def test_invalid_truncation(self):
        with pytest.raises(ValueError):
            MaternTruncation(MaternOrder(1), 0)


class TestFeatureMap:
    def test_dot_equals_truncated(self):
        tr = MaternTruncation(MaternOrder(2), 6)
        for t, u in [(0.3, 1.2), (-2.0, 0.5), (-1.1, -0.7)]:
            dot = float(matern_feature_map(tr, t) @ matern_feature_map(tr, u))
            assert dot == pytest.approx(matern_truncated(tr, t, u), abs=1e-13)

    def test_nu0_n1_at_origin(self):
        tr = MaternTruncation(MaternOrder(0), 1)
        np.testing.assert_allclose(matern_feature_map(tr, 0.0), [-1.0, 0.0, 0.0], atol=1e-15)

    def test_ordering_null_minus_plus(self):
        tr = MaternTruncation(MaternOrder(1), 2)
        vec = matern_feature_map(tr, -1.3)
        o = MaternOrder(1)
        assert vec[0] == matern_psi(o, MaternBasisId("null", 0), -1.3)
        assert vec[1] == matern_psi(o, MaternBasisId("null", 1), -1.3)
        assert vec[2] == matern_psi(o, MaternBasisId("minus", 0), -1.3)
        assert vec[4] == 0.0  # plus block vanishes left of the origin


class TestNormsAndErrors:
    def test_norm_sq_base_cases(self):
        assert matern_psi_norm_sq(MaternOrder(0), 0) == pytest.approx(1.0, rel=1e-15)
        assert matern_psi_norm_sq(MaternOrder(1), 0) == pytest.approx(0.25, rel=1e-15)

    def test_norm_sq_quadrature_cross_check(self):
        # int psi+^2 w_nu dt after s = 2t is a weighted Laguerre integral
        for nu in (0, 1, 3):
            o = MaternOrder(nu)
            rule = gauss_laguerre_rule(128, nu + 1.0)
            for m in (0, 2, 7):
                bid = MaternBasisId("plus", m)

                def f(s):
                    vals = matern_psi(o, bid, s / 2.0)
                    return (vals * np.exp(s / 2.0) * s ** (-(nu + 1.0))) ** 2

                assert integrate(rule, f) == pytest.approx(
                    matern_psi_norm_sq(o, m), rel=1e-8
                )

    def test_bound_values(self):
        assert matern_psi_bound(MaternOrder(0)) == pytest.approx(1.0, rel=1e-15)
        assert matern_psi_bound(MaternOrder(2)) == pytest.approx(8.0 / math.sqrt(24.0), rel=1e-14)

    def test_error_bound_values(self):
        assert matern_truncation_error_bound(MaternOrder(0), 1) == pytest.approx(2.0, rel=1e-15)
        assert matern_truncation_error_bound(MaternOrder(0), 100) == pytest.approx(0.2, rel=1e-14)

    def test_exact_error_below_bound(self):
        for nu in range(5):
            o = MaternOrder(nu)
            for n in (1, 2, 4, 8, 16, 32, 64):
                exact = matern_exact_hs_error(o, n)
                assert 0.0 < exact <= matern_truncation_error_bound(o, n)

    def test_exact_error_trigamma_identity(self):
        from scipy.special import polygamma

        o = MaternOrder(0)
        for n in (1, 5, 40):
            expected = math.sqrt(2.0 * float(polygamma(1, n + 1)))
            assert matern_exact_hs_error(o, n) == pytest.approx(expected, rel=1e-13)

    def test_exact_error_against_mpmath_tail(self):
        mpmath.mp.dps = 40
        for nu, n in [(1, 3), (3, 16), (4, 64)]:
            f = lambda m: (mpmath.gamma(m + 1) / mpmath.gamma(m + nu + 2)) ** 2
            tail = mpmath.nsum(f, [n, mpmath.inf], method="r+s+e")
            pref = mpmath.gamma(nu + 1) ** 2 / mpmath.gamma(2 * nu + 1)
            expected = float(pref * mpmath.sqrt(2 * tail))
            assert matern_exact_hs_error(MaternOrder(nu), n) == pytest.approx(
                expected, rel=1e-12
            )

    def test_exact_error_monotone_in_n(self):
        o = MaternOrder(2)
        vals = [matern_exact_hs_error(o, n) for n in range(1, 40)]
        assert all(b < a for a, b in zip(vals, vals[1:]))


class TestNullSpaceIdentities:
    def test_symmetry(self):
        t = np.linspace(-5, 5, 41)
        for nu in range(7):
            o = MaternOrder(nu)
            for m in range(nu + 1):
                lhs = matern_psi(o, MaternBasisId("null", nu - m), t)
                rhs = (-1.0) ** nu * matern_psi(o, MaternBasisId("null", m), -t)
                np.testing.assert_allclose(lhs, rhs, atol=1e-12)

    def test_kernel_from_null_space_sum(self):
        d = np.linspace(0, 6, 61)
        for nu in range(7):
            o = MaternOrder(nu)
            total = sum(
                matern_psi(o, MaternBasisId("null", m), 0.0)
                * matern_psi(o, MaternBasisId("null", m), d)
                for m in range(nu + 1)
            )
            np.testing.assert_allclose(total, matern_kernel(o, 0.0, d), atol=1e-12)
