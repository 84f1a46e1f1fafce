import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kernelbasis.featuremap import (
    ConditioningError,
    FeatureMapSpec,
    features,
    krr_fit_predict,
)
from kernelbasis.gaussian import GaussianScale, gaussian_kernel, gaussian_psi


class TestSpec:
    def test_dimensions(self):
        assert FeatureMapSpec("matern", n=5, nu=2).dim == 2 + 1 + 2 * 5
        assert FeatureMapSpec("cauchy", n=5).dim == 10
        assert FeatureMapSpec("gaussian", n=5).dim == 5

    def test_index_labels_document_ordering(self):
        labels = FeatureMapSpec("matern", n=2, nu=1).index_labels()
        assert labels == ["null_0", "null_1", "minus_0", "minus_1", "plus_0", "plus_1"]
        assert FeatureMapSpec("cauchy", n=2).index_labels() == [
            "alpha_0", "alpha_1", "beta_0", "beta_1",
        ]

    def test_validation(self):
        with pytest.raises(ValueError):
            FeatureMapSpec("matern", n=3)  # missing nu
        with pytest.raises(ValueError):
            FeatureMapSpec("gaussian", n=3, nu=1)
        with pytest.raises(ValueError):
            FeatureMapSpec("spline", n=3)
        with pytest.raises(ValueError):
            FeatureMapSpec("gaussian", n=0)


class TestFeatures:
    def test_single_gaussian_feature(self):
        spec = FeatureMapSpec("gaussian", lam=1.3, n=1)
        F = features(spec, [0.4])
        assert F.shape == (1, 1)
        assert F[0, 0] == pytest.approx(gaussian_psi(0, 1.3 * 0.4), rel=1e-14)

    @settings(max_examples=25, deadline=None)
    @given(st.sampled_from(["matern", "cauchy", "gaussian"]),
           st.floats(-3, 3), st.floats(-3, 3))
    def test_gram_equals_truncated_kernel(self, family, t, u):
        spec = FeatureMapSpec(family, n=7, nu=1 if family == "matern" else None)
        F = features(spec, [t, u])
        dot = float(F[0] @ F[1])
        assert dot == pytest.approx(spec.truncated_kernel(t, u), abs=1e-12)

    def test_gaussian_feature_dot_tight(self):
        spec = FeatureMapSpec("gaussian", n=25)
        pts = np.linspace(-3, 3, 9)
        F = features(spec, pts)
        gram = F @ F.T
        direct = spec.truncated_kernel(pts[:, None], pts[None, :])
        np.testing.assert_allclose(gram, direct, atol=1e-13)

    def test_gram_reconstruction_ten_points(self):
        spec = FeatureMapSpec("cauchy", n=9)
        pts = np.linspace(-3, 3, 10)
        F = features(spec, pts)
        gram = F @ F.T
        direct = spec.truncated_kernel(pts[:, None], pts[None, :])
        np.testing.assert_allclose(gram, direct, atol=1e-12)

    def test_matern_opposite_sides_orthogonal_in_handed_blocks(self):
        spec = FeatureMapSpec("matern", n=1, nu=0)
        F = features(spec, [-1.0, 1.0])
        # handed coordinates are the trailing 2n entries
        assert float(F[0, 1:] @ F[1, 1:]) == 0.0

    def test_rejects_nonfinite_points(self):
        with pytest.raises(ValueError):
            features(FeatureMapSpec("gaussian", n=2), [np.nan])


class TestKRR:
    def test_interpolates_kernel_translate(self):
        # y = r(., 0) sampled on 15 points is reproduced to 1e-6 off-sample
        spec = FeatureMapSpec("gaussian", n=40)
        xtr = np.linspace(-3, 3, 15)
        ytr = gaussian_kernel(GaussianScale(1.0), xtr, 0.0)
        xte = np.linspace(-2.8, 2.8, 41)
        pred = krr_fit_predict(spec, xtr, ytr, 1e-10, xte)
        np.testing.assert_allclose(
            pred, gaussian_kernel(GaussianScale(1.0), xte, 0.0), atol=1e-6
        )

    def test_constant_data_reproduced_exactly_at_ridge_zero(self):
        spec = FeatureMapSpec("gaussian", n=12)
        xtr = np.linspace(-2, 2, 8)
        ytr = np.full(8, 3.0)
        rec = krr_fit_predict(spec, xtr, ytr, 0.0, xtr)
        np.testing.assert_allclose(rec, 3.0, atol=1e-10)

    def test_duplicated_points_raise_conditioning_error(self):
        spec = FeatureMapSpec("gaussian", n=12)
        xtr = np.array([0.5, 0.5, 1.0])
        with pytest.raises(ConditioningError) as err:
            krr_fit_predict(spec, xtr, np.array([1.0, 2.0, 3.0]), 0.0, xtr)
        assert err.value.cond > 1e12

    @pytest.mark.parametrize("family,nu", [("matern", 3), ("cauchy", None), ("gaussian", None)])
    def test_matches_full_kernel_ridge(self, family, nu):
        rng = np.random.default_rng(0x5EED)
        xtr = rng.uniform(-3, 3, 20)
        ytr = np.sin(2 * xtr) + 0.1 * rng.standard_normal(20)
        xte = np.linspace(-3, 3, 50)
        spec = FeatureMapSpec(family, n=200, nu=nu)
        ridge = 1e-2
        pred = krr_fit_predict(spec, xtr, ytr, ridge, xte)
        K = spec.kernel(xtr[:, None], xtr[None, :])
        Kt = spec.kernel(xte[:, None], xtr[None, :])
        full = Kt @ np.linalg.solve(K + ridge * np.eye(20), ytr)
        assert float(np.max(np.abs(pred - full))) < 1e-5

    def test_negative_ridge_rejected(self):
        spec = FeatureMapSpec("gaussian", n=4)
        with pytest.raises(ValueError):
            krr_fit_predict(spec, [0.0, 1.0], [0.0, 1.0], -1.0, [0.5])

    def test_length_mismatch_rejected(self):
        spec = FeatureMapSpec("gaussian", n=4)
        with pytest.raises(ValueError):
            krr_fit_predict(spec, [0.0, 1.0], [0.0], 1e-3, [0.5])
