"""Uniform finite-dimensional feature maps over the three kernel families.

A feature map stacks truncated-basis values so that the Euclidean inner
product of two feature vectors equals the truncated kernel.  This is the
downstream-facing surface for reduced-rank kernel methods; a minimal
kernel ridge regression built on it demonstrates the O(n^2 N) use case.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import cauchy as _cauchy
from . import gaussian as _gaussian
from . import matern as _matern

__all__ = ["FeatureMapSpec", "ConditioningError", "features", "krr_fit_predict"]

FAMILIES = ("matern", "cauchy", "gaussian")

# interpolation (ridge = 0) refuses Gram matrices worse conditioned than this
COND_LIMIT = 1e12


class ConditioningError(RuntimeError):
    """Raised when an unregularised solve is numerically singular."""

    def __init__(self, message: str, cond: float):
        super().__init__(message)
        self.cond = cond


@dataclass(frozen=True)
class FeatureMapSpec:
    """Family, length-scale, truncation level and (for Matern) smoothness.

    Feature dimension: nu+1+2n for Matern, 2n for Cauchy (alpha block then
    beta block), n for Gaussian.
    """

    family: str
    lam: float = 1.0
    n: int = 8
    nu: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if not self.lam > 0:
            raise ValueError(f"lam must be positive, got {self.lam}")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.family == "matern":
            if self.nu is None or self.nu < 0:
                raise ValueError("matern feature maps need a nonnegative nu")
        elif self.nu is not None:
            raise ValueError("nu is only meaningful for the matern family")

    @property
    def dim(self) -> int:
        if self.family == "matern":
            return self.nu + 1 + 2 * self.n
        if self.family == "cauchy":
            return 2 * self.n
        return self.n

    def index_labels(self) -> list[str]:
        """Column labels documenting the feature ordering."""
        if self.family == "matern":
            return (
                [f"null_{m}" for m in range(self.nu + 1)]
                + [f"minus_{m}" for m in range(self.n)]
                + [f"plus_{m}" for m in range(self.n)]
            )
        if self.family == "cauchy":
            return [f"alpha_{m}" for m in range(self.n)] + [f"beta_{m}" for m in range(self.n)]
        return [f"psi_{m}" for m in range(self.n)]

    def truncated_kernel(self, t, u):
        """Truncated kernel the feature inner products reproduce."""
        if self.family == "matern":
            tr = _matern.MaternTruncation(_matern.MaternOrder(self.nu, self.lam), self.n)
            return _matern.matern_truncated(tr, t, u)
        if self.family == "cauchy":
            return _cauchy.cauchy_truncated(self.lam, self.n, t, u)
        return _gaussian.gaussian_truncated(_gaussian.GaussianScale(self.lam), self.n, t, u)

    def kernel(self, t, u):
        """Closed-form kernel of the family."""
        if self.family == "matern":
            return _matern.matern_kernel(_matern.MaternOrder(self.nu, self.lam), t, u)
        if self.family == "cauchy":
            return _cauchy.cauchy_kernel(self.lam, t, u)
        return _gaussian.gaussian_kernel(_gaussian.GaussianScale(self.lam), t, u)


def features(spec: FeatureMapSpec, points) -> np.ndarray:
    """Feature matrix: row i holds the feature vector of points[i]."""
    pts = np.atleast_1d(np.asarray(points, dtype=float))
    if not np.all(np.isfinite(pts)):
        raise ValueError("points must be finite")
    x = spec.lam * pts
    if spec.family == "matern":
        tr = _matern.MaternTruncation(_matern.MaternOrder(spec.nu, spec.lam), spec.n)
        block = _matern._basis_block(tr, x)
    elif spec.family == "cauchy":
        block = _cauchy._real_basis_block(spec.n, x)
    else:
        block = _gaussian._psi_block(spec.n, x)
    return block.T.copy()


def krr_fit_predict(spec: FeatureMapSpec, train_x, train_y, ridge: float, test_x) -> np.ndarray:
    """Reduced-rank kernel ridge regression.

    For ridge > 0 solves the dim x dim normal equations
    (F^T F + ridge I) c = F^T y by Cholesky and predicts F_test c.  For
    ridge = 0 the fit is exact interpolation through the feature Gram
    matrix F F^T, which must be well conditioned; duplicated inputs raise
    :class:`ConditioningError` with the estimated condition number.
    """
    train_x = np.asarray(train_x, dtype=float)
    train_y = np.asarray(train_y, dtype=float)
    if train_x.shape != train_y.shape:
        raise ValueError("train_x and train_y must have the same length")
    if ridge < 0:
        raise ValueError(f"ridge must be nonnegative, got {ridge}")
    F = features(spec, train_x)
    F_test = features(spec, test_x)
    if ridge > 0:
        gram = F.T @ F + ridge * np.eye(spec.dim)
        cho = scipy.linalg.cho_factor(gram, lower=True)
        coef = scipy.linalg.cho_solve(cho, F.T @ train_y)
        return F_test @ coef
    gram = F @ F.T
    cond = float(np.linalg.cond(gram))
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise ConditioningError(
            f"ridge=0 interpolation is numerically singular "
            f"(estimated condition number {cond:.3e}); add regularisation",
            cond=cond,
        )
    dual = scipy.linalg.solve(gram, train_y, assume_a="pos")
    return F_test @ (F.T @ dual)
