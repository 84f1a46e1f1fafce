"""Stable evaluation of the orthogonal polynomials underlying every basis family.

All evaluators use three-term recurrences.  The explicit binomial sums
cancel catastrophically past degree ~20 and appear only in the test suite,
as exact-rational oracles.  Factorial-type prefactors elsewhere in the
package are formed from log-gamma differences, never as quotients of
separately evaluated factorials.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "MAX_DEGREE",
    "laguerre",
    "assoc_laguerre",
    "hermite",
    "hermite_normalized",
    "assoc_laguerre_table",
    "hermite_normalized_table",
]

# Degree cap: recurrences stay accurate well past this, but callers asking
# for more are almost certainly misusing the module.
MAX_DEGREE = 512


def _check_degree(m: int, name: str = "m") -> None:
    if m < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {m}")
    if m > MAX_DEGREE:
        raise ValueError(f"{name}={m} exceeds the degree cap {MAX_DEGREE}")


def _prepare(t) -> tuple[np.ndarray, bool]:
    arr = np.asarray(t, dtype=float)
    return arr, arr.ndim == 0


def _finish(vals: np.ndarray, scalar: bool):
    return float(vals) if scalar else vals


def laguerre(m: int, t):
    """Laguerre polynomial L_m(t) by the three-term recurrence.

    (k+1) L_{k+1}(t) = (2k+1-t) L_k(t) - k L_{k-1}(t)
    """
    return assoc_laguerre(m, 0, t)


def assoc_laguerre(m: int, eta: int, t):
    """Associated Laguerre polynomial L_m^(eta)(t) by recurrence.

    (k+1) L_{k+1}^(eta) = (2k+1+eta-t) L_k^(eta) - (k+eta) L_{k-1}^(eta),
    with L_0^(eta) = 1 and L_1^(eta) = 1 + eta - t.  For eta = 0 this is
    exactly the plain Laguerre recurrence.
    """
    _check_degree(m)
    if eta < 0:
        raise ValueError(f"eta must be a nonnegative integer, got {eta}")
    x, scalar = _prepare(t)
    p_prev = np.ones_like(x)
    if m == 0:
        return _finish(p_prev, scalar)
    p = 1.0 + eta - x
    for k in range(1, m):
        p, p_prev = ((2 * k + 1 + eta - x) * p - (k + eta) * p_prev) / (k + 1), p
    return _finish(p, scalar)


def hermite(m: int, t):
    """Physicist's Hermite polynomial H_m(t) by recurrence.

    H_{k+1}(t) = 2t H_k(t) - 2k H_{k-1}(t).  Overflows float64 around
    m ~ 270; use :func:`hermite_normalized` for large degrees.
    """
    _check_degree(m)
    x, scalar = _prepare(t)
    p_prev = np.ones_like(x)
    if m == 0:
        return _finish(p_prev, scalar)
    p = 2.0 * x
    for k in range(1, m):
        p, p_prev = 2.0 * x * p - 2.0 * k * p_prev, p
    return _finish(p, scalar)


def hermite_normalized(m: int, t):
    """Normalised Hermite polynomial H_m(t) / sqrt(2^m m!).

    Satisfies e_{k+1} = sqrt(2/(k+1)) t e_k - sqrt(k/(k+1)) e_{k-1}; the
    values stay O(e^{t^2/2}) for every degree, so no overflow.
    """
    _check_degree(m)
    x, scalar = _prepare(t)
    p_prev = np.ones_like(x)
    if m == 0:
        return _finish(p_prev, scalar)
    p = np.sqrt(2.0) * x
    for k in range(1, m):
        p, p_prev = np.sqrt(2.0 / (k + 1)) * x * p - np.sqrt(k / (k + 1.0)) * p_prev, p
    return _finish(p, scalar)


def assoc_laguerre_table(count: int, eta: int, t) -> np.ndarray:
    """Rows m = 0..count-1 of L_m^(eta) evaluated at t (vectorised)."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    _check_degree(count - 1, "count-1")
    if eta < 0:
        raise ValueError(f"eta must be a nonnegative integer, got {eta}")
    x = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.empty((count, x.size))
    out[0] = 1.0
    if count > 1:
        out[1] = 1.0 + eta - x
    for k in range(1, count - 1):
        out[k + 1] = ((2 * k + 1 + eta - x) * out[k] - (k + eta) * out[k - 1]) / (k + 1)
    return out


def hermite_normalized_table(count: int, t) -> np.ndarray:
    """Rows m = 0..count-1 of H_m / sqrt(2^m m!) evaluated at t."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    _check_degree(count - 1, "count-1")
    x = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.empty((count, x.size))
    out[0] = 1.0
    if count > 1:
        out[1] = np.sqrt(2.0) * x
    for k in range(1, count - 1):
        out[k + 1] = np.sqrt(2.0 / (k + 1)) * x * out[k] - np.sqrt(k / (k + 1.0)) * out[k - 1]
    return out
