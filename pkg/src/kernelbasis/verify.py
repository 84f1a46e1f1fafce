"""Verification harness: every identity, bound and error formula as a check.

The module provides three reusable operations (a convolution oracle for the
basis construction, weighted Gram matrices, and truncation-error sweeps)
plus named suites that bundle them into reproducible lists of
:class:`VerificationReport`.  All randomness is drawn from a fixed seed so
reports are bit-reproducible on one platform.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gammaln, polygamma

from . import cauchy as _c
from . import gaussian as _g
from . import matern as _m
from .laguerre import check_identity, laguerre_fn_ft
from .orthopoly import hermite_normalized, laguerre
from .quadrature import (
    NEGATIVE_HALF_LINE,
    POSITIVE_HALF_LINE,
    REAL_LINE,
    QuadratureRule,
    gauss_hermite_rule,
    gauss_laguerre_rule,
    _legendre_panel,
)
from .report import VerificationReport

__all__ = [
    "VerificationReport",
    "DEFAULT_SEED",
    "convolution_oracle",
    "gram_matrix",
    "truncation_sweep",
    "run_suite",
    "SUITE_NAMES",
]

DEFAULT_SEED = 0x5EED
# t, u in {-5, -4.5, ..., 5}
DEFAULT_GRID = np.linspace(-5.0, 5.0, 21)
ALGEBRAIC_TOL = 1e-12
QUADRATURE_TOL = 1e-8


# ---------------------------------------------------------------------------
# convolution oracle


def _panel_integral(f, a: float, b: float, panels: int, nodes: int = 32) -> float:
    total = 0.0
    edges = np.linspace(a, b, panels + 1)
    for lo, hi in zip(edges[:-1], edges[1:]):
        x, w = _legendre_panel(nodes, lo, hi)
        total += float(w @ f(x))
    return total


def _refined_integral(f, a: float, b: float, tol: float = 1e-12,
                      max_refine: int = 8, label: str = "") -> float:
    if b <= a:
        return 0.0
    prev = _panel_integral(f, a, b, 1)
    panels = 2
    for _ in range(max_refine):
        cur = _panel_integral(f, a, b, panels)
        if abs(cur - prev) <= tol * max(1.0, abs(cur)):
            return cur
        prev = cur
        panels *= 2
    raise RuntimeError(
        f"panel refinement did not converge for {label or 'integral'} on "
        f"[{a}, {b}]: last estimates {prev!r} vs {cur!r} at {panels} panels"
    )


def _h_matern(nu: int, x: np.ndarray) -> np.ndarray:
    # spectral square-root in time domain: vanishes on the negative axis
    c = 2.0 ** (nu + 0.5) * math.exp(gammaln(nu + 1) - 0.5 * gammaln(2 * nu + 1))
    pos = x >= 0
    xp = np.where(pos, x, 0.0)
    return np.where(pos, c * xp**nu * np.exp(-xp) / math.factorial(nu), 0.0)


def convolution_oracle(family: str, m: int, t: float, nu: int | None = None) -> float:
    """Numerically evaluate the defining convolution int h(t - tau) phi_m(tau) dtau.

    ``family`` is ``matern`` (requires ``nu``; any integer index m) or
    ``gaussian`` (m >= 0).  Shares only the raw polynomial evaluators with
    the closed-form basis code, so agreement is an independent check.
    """
    if family == "matern":
        if nu is None or nu < 0:
            raise ValueError("matern oracle needs a nonnegative nu")
        if m >= 0:
            # phi_m lives on [0, inf), h on [0, inf): support is [0, t]
            if t <= 0:
                return 0.0

            def f(tau):
                phi = math.sqrt(2.0) * laguerre(m, 2.0 * tau) * np.exp(-tau)
                return _h_matern(nu, t - tau) * phi

            return _refined_integral(f, 0.0, t, label=f"matern conv m={m}")
        mm = -m - 1
        lo = min(t, 0.0) - 45.0  # phi_{-mm-1} decays like e^{tau}
        hi = min(t, 0.0)

        def f(tau):
            phi = -math.sqrt(2.0) * laguerre(mm, -2.0 * tau) * np.exp(tau)
            return _h_matern(nu, t - tau) * phi

        return _refined_integral(f, lo, hi, label=f"matern conv m={m}")
    if family == "gaussian":
        if m < 0:
            raise ValueError(f"m must be nonnegative, got {m}")
        # complete the square: the integral becomes Gauss--Hermite in
        # s = sqrt(3/2) (tau - 2t/3)
        rule = gauss_hermite_rule(max(64, m // 2 + 8))
        tau = math.sqrt(2.0 / 3.0) * rule.nodes + 2.0 * t / 3.0
        acc = float(rule.weights @ hermite_normalized(m, tau))
        return (
            2.0**0.25
            * math.pi**-0.5
            * math.sqrt(2.0 / 3.0)
            * math.exp(-t * t / 3.0)
            * acc
        )
    raise ValueError(f"unknown family {family!r}; expected 'matern' or 'gaussian'")


# ---------------------------------------------------------------------------
# weighted Gram matrices

GRAM_FAMILIES = ("matern_plus", "matern_minus", "hermite_fn", "gaussian_psi", "mercer")


def gram_matrix(family: str, indices, rule: QuadratureRule,
                nu: int | None = None,
                mercer: "_g.MercerParams | None" = None) -> np.ndarray:
    """Pairwise weighted inner products of basis functions under a rule.

    The weighted integrand is reduced to the rule's base weight by the
    documented change of variables for each family (s = 2t for the Matern
    classes, s proportional to t for the Gaussian ones).
    """
    idx = list(indices)
    if family not in GRAM_FAMILIES:
        raise ValueError(f"unknown gram family {family!r}; expected one of {GRAM_FAMILIES}")
    if family == "matern_plus":
        if nu is None:
            raise ValueError("matern gram needs nu")
        if rule.domain != POSITIVE_HALF_LINE:
            raise ValueError(f"psi+ lives on the positive half line, rule has {rule.domain}")
        order = _m.MaternOrder(nu)
        s = rule.nodes
        strip = np.exp(0.5 * s) * s ** (-(nu + 1.0))
        B = np.vstack([
            _m.matern_psi(order, _m.MaternBasisId("plus", m), 0.5 * s) * strip for m in idx
        ])
    elif family == "matern_minus":
        if nu is None:
            raise ValueError("matern gram needs nu")
        if rule.domain != NEGATIVE_HALF_LINE:
            raise ValueError(f"psi- lives on the negative half line, rule has {rule.domain}")
        order = _m.MaternOrder(nu)
        s = -rule.nodes  # positive, descending; weights stay aligned
        strip = np.exp(0.5 * s) * s ** (-(nu + 1.0))
        B = np.vstack([
            _m.matern_psi(order, _m.MaternBasisId("minus", m), -0.5 * s) * strip for m in idx
        ])
    elif family == "hermite_fn":
        if rule.domain != REAL_LINE:
            raise ValueError(f"Hermite functions need a real-line rule, got {rule.domain}")
        x = rule.nodes
        strip = np.exp(0.5 * x * x)
        B = np.vstack([_g.hermite_fn(m, x) * strip for m in idx])
    elif family == "gaussian_psi":
        if rule.domain != REAL_LINE:
            raise ValueError(f"gaussian basis needs a real-line rule, got {rule.domain}")
        alpha = _g.MERCER_ALPHA_DEFAULT
        s = rule.nodes
        tpts = math.sqrt(3.0) * s / 2.0
        const = math.sqrt(alpha * math.sqrt(3.0) / (2.0 * math.sqrt(math.pi)))
        strip = const * np.exp(0.25 * s * s)
        B = np.vstack([_g.gaussian_psi(m, tpts) * strip for m in idx])
    else:  # mercer
        if rule.domain != REAL_LINE:
            raise ValueError(f"mercer basis needs a real-line rule, got {rule.domain}")
        params = mercer if mercer is not None else _g.MercerParams.from_alpha(_g.MERCER_ALPHA_DEFAULT)
        ab = params.alpha * params.beta
        s = rule.nodes
        tpts = s / ab
        const = math.pi**-0.25 / math.sqrt(params.beta)
        strip = const * np.exp(params.delta_sq * tpts * tpts)
        B = np.vstack([_g.mercer_eigenfunction(params, m, tpts) * strip for m in idx])
    return (B * rule.weights) @ B.T


# ---------------------------------------------------------------------------
# truncation sweeps


def _family_kernel_and_truncated(family: str, nu: int | None, lam: float):
    if family == "matern":
        order = _m.MaternOrder(nu, lam)

        def kern(t, u):
            return _m.matern_kernel(order, t, u)

        def trunc(n, t, u):
            return _m.matern_truncated(_m.MaternTruncation(order, n), t, u)

    elif family == "cauchy":

        def kern(t, u):
            return _c.cauchy_kernel(lam, t, u)

        def trunc(n, t, u):
            return _c.cauchy_truncated(lam, n, t, u)

    elif family == "gaussian":
        scale = _g.GaussianScale(lam)

        def kern(t, u):
            return _g.gaussian_kernel(scale, t, u)

        def trunc(n, t, u):
            return _g.gaussian_truncated(scale, n, t, u)

    else:
        raise ValueError(f"unknown family {family!r}")
    return kern, trunc


def truncation_sweep(family: str, n_list, sample_pairs, nu: int | None = None,
                     lam: float = 1.0, pointwise_tol: float = 1e-6) -> list[VerificationReport]:
    """Truncation-error reports over increasing n.

    Emits the analytic weighted-HS check per n (exact value for Gaussian,
    exact-vs-bound ratio in (0, 1] for Matern), the max pointwise error at
    the final n against ``pointwise_tol``, and an error-decay check between
    the first and last n.
    """
    n_list = list(n_list)
    if not n_list or any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("n_list must be nonempty and increasing")
    pairs = [(float(a), float(b)) for a, b in sample_pairs]
    kern, trunc = _family_kernel_and_truncated(family, nu, lam)
    ts = np.array([p[0] for p in pairs])
    us = np.array([p[1] for p in pairs])
    kvals = kern(ts, us)
    tag = f"{family}" + (f"/nu={nu}" if family == "matern" else "")
    reports = []
    errors = {}
    for n in n_list:
        errors[n] = float(np.max(np.abs(kvals - trunc(n, ts, us))))
        if family == "matern":
            order = _m.MaternOrder(nu, lam)
            exact = _m.matern_exact_hs_error(order, n)
            bound = _m.matern_truncation_error_bound(order, n)
            ratio = exact / bound
            reports.append(
                VerificationReport.scalar_check(
                    f"{tag}/hs_ratio/n={n}", ratio, 0.5, 0.5,
                    exact=exact, bound=bound,
                )
            )
        elif family == "gaussian":
            reports.append(
                VerificationReport.scalar_check(
                    f"{tag}/hs_exact/n={n}",
                    _g.gaussian_truncation_error(n),
                    3.0 ** (-n) / math.sqrt(2.0),
                    1e-15,
                )
            )
    n_last, n_first = n_list[-1], n_list[0]
    reports.append(
        VerificationReport.deviation_check(
            f"{tag}/pointwise/n={n_last}", errors[n_last], pointwise_tol,
            errors={str(k): v for k, v in errors.items()}, pairs=len(pairs),
        )
    )
    reports.append(
        VerificationReport.deviation_check(
            f"{tag}/pointwise_decay/{n_first}->{n_last}",
            max(0.0, errors[n_last] - errors[n_first]),
            1e-13,
            first=errors[n_first], last=errors[n_last],
        )
    )
    return reports


# ---------------------------------------------------------------------------
# suites


def _sample_pairs(count: int, lo: float, hi: float, seed: int) -> list[tuple[float, float]]:
    rng = np.random.default_rng(seed)
    pts = rng.uniform(lo, hi, size=(count, 2))
    return [(float(a), float(b)) for a, b in pts]


def suite_identities(quad_nodes: int = 128, seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    grid = np.linspace(-20.0, 20.0, 50)
    ks = range(-6, 7)
    reports = []
    for m in range(-6, 7):
        reports.append(check_identity("conjugate_symmetry", (m,), grid))
        shift_dev = max(
            check_identity("shift", (m, k), grid).computed for k in ks
        )
        reports.append(
            VerificationReport.deviation_check(
                f"identities/shift/m={m}/max_over_k", shift_dev, ALGEBRAIC_TOL,
                k_min=-6, k_max=6,
            )
        )
        mult_dev = max(
            check_identity("multiplication", (m, k), grid).computed for k in ks
        )
        reports.append(
            VerificationReport.deviation_check(
                f"identities/multiplication/m={m}/max_over_k", mult_dev, ALGEBRAIC_TOL,
                k_min=-6, k_max=6,
            )
        )
    for nu in range(7):
        reports.append(check_identity("binomial", (nu,), grid))
    # |phi_hat_m| is sqrt(2)/sqrt(1+w^2) for every m
    mod_dev = max(
        float(np.max(np.abs(np.abs(laguerre_fn_ft(m, grid)) - math.sqrt(2.0) / np.sqrt(1 + grid**2))))
        for m in range(-6, 7)
    )
    reports.append(
        VerificationReport.deviation_check("identities/modulus/max_over_m", mod_dev, ALGEBRAIC_TOL)
    )
    return reports


def _null_annihilation_residual(nu: int, m: int) -> float:
    """Max |(D+1)^{nu+1} psi0| over positive test points, by finite differences."""
    order = _m.MaternOrder(nu)
    bid = _m.MaternBasisId("null", m)
    stencils = {
        1: (np.array([-0.5, 0.0, 0.5]), 1),
        2: (np.array([1.0, -2.0, 1.0]), 2),
        3: (np.array([-0.5, 1.0, 0.0, -1.0, 0.5]), 3),
        4: (np.array([1.0, -4.0, 6.0, -4.0, 1.0]), 4),
    }
    tpts = [0.5, 1.0, 1.7, 2.5]
    worst = 0.0
    for t in tpts:
        if nu <= 2:
            # literal binomial expansion of (D+1)^{nu+1} at the stated step
            h = 1e-3
            total = _m.matern_psi(order, bid, t)
            for j in range(1, nu + 2):
                coeffs, power = stencils[j]
                offs = np.arange(len(coeffs)) - (len(coeffs) - 1) / 2.0
                vals = _m.matern_psi(order, bid, t + offs * h)
                total += math.comb(nu + 1, j) * float(coeffs @ vals) / h**power
        else:
            # (D+1)^{k} f = e^{-t} D^{k} (e^t f); e^t psi0 is a polynomial on
            # t > 0, so the stencil is exact and a larger step absorbs the
            # float64 roundoff that dominates 4th differences at h = 1e-3
            h = 0.05
            coeffs, power = stencils[nu + 1]
            offs = np.arange(len(coeffs)) - (len(coeffs) - 1) / 2.0
            pts = t + offs * h
            vals = np.exp(pts) * _m.matern_psi(order, bid, pts)
            total = math.exp(-t) * float(coeffs @ vals) / h**power
        worst = max(worst, abs(total))
    return worst


def suite_matern(quad_nodes: int = 128, seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    reports = []
    grid = DEFAULT_GRID
    # Gram matrices: diagonal = exact norms, off-diagonal = 0
    for nu in range(5):
        rule = gauss_laguerre_rule(quad_nodes, nu + 1.0)
        idx = list(range(13))
        G = gram_matrix("matern_plus", idx, rule, nu=nu)
        order = _m.MaternOrder(nu)
        expected = np.diag([_m.matern_psi_norm_sq(order, m) for m in idx])
        reports.append(
            VerificationReport.deviation_check(
                f"matern/gram_plus/nu={nu}", float(np.max(np.abs(G - expected))),
                QUADRATURE_TOL, nodes=quad_nodes, m_max=idx[-1],
            )
        )
    for nu in (0, 2, 4):
        rule = gauss_laguerre_rule(quad_nodes, nu + 1.0).reflected()
        idx = list(range(13))
        G = gram_matrix("matern_minus", idx, rule, nu=nu)
        order = _m.MaternOrder(nu)
        expected = np.diag([_m.matern_psi_norm_sq(order, m) for m in idx])
        reports.append(
            VerificationReport.deviation_check(
                f"matern/gram_minus/nu={nu}", float(np.max(np.abs(G - expected))),
                QUADRATURE_TOL, nodes=quad_nodes, m_max=idx[-1],
            )
        )
    # null-space symmetry psi0_{nu-m}(t) = (-1)^nu psi0_m(-t)
    for nu in range(7):
        order = _m.MaternOrder(nu)
        dev = 0.0
        for m in range(nu + 1):
            lhs = _m.matern_psi(order, _m.MaternBasisId("null", nu - m), grid)
            rhs = (-1.0) ** nu * _m.matern_psi(order, _m.MaternBasisId("null", m), -grid)
            dev = max(dev, float(np.max(np.abs(lhs - rhs))))
        reports.append(
            VerificationReport.deviation_check(
                f"matern/null_symmetry/nu={nu}", dev, ALGEBRAIC_TOL
            )
        )
    # uniform bound over the unified two-sided index
    tgrid = np.linspace(-8.0, 8.0, 801)
    for nu in range(5):
        order = _m.MaternOrder(nu)
        bound = _m.matern_psi_bound(order)
        peak = max(
            float(np.max(np.abs(_m.matern_psi_unified(order, m, tgrid))))
            for m in range(-30, 31)
        )
        reports.append(
            VerificationReport.deviation_check(
                f"matern/uniform_bound/nu={nu}", max(0.0, peak - bound), ALGEBRAIC_TOL,
                peak=peak, bound=bound,
            )
        )
    # opposite signs: the n = 1 truncation is already exact
    pairs = _sample_pairs(20, 0.1, 4.0, seed)
    for nu in range(4):
        order = _m.MaternOrder(nu)
        tr = _m.MaternTruncation(order, 1)
        dev = max(
            abs(_m.matern_kernel(order, -a, b) - _m.matern_truncated(tr, -a, b))
            for a, b in pairs
        )
        reports.append(
            VerificationReport.deviation_check(
                f"matern/sign_split/nu={nu}", dev, ALGEBRAIC_TOL
            )
        )
    # null-space sum reproduces the kernel at r(0, d); nu = 1, 2 are the
    # classical (1+d)e^-d and (1+d+d^2/3)e^-d closed forms
    dgrid = np.linspace(0.0, 6.0, 61)
    for nu in range(7):
        order = _m.MaternOrder(nu)
        nullsum = sum(
            _m.matern_psi(order, _m.MaternBasisId("null", m), 0.0)
            * _m.matern_psi(order, _m.MaternBasisId("null", m), dgrid)
            for m in range(nu + 1)
        )
        dev = float(np.max(np.abs(nullsum - _m.matern_kernel(order, 0.0, dgrid))))
        reports.append(
            VerificationReport.deviation_check(
                f"matern/null_reconstruction/nu={nu}", dev, ALGEBRAIC_TOL
            )
        )
    # annihilation by (D+1)^{nu+1} on the positive half line
    for nu in range(4):
        dev = max(_null_annihilation_residual(nu, m) for m in range(nu + 1))
        reports.append(
            VerificationReport.deviation_check(
                f"matern/null_annihilation/nu={nu}", dev, 1e-4
            )
        )
    # exact Hilbert--Schmidt error vs the n^{-(nu+1/2)} bound
    for nu in range(5):
        order = _m.MaternOrder(nu)
        sweep = truncation_sweep(
            "matern", [1, 2, 4, 8, 16, 32, 64], _sample_pairs(20, -3.0, 3.0, seed),
            nu=nu, pointwise_tol=math.inf,
        )
        reports.extend(r for r in sweep if "hs_ratio" in r.check_name)
    # trigamma closed form for the nu = 0 tail
    order0 = _m.MaternOrder(0)
    for n in (1, 7, 64):
        reports.append(
            VerificationReport.scalar_check(
                f"matern/hs_trigamma/n={n}",
                _m.matern_exact_hs_error(order0, n),
                math.sqrt(2.0 * float(polygamma(1, n + 1))),
                1e-14,
            )
        )
    # pointwise convergence of the truncated kernel (slow for small nu)
    for nu, tol in ((0, 5e-2), (1, 5e-3), (3, 1e-6)):
        sweep = truncation_sweep(
            "matern", [1, 2, 4, 8, 16, 32, 64, 128, 256],
            _sample_pairs(20, -3.0, 3.0, seed), nu=nu, pointwise_tol=tol,
        )
        reports.extend(r for r in sweep if "pointwise" in r.check_name)
    # feature map factorises the truncated kernel
    tr = _m.MaternTruncation(_m.MaternOrder(1), 8)
    pts = np.linspace(-3.0, 3.0, 13)
    F = np.vstack([_m.matern_feature_map(tr, p) for p in pts])
    gram = F @ F.T
    direct = _m.matern_truncated(tr, pts[:, None], pts[None, :])
    reports.append(
        VerificationReport.deviation_check(
            "matern/feature_factorization/nu=1",
            float(np.max(np.abs(gram - direct))), 1e-13,
        )
    )
    return reports


def suite_cauchy(quad_nodes: int = 128, seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    reports = []
    grid = DEFAULT_GRID
    # real basis from the explicit formulas vs sqrt(2) Re/Im of psi_m
    for kind in ("alpha", "beta"):
        dev = 0.0
        for m in range(13):
            psi = _c.cauchy_psi_complex(m, grid)
            derived = math.sqrt(2.0) * (psi.real if kind == "alpha" else psi.imag)
            direct = _c.cauchy_real_basis(kind, m, grid)
            dev = max(dev, float(np.max(np.abs(direct - derived))))
        reports.append(
            VerificationReport.deviation_check(
                f"cauchy/real_basis_consistency/{kind}", dev, ALGEBRAIC_TOL
            )
        )
    # conjugate symmetry psi_m^*(t) = -psi_{-m-1}(t) = psi_m(-t)
    dev = 0.0
    for m in range(-6, 7):
        psi = _c.cauchy_psi_complex(m, grid)
        dev = max(dev, float(np.max(np.abs(np.conj(psi) + _c.cauchy_psi_complex(-m - 1, grid)))))
        dev = max(dev, float(np.max(np.abs(np.conj(psi) - _c.cauchy_psi_complex(m, -grid)))))
    reports.append(
        VerificationReport.deviation_check("cauchy/conjugate_symmetry", dev, ALGEBRAIC_TOL)
    )
    pairs = _sample_pairs(20, -3.0, 3.0, seed)
    # geometric closed form of the positive-index partial sums
    for n in (1, 7, 40):
        dev = 0.0
        for t, u in pairs:
            direct = sum(
                np.conj(_c.cauchy_psi_complex(m, t)) * _c.cauchy_psi_complex(m, u)
                for m in range(n)
            )
            dev = max(dev, abs(direct - _c.cauchy_partial_sum_closed_form(n, t, u)))
        reports.append(
            VerificationReport.deviation_check(
                f"cauchy/geometric_partial/n={n}", dev, ALGEBRAIC_TOL
            )
        )
    # n -> infinity limit of the geometric sum
    dev = 0.0
    for t, u in pairs:
        limit = 0.5 / ((-1j * t - 1.0) * (1j * u - 1.0) - t * u)
        dev = max(dev, abs(_c.cauchy_partial_sum_closed_form(200, t, u) - limit))
    reports.append(
        VerificationReport.deviation_check("cauchy/geometric_limit/n=200", dev, 1e-10)
    )
    # complex and real expansions agree group-by-group
    dev = 0.0
    for n in (1, 2, 4, 8, 16, 32, 64):
        for t, u in pairs[:8]:
            complex_sum = sum(
                (np.conj(_c.cauchy_psi_complex(m, t)) * _c.cauchy_psi_complex(m, u)).real
                for m in range(-n, n)
            )
            dev = max(dev, abs(complex_sum - _c.cauchy_truncated(1.0, n, t, u)))
    reports.append(
        VerificationReport.deviation_check("cauchy/two_expansions/n<=64", dev, ALGEBRAIC_TOL)
    )
    # kernel reconstruction and the finite reduction at the origin
    sweep = truncation_sweep("cauchy", [1, 4, 16, 64, 256, 400], pairs, pointwise_tol=1e-10)
    reports.extend(r for r in sweep if "pointwise" in r.check_name)
    tgrid = np.linspace(-4.0, 4.0, 81)
    dev = float(
        np.max(np.abs(_c.cauchy_truncated(1.0, 1, tgrid, 0.0) - 1.0 / (tgrid**2 + 1.0)))
    )
    reports.append(
        VerificationReport.deviation_check("cauchy/origin_reduction", dev, ALGEBRAIC_TOL)
    )
    # |psi_m(t)| <= 2^{-1/2} |t|^m (t^2+1)^{-(m+1)/2} <= 2^{-1/2}
    dev = 0.0
    for m in range(31):
        mod = np.abs(_c.cauchy_psi_complex(m, grid))
        envelope = (
            2.0**-0.5 * np.abs(grid) ** m / (grid**2 + 1.0) ** ((m + 1) / 2.0)
        )
        dev = max(dev, float(np.max(mod - envelope)))
    reports.append(
        VerificationReport.deviation_check("cauchy/modulus_envelope", max(0.0, dev), ALGEBRAIC_TOL)
    )
    return reports


def suite_gaussian(quad_nodes: int = 128, seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    reports = []
    grid = DEFAULT_GRID
    hr = gauss_hermite_rule(quad_nodes)
    # Hermite functions are orthonormal under the unit weight
    G = gram_matrix("hermite_fn", range(16), hr)
    reports.append(
        VerificationReport.deviation_check(
            "gaussian/hermite_fn_orthonormal", float(np.max(np.abs(G - np.eye(16)))), 1e-10
        )
    )
    # basis Gram under the Gaussian weight: diag = 2/3^{m+1}
    G = gram_matrix("gaussian_psi", range(13), hr)
    expected = np.diag([2.0 / 3.0 ** (m + 1) for m in range(13)])
    reports.append(
        VerificationReport.deviation_check(
            "gaussian/psi_gram", float(np.max(np.abs(G - expected))), QUADRATURE_TOL
        )
    )
    # Mercer eigenfunctions are orthonormal
    G = gram_matrix("mercer", range(13), hr)
    reports.append(
        VerificationReport.deviation_check(
            "gaussian/mercer_orthonormal", float(np.max(np.abs(G - np.eye(13)))), 1e-10
        )
    )
    # sqrt(mu_m) theta_m == psi_m at alpha = sqrt(2/3)
    params = _g.MercerParams.from_alpha(_g.MERCER_ALPHA_DEFAULT)
    dev = 0.0
    for m in range(16):
        lhs = math.sqrt(_g.mercer_eigenvalue(params, m)) * _g.mercer_eigenfunction(params, m, grid)
        dev = max(dev, float(np.max(np.abs(lhs - _g.gaussian_psi(m, grid)))))
    reports.append(
        VerificationReport.deviation_check("gaussian/mercer_relation", dev, ALGEBRAIC_TOL)
    )
    # eigenvalues sum to their geometric closed form
    s = params.alpha**2 + params.delta_sq + 0.5
    closed = math.sqrt(params.alpha**2 / s) / (1.0 - 0.5 / s)
    partial = sum(_g.mercer_eigenvalue(params, m) for m in range(80))
    reports.append(
        VerificationReport.scalar_check(
            "gaussian/eigenvalue_sum", partial, closed, 1e-12
        )
    )
    # exact Hilbert--Schmidt error vs 128-node tensor quadrature
    t_nodes = hr.nodes / _g.MERCER_ALPHA_DEFAULT
    w2 = np.outer(hr.weights, hr.weights) / math.pi
    T, U = np.meshgrid(t_nodes, t_nodes, indexing="ij")
    scale = _g.GaussianScale(1.0)
    r_full = _g.gaussian_kernel(scale, T, U)
    for n in range(1, 7):
        r_n = _g.gaussian_truncated(scale, n, T, U)
        quad_sq = float(np.sum(w2 * (r_full - r_n) ** 2))
        quad = math.sqrt(max(quad_sq, 0.0))
        exact = _g.gaussian_truncation_error(n)
        reports.append(
            VerificationReport.scalar_check(
                f"gaussian/hs_quadrature/n={n}", quad, exact, 1e-6 * exact,
                nodes=quad_nodes,
            )
        )
    # Mehler series vs closed form on a 5x5 grid at rho = 1/3
    mgrid = np.linspace(-2.0, 2.0, 5)
    dev = 0.0
    for x in mgrid:
        for y in mgrid:
            rep = _g.mehler_check(1.0 / 3.0, float(x), float(y))
            dev = max(dev, rep.abs_error)
    reports.append(
        VerificationReport.deviation_check("gaussian/mehler_grid", dev, 1e-10)
    )
    # rho = 1/3 substitution reproduces the kernel
    pairs = _sample_pairs(20, -3.0, 3.0, seed)
    dev = 0.0
    for t, u in pairs:
        rep = _g.mehler_check(1.0 / 3.0, 2.0 * t / math.sqrt(3.0), 2.0 * u / math.sqrt(3.0))
        lhs = (2.0 * math.sqrt(2.0) / 3.0) * math.exp((t * t + u * u) / 3.0) * rep.computed
        dev = max(dev, abs(lhs - _g.gaussian_kernel(_g.GaussianScale(1.0), t, u)))
    reports.append(
        VerificationReport.deviation_check("gaussian/mehler_kernel", dev, 1e-10)
    )
    # multiplication theorem: psi_m as a combination of Hermite functions;
    # matching the m = 0 term pins the constant at (2 sqrt(2 pi)/3)^{1/2}
    dev = 0.0
    tg = np.linspace(-4.0, 4.0, 41)
    for m in range(21):
        acc = np.zeros_like(tg)
        logc0 = 0.5 * (
            math.log(2.0 * math.sqrt(2.0 * math.pi) / 3.0)
            + m * math.log(2.0 / 3.0)
            + gammaln(m + 1)
        )
        for k in range(m // 2 + 1):
            logc = logc0 - k * math.log(4.0) - gammaln(k + 1) - 0.5 * gammaln(m - 2 * k + 1)
            acc += math.exp(logc) * _g.hermite_fn(m - 2 * k, math.sqrt(2.0 / 3.0) * tg)
        dev = max(dev, float(np.max(np.abs(acc - _g.gaussian_psi(m, tg)))))
    reports.append(
        VerificationReport.deviation_check("gaussian/hermite_reexpression", dev, 1e-10)
    )
    # kappa = 1 reduces the generalised basis to the standard one
    dev = 0.0
    for m in range(13):
        dev = max(
            dev,
            float(np.max(np.abs(_g.gaussian_psi_scaled(m, 1.0, grid) - _g.gaussian_psi(m, grid)))),
        )
    reports.append(
        VerificationReport.deviation_check("gaussian/scaled_kappa1", dev, ALGEBRAIC_TOL)
    )
    # generalised basis still reproduces the kernel pointwise (kappa = 0.7)
    dev = 0.0
    for t, u in pairs[:8]:
        acc = sum(
            _g.gaussian_psi_scaled(m, 0.7, t) * _g.gaussian_psi_scaled(m, 0.7, u)
            for m in range(120)
        )
        dev = max(dev, abs(acc - _g.gaussian_kernel(_g.GaussianScale(1.0), t, u)))
    reports.append(
        VerificationReport.deviation_check("gaussian/scaled_kappa0.7_converges", dev, 1e-8)
    )
    # truncated kernels dip negative for small n
    tg = np.linspace(-6.0, 6.0, 1201)
    for n in (3, 11):
        low = float(np.min(_g.gaussian_truncated(scale, n, tg, 0.0)))
        reports.append(
            VerificationReport.deviation_check(
                f"gaussian/negative_exhibit/n={n}", max(0.0, low + 1e-6), 0.0, min_value=low
            )
        )
    # pointwise convergence at n = 60
    sweep = truncation_sweep("gaussian", [1, 2, 4, 8, 16, 32, 60], pairs, pointwise_tol=1e-8)
    reports.extend(r for r in sweep if "pointwise" in r.check_name)
    return reports


def suite_oracle(quad_nodes: int = 128, seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    reports = []
    grid = DEFAULT_GRID
    for nu in range(4):
        order = _m.MaternOrder(nu)
        dev = 0.0
        for m in range(9):
            bid = _m.MaternBasisId("plus", m)
            for t in grid:
                dev = max(
                    dev,
                    abs(convolution_oracle("matern", m, float(t), nu=nu)
                        - _m.matern_psi(order, bid, float(t))),
                )
        reports.append(
            VerificationReport.deviation_check(
                f"oracle/matern_plus/nu={nu}", dev, 1e-6, m_max=8, grid=len(grid)
            )
        )
    # the convolution vanishes identically left of the origin
    dev = max(
        abs(convolution_oracle("matern", m, t, nu=1))
        for m in range(9)
        for t in (-3.0, -1.0, -0.25)
    )
    reports.append(
        VerificationReport.deviation_check("oracle/matern_negative_side", dev, ALGEBRAIC_TOL)
    )
    # null-space members come out of the same convolution at negative indices
    for nu in range(3):
        order = _m.MaternOrder(nu)
        dev = 0.0
        for m in range(nu + 1):
            bid = _m.MaternBasisId("null", m)
            for t in grid:
                dev = max(
                    dev,
                    abs(convolution_oracle("matern", -nu - 1 + m, float(t), nu=nu)
                        - _m.matern_psi(order, bid, float(t))),
                )
        reports.append(
            VerificationReport.deviation_check(
                f"oracle/matern_null/nu={nu}", dev, 1e-6
            )
        )
    dev = 0.0
    for m in range(11):
        for t in grid:
            dev = max(
                dev,
                abs(convolution_oracle("gaussian", m, float(t)) - _g.gaussian_psi(m, float(t))),
            )
    reports.append(
        VerificationReport.deviation_check("oracle/gaussian", dev, 1e-6, m_max=10)
    )
    return reports


_SUITES = {
    "identities": suite_identities,
    "matern": suite_matern,
    "cauchy": suite_cauchy,
    "gaussian": suite_gaussian,
    "oracle": suite_oracle,
}

SUITE_NAMES = tuple(_SUITES) + ("all",)


def run_suite(name: str, tol: float | None = None, quad_nodes: int = 128,
              seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    """Run one named suite (or ``all``), sorted by check name.

    ``tol`` overrides every report's tolerance (the pass flags are
    recomputed); ``quad_nodes`` sets the rule sizes of quadrature-backed
    checks.
    """
    if name == "all":
        reports = []
        for fn in _SUITES.values():
            reports.extend(fn(quad_nodes=quad_nodes, seed=seed))
    elif name in _SUITES:
        reports = _SUITES[name](quad_nodes=quad_nodes, seed=seed)
    else:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES}")
    if tol is not None:
        reports = [r.with_tolerance(tol) for r in reports]
    return sorted(reports, key=lambda r: r.check_name)
