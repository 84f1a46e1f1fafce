"""Gaussian quadrature rules for the weighted integrals behind every cross-check.

Rules are built by Golub--Welsch: nodes are eigenvalues of the symmetric
tridiagonal Jacobi matrix of the weight's orthogonal polynomials, weights
come from the first eigenvector components.  The eigenproblem is solved
with ``scipy.linalg.eigh_tridiagonal``.

Convention: a rule integrates ``f`` against its base weight,

    integrate(rule, f) ~ int f(x) w_base(x) dx,

so integrands must be supplied with the base weight divided out.  Products
such as ``exp(-2t)`` times a polynomial are the caller's responsibility,
normally via the change of variables s = 2t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

__all__ = [
    "QuadratureRule",
    "gauss_laguerre_rule",
    "gauss_hermite_rule",
    "uniform_truncated_rule",
    "integrate",
    "MAX_NODES",
]

MAX_NODES = 256

REAL_LINE = "real_line"
POSITIVE_HALF_LINE = "positive_half_line"
NEGATIVE_HALF_LINE = "negative_half_line"


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights of a fixed quadrature rule.

    ``domain`` is one of ``real_line``, ``positive_half_line``,
    ``negative_half_line``; ``base_weight`` names the weight the rule
    integrates against.
    """

    nodes: np.ndarray
    weights: np.ndarray
    domain: str
    base_weight: str
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.ndim != 1 or weights.ndim != 1 or nodes.size != weights.size:
            raise ValueError("nodes and weights must be 1-d arrays of equal length")
        if np.any(np.diff(nodes) <= 0):
            raise ValueError("nodes must be strictly increasing")
        if np.any(weights <= 0):
            raise ValueError("weights must be positive")
        nodes.flags.writeable = False
        weights.flags.writeable = False
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return self.nodes.size

    def reflected(self) -> "QuadratureRule":
        """Mirror the rule about the origin (half-line rules only)."""
        if self.domain == POSITIVE_HALF_LINE:
            dom = NEGATIVE_HALF_LINE
        elif self.domain == NEGATIVE_HALF_LINE:
            dom = POSITIVE_HALF_LINE
        else:
            raise ValueError("only half-line rules can be reflected")
        return QuadratureRule(
            nodes=-self.nodes[::-1],
            weights=self.weights[::-1].copy(),
            domain=dom,
            base_weight=self.base_weight,
            metadata=dict(self.metadata),
        )


def _check_node_count(n: int) -> None:
    if not 1 <= n <= MAX_NODES:
        raise ValueError(f"node count must be in [1, {MAX_NODES}], got {n}")


def gauss_laguerre_rule(n: int, eta: float = 0.0) -> QuadratureRule:
    """Generalised Gauss--Laguerre rule for weight t^eta e^{-t} on (0, inf).

    Exact for polynomials of degree <= 2n-1.  Jacobi coefficients:
    a_k = 2k + eta + 1, b_k = sqrt(k (k + eta)).
    """
    _check_node_count(n)
    if eta < 0:
        raise ValueError(f"eta must be >= 0, got {eta}")
    k = np.arange(n, dtype=float)
    diag = 2.0 * k + eta + 1.0
    if n > 1:
        j = np.arange(1, n, dtype=float)
        off = np.sqrt(j * (j + eta))
        nodes, vecs = eigh_tridiagonal(diag, off, lapack_driver="stev")
    else:
        nodes, vecs = np.array([diag[0]]), np.array([[1.0]])
    weights = math.gamma(eta + 1.0) * vecs[0] ** 2
    # past ~190 nodes the outermost weights (~e^{-950}) underflow float64;
    # they would contribute exactly zero, so keep the representable part
    keep = weights > 0.0
    return QuadratureRule(
        nodes=nodes[keep],
        weights=weights[keep],
        domain=POSITIVE_HALF_LINE,
        base_weight=f"gauss_laguerre(eta={eta:g})",
        metadata={"n": n, "eta": float(eta), "kept": int(keep.sum())},
    )


def gauss_hermite_rule(n: int) -> QuadratureRule:
    """Gauss--Hermite rule for weight e^{-t^2} on the real line.

    Exact for polynomials of degree <= 2n-1.
    """
    _check_node_count(n)
    if n > 1:
        off = np.sqrt(np.arange(1, n, dtype=float) / 2.0)
        nodes, vecs = eigh_tridiagonal(np.zeros(n), off, lapack_driver="stev")
    else:
        nodes, vecs = np.array([0.0]), np.array([[1.0]])
    weights = math.sqrt(math.pi) * vecs[0] ** 2
    return QuadratureRule(
        nodes=nodes,
        weights=weights,
        domain=REAL_LINE,
        base_weight="gauss_hermite",
        metadata={"n": n},
    )


def _legendre_panel(n: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (b - a) * x + 0.5 * (b + a), 0.5 * (b - a) * w


def uniform_truncated_rule(n: int, R: float) -> QuadratureRule:
    """Composite rule for weight 1 on [-R, R].

    Panels grow geometrically away from the origin so that slowly decaying
    rational integrands (e.g. 1/(1+w^2) out to R ~ 1e8) are resolved with a
    modest node budget; each panel carries a 16-point Gauss--Legendre rule.
    """
    _check_node_count(n)
    if R <= 0:
        raise ValueError(f"R must be positive, got {R}")
    if n < 4:
        per_panel = n
        bounds = [(-R, R)]
    elif R <= 1.0 or n < 64:
        per_panel = n // 2
        bounds = [(-R, 0.0), (0.0, R)]
    else:
        # per side: one linear panel near the origin plus geometric panels
        # out to R, 16 Gauss--Legendre nodes each
        per_panel = 16
        geo = n // 32 - 1
        edges = np.geomspace(1.0, R, geo + 1)
        bounds = [(0.0, edges[0])] + [(edges[i], edges[i + 1]) for i in range(geo)]
        bounds = [(-b, -a) for (a, b) in reversed(bounds)] + bounds
    nodes, weights = [], []
    for a, b in bounds:
        x, w = _legendre_panel(per_panel, a, b)
        nodes.append(x)
        weights.append(w)
    nodes = np.concatenate(nodes)
    weights = np.concatenate(weights)
    order = np.argsort(nodes)
    return QuadratureRule(
        nodes=nodes[order],
        weights=weights[order],
        domain=REAL_LINE,
        base_weight=f"uniform_truncated(R={R:g})",
        metadata={"n": n, "R": float(R)},
    )


def integrate(rule: QuadratureRule, f: Callable) -> float:
    """Apply the rule: sum_i w_i f(x_i).

    ``f`` must accept an ndarray of nodes (or be scalar-callable) and may
    not return non-finite values at any node.
    """
    try:
        vals = np.asarray(f(rule.nodes), dtype=float)
    except (TypeError, ValueError):
        vals = np.array([float(f(x)) for x in rule.nodes])
    if vals.shape != rule.nodes.shape:
        vals = np.broadcast_to(vals, rule.nodes.shape)
    bad = ~np.isfinite(vals)
    if np.any(bad):
        i = int(np.argmax(bad))
        raise ValueError(
            f"integrand is not finite at node {i} (x={rule.nodes[i]!r}): {vals[i]!r}"
        )
    return float(rule.weights @ vals)
