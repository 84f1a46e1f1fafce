"""Independent test oracles: exact rational evaluation of the defining sums.

These deliberately use the explicit binomial-sum definitions (slow,
cancellation-prone in floats, exact over Fraction) so the recurrence-based
library code is checked against an arithmetic path it shares nothing with.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial


def laguerre_sum(m: int, eta: int, t: Fraction) -> Fraction:
    """L_m^(eta)(t) = sum_k C(m+eta, m-k) (-1)^k / k! t^k, exactly."""
    acc = Fraction(0)
    for k in range(m + 1):
        acc += Fraction(comb(m + eta, m - k) * (-1) ** k, factorial(k)) * t**k
    return acc


def hermite_sum(m: int, t: Fraction) -> Fraction:
    """H_m(t) = m! sum_{k<=m/2} (-1)^k / (k! (m-2k)!) (2t)^{m-2k}, exactly."""
    acc = Fraction(0)
    for k in range(m // 2 + 1):
        acc += Fraction((-1) ** k, factorial(k) * factorial(m - 2 * k)) * (2 * t) ** (m - 2 * k)
    return factorial(m) * acc


def cauchy_alpha_sum(m: int, t: Fraction) -> Fraction:
    """Real Cauchy basis alpha_m from the explicit even/odd-split sums."""
    tt = t * t
    if m % 2 == 0:
        half = m // 2
        s = sum(
            Fraction(comb(m + 1, 2 * k)) * (-1) ** k * tt**k for k in range(half + 1)
        )
        return Fraction((-1) ** half) * t**m / (tt + 1) ** (m + 1) * s
    half = (m - 1) // 2
    s = sum(
        Fraction(comb(m + 1, 2 * k + 1)) * (-1) ** k * t ** (2 * k + 1)
        for k in range(half + 1)
    )
    return Fraction((-1) ** half) * t**m / (tt + 1) ** (m + 1) * s


def cauchy_beta_sum(m: int, t: Fraction) -> Fraction:
    """Real Cauchy basis beta_m from the explicit even/odd-split sums."""
    tt = t * t
    if m % 2 == 0:
        half = m // 2
        s = sum(
            Fraction(comb(m + 1, 2 * k + 1)) * (-1) ** k * t ** (2 * k + 1)
            for k in range(half + 1)
        )
        return Fraction((-1) ** half) * t**m / (tt + 1) ** (m + 1) * s
    half = (m - 1) // 2
    s = sum(
        Fraction(comb(m + 1, 2 * k)) * (-1) ** k * tt**k for k in range(half + 2)
    )
    return Fraction((-1) ** (half + 1)) * t**m / (tt + 1) ** (m + 1) * s
