#!/usr/bin/env python3

"""Absorption time T of the Kingman coalescent and its finite-sample versions T_n.

T_n is the sum of independent exponential holding times with rates
lambda_k = k(k-1)/2, 2 <= k <= n, hence hypoexponential with density
sum_k a_nk lambda_k e^{-lambda_k t}; T is the limit n -> infinity.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np
from coalescent_zeta.algebra.polynomial import ZetaPolynomial, zeta
from coalescent_zeta.core.config import cfg
from coalescent_zeta.core.errors import UnreliableTailError
from coalescent_zeta.series.recursion import (
    SeriesKind,
    diagonal_series_truncated,
    solve_closed,
)
from scipy import integrate

__all__ = [
    "MergeRates",
    "HypoexpCoefficients",
    "DensityEstimate",
    "cumulant_T",
    "moment_T",
    "cumulant_T_series",
    "moment_T_series",
    "moment_T_ordered_oracle",
    "hypoexp_coefficients",
    "cdf_T_n",
    "density_g_n",
    "density_g",
    "cumulant_T_n",
    "moment_T_n",
    "cumulants_to_moments",
    "integrate_density",
]


class MergeRates(object):
    """Merge rates lambda_k = k(k-1)/2 of the block-counting chain."""

    @staticmethod
    def rate(k):
        err_str = "Merge rates are indexed by k >= 1, got {}"
        assert k >= 1, err_str.format(k)
        return Fraction(k * (k - 1), 2)

    @staticmethod
    def rates(n):
        """(lambda_1, ..., lambda_n), lambda_1 = 0."""
        return tuple(MergeRates.rate(k) for k in range(1, n + 1))


def _check_order(j):
    err_str = "Cumulant and moment orders start at 1, got {}"
    assert j >= 1, err_str.format(j)


def cumulant_T(j):
    """kappa_j(T) = (-1)^j 2^{j+1} sum_m (2j-2m-1)!/(j-2m)! zeta(2m)."""
    _check_order(j)
    total = ZetaPolynomial.zero()
    for m in range(j // 2 + 1):
        weight = math.factorial(2 * j - 2 * m - 1) // math.factorial(j - 2 * m)
        total += weight * zeta(2 * m)
    sign = -1 if j % 2 else 1
    return total * (sign * 2 ** (j + 1))


def moment_T(j):
    """E(T^j) = (-1)^j j 2^{j+1} sum_m (2m-1)(1-2^{1-2m})(2j-2m-2)!/(j-2m)! zeta(2m)."""
    _check_order(j)
    total = ZetaPolynomial.zero()
    for m in range(j // 2 + 1):
        ratio = Fraction(math.factorial(2 * j - 2 * m - 2), math.factorial(j - 2 * m))
        weight = (2 * m - 1) * (1 - Fraction(2) ** (1 - 2 * m)) * ratio
        total += weight * zeta(2 * m)
    sign = -1 if j % 2 else 1
    return total * (sign * j * 2 ** (j + 1))


def cumulant_T_series(j, big_k=None):
    """kappa_j(T) = (j-1)! 2^j sum_{k>=2} 1/(k^j (k-1)^j), truncated at K."""
    _check_order(j)
    est = diagonal_series_truncated(SeriesKind.UNSIGNED, j, big_k)
    return _scale_estimate(est, math.factorial(j - 1) * 2 ** j)


def moment_T_series(j, big_k=None):
    """E(T^j) = j! 2^j sum_{k>=2} (-1)^k (2k-1)/(k^j (k-1)^j), paired and truncated."""
    _check_order(j)
    est = diagonal_series_truncated(SeriesKind.SIGNED, j, big_k)
    return _scale_estimate(est, math.factorial(j) * 2 ** j)


def _scale_estimate(est, factor):
    return type(est)(
        est.value * factor,
        est.tail_bound * factor,
        est.rounding_bound * factor,
        est.terms,
    )


def moment_T_ordered_oracle(j, kmax):
    """j! 2^j sum over 2 <= k_1 <= ... <= k_j <= kmax of prod 1/(k_i (k_i - 1)).

    The ordered-tuple sum is the complete homogeneous symmetric polynomial h_j of
    x_k = 1/(k(k-1)); it is accumulated over k with h_r = cumsum(x * h_{r-1}).
    """
    err_str = "The ordered-tuple oracle supports 1 <= j <= 4, got {}"
    assert 1 <= j <= 4, err_str.format(j)
    err_str = "kmax must be at least 2, got {}"
    assert kmax >= 2, err_str.format(kmax)
    k = np.arange(2, kmax + 1, dtype=np.float64)
    x = 1.0 / (k * (k - 1.0))
    h = np.ones_like(x)
    for _ in range(j):
        h = np.cumsum(x * h)
    return math.factorial(j) * 2 ** j * float(h[-1])


@dataclass(frozen=True)
class HypoexpCoefficients(object):
    """a_nk = (-1)^k (2k-1) b_nk, b_nk = n!(n-1)!/((n-k)!(n+k-1)!), 2 <= k <= n."""

    n: int
    a: Tuple[Fraction, ...]

    def __post_init__(self):
        err_str = "Hypoexponential coefficients must sum to 1 (n={})"
        assert sum(self.a) == 1, err_str.format(self.n)

    def coefficient(self, k):
        return self.a[k - 2]

    def b(self, k):
        return abs(self.coefficient(k)) / (2 * k - 1)

    def as_floats(self):
        return np.array([float(c) for c in self.a])


def hypoexp_coefficients(n):
    """Exact coefficients a_n2, ..., a_nn of the law of T_n."""
    err_str = "Sample size must be at least 2, got {}"
    assert n >= 2, err_str.format(n)
    num = math.factorial(n) * math.factorial(n - 1)
    coeffs = []
    for k in range(2, n + 1):
        b = Fraction(num, math.factorial(n - k) * math.factorial(n + k - 1))
        coeffs.append((-1) ** k * (2 * k - 1) * b)
    return HypoexpCoefficients(n, tuple(coeffs))


def _rates_float(n):
    return np.array([float(MergeRates.rate(k)) for k in range(2, n + 1)])


def _hypoexp_sum(n, t, with_rate):
    coeffs = hypoexp_coefficients(n).as_floats()
    lam = _rates_float(n)
    t_arr = np.atleast_1d(np.asarray(t, dtype=np.float64))
    err_str = "Times must be nonnegative"
    assert np.all(t_arr >= 0), err_str
    weights = coeffs * lam if with_rate else coeffs
    values = np.exp(-np.outer(t_arr, lam)) @ weights
    return values if np.ndim(t) else float(values[0])


def cdf_T_n(n, t):
    """P(T_n <= t) = 1 - sum_k a_nk e^{-lambda_k t}; t may be an array."""
    values = 1.0 - _hypoexp_sum(n, t, with_rate=False)
    return np.clip(values, 0.0, 1.0) if np.ndim(values) else min(max(values, 0.0), 1.0)


def density_g_n(n, t):
    """Density of T_n, sum_k a_nk lambda_k e^{-lambda_k t}; t may be an array."""
    return _hypoexp_sum(n, t, with_rate=True)


@dataclass(frozen=True)
class DensityEstimate(object):
    """Truncated value of the limiting density with a bound on the omitted tail."""

    value: float
    tail_bound: float
    reliable: bool


def _density_term(k, t):
    lam = k * (k - 1) / 2.0
    return (-1.0) ** k * (2 * k - 1) * lam * math.exp(-lam * t)


def density_g(t, big_k=None, strict=True):
    """Limiting density g(t) = sum_{k>=2} (-1)^k (2k-1) lambda_k e^{-lambda_k t}.

    The tail beyond K is dominated by a geometric series: for k > K the ratio of
    consecutive magnitudes is at most rho = (2K+3)/(2K+1) (K+2)/K e^{-(K+1)t}.
    With strict=True an UnreliableTailError is raised when t < DENSITY.MIN_T or the
    tail bound exceeds DENSITY.TOL; otherwise the estimate is flagged unreliable.
    """
    big_k = cfg.DENSITY.TRUNC if big_k is None else big_k
    err_str = "Density needs t > 0 and K >= 2, got t={}, K={}"
    assert t > 0 and big_k >= 2, err_str.format(t, big_k)
    k = np.arange(2, big_k + 1, dtype=np.float64)
    lam = k * (k - 1.0) / 2.0
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    value = math.fsum(signs * (2.0 * k - 1.0) * lam * np.exp(-lam * t))
    rho = (2 * big_k + 3) / (2 * big_k + 1) * (big_k + 2) / big_k
    rho *= math.exp(-(big_k + 1) * t)
    if rho < 1.0:
        tail = abs(_density_term(big_k + 1, t)) / (1.0 - rho)
    else:
        tail = math.inf
    reliable = t >= cfg.DENSITY.MIN_T and tail <= cfg.DENSITY.TOL
    if strict and not reliable:
        err_str = "Density series at t={} has tail bound {:.3g} (K={})"
        raise UnreliableTailError(err_str.format(t, tail, big_k), tail_bound=tail)
    return DensityEstimate(value, tail, reliable)


def cumulant_T_n(n, j):
    """kappa_j(T_n) = (j-1)! sum_{k=2}^{n} lambda_k^{-j}."""
    _check_order(j)
    err_str = "Sample size must be at least 2, got {}"
    assert n >= 2, err_str.format(n)
    total = sum(1 / MergeRates.rate(k) ** j for k in range(2, n + 1))
    return math.factorial(j - 1) * total


def moment_T_n(n, j):
    """E(T_n^j) = j! sum_{k=2}^{n} a_nk lambda_k^{-j}."""
    _check_order(j)
    coeffs = hypoexp_coefficients(n)
    total = sum(
        coeffs.coefficient(k) / MergeRates.rate(k) ** j for k in range(2, n + 1)
    )
    return math.factorial(j) * total


def cumulants_to_moments(kappas):
    """Raw moments m_1..m_J from cumulants kappa_1..kappa_J.

    m_n = sum_{k=1}^{n} C(n-1, k-1) kappa_k m_{n-k}, m_0 = 1. The entries may be
    ZetaPolynomial or rational values.
    """
    kappas = list(kappas)
    assert kappas, "At least one cumulant is required"
    moments = [1]
    for n in range(1, len(kappas) + 1):
        total = 0
        for k in range(1, n + 1):
            total = total + math.comb(n - 1, k - 1) * kappas[k - 1] * moments[n - k]
        moments.append(total)
    return moments[1:]


def integrate_density(fun, j=0, lo=None, hi=None):
    """(value, abserr) of int_lo^hi t^j fun(t) dt by adaptive Gauss-Kronrod."""
    lo = cfg.DENSITY.MIN_T if lo is None else lo
    hi = cfg.DENSITY.T_MAX if hi is None else hi
    value, abserr = integrate.quad(
        lambda t: t ** j * fun(t), lo, hi, epsabs=1e-11, epsrel=1e-11, limit=400
    )
    return value, abserr
