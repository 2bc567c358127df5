#!/usr/bin/env python3

"""Total tree length L_n = sum_{k=2}^{n} k tau_k of the n-coalescent.

k tau_k is exponential with rate mu_k = lambda_k / k = (k-1)/2, so L_n has the law
of the maximum of n-1 independent Exp(1/2) variables and G_n = L_n/2 - log n
converges to the standard Gumbel law.
"""

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

import mpmath
import numpy as np
from coalescent_zeta.algebra.numeric import EULER_GAMMA
from coalescent_zeta.algebra.rational import harmonic, power_sum
from coalescent_zeta.core.config import cfg
from coalescent_zeta.core.errors import ComplexityGuardError
from scipy import integrate

__all__ = [
    "EdgeRates",
    "ShiftedCumulant",
    "cumulant_L",
    "moment_L_alternating",
    "moment_L_ordered",
    "moment_L_quadrature",
    "cdf_L",
    "density_L",
    "gumbel_shift_cumulants",
    "mean_L_asymptotic_error",
]


class EdgeRates(object):
    """Rates mu_k = (k-1)/2 of the total edge length k tau_k, k >= 2."""

    @staticmethod
    def rate(k):
        err_str = "Edge rates are indexed by k >= 2, got {}"
        assert k >= 2, err_str.format(k)
        return Fraction(k - 1, 2)


def _check_args(n, j):
    err_str = "Tree length needs n >= 2 and j >= 1, got n={}, j={}"
    assert n >= 2 and j >= 1, err_str.format(n, j)


def cumulant_L(n, j):
    """kappa_j(L_n) = (j-1)! 2^j sum_{k=1}^{n-1} 1/k^j."""
    _check_args(n, j)
    return math.factorial(j - 1) * 2 ** j * power_sum(n - 1, j)


def moment_L_alternating(n, j):
    """E(L_n^j) = j! 2^j sum_{k=1}^{n-1} (-1)^{k+1} C(n-1, k) / k^j."""
    _check_args(n, j)
    total = sum(
        Fraction((-1) ** (k + 1) * math.comb(n - 1, k), k ** j) for k in range(1, n)
    )
    return math.factorial(j) * 2 ** j * total


def moment_L_ordered(n, j):
    """E(L_n^j) = j! 2^j sum over 1 <= k_1 <= ... <= k_j <= n-1 of 1/(k_1 ... k_j)."""
    _check_args(n, j)
    count = math.comb(n - 1 + j - 1, j)
    if count > cfg.ENUM.BUDGET:
        err_str = "Ordered-tuple sum over {} tuples exceeds ENUM.BUDGET={}"
        raise ComplexityGuardError(err_str.format(count, cfg.ENUM.BUDGET))
    denom = functools.reduce(math.lcm, range(1, n), 1) ** j
    total = 0
    for tup in combinations_with_replacement(range(1, n), j):
        total += denom // math.prod(tup)
    return math.factorial(j) * 2 ** j * Fraction(total, denom)


def cdf_L(n, t):
    """P(L_n <= t) = (1 - e^{-t/2})^{n-1}; t may be an array."""
    err_str = "Sample size must be at least 2, got {}"
    assert n >= 2, err_str.format(n)
    t = np.asarray(t, dtype=np.float64)
    values = (-np.expm1(-np.maximum(t, 0.0) / 2.0)) ** (n - 1)
    return values if values.ndim else float(values)


def density_L(n, t):
    """Density (n-1)/2 e^{-t/2} (1 - e^{-t/2})^{n-2} of L_n; t may be an array."""
    err_str = "Sample size must be at least 2, got {}"
    assert n >= 2, err_str.format(n)
    t = np.asarray(t, dtype=np.float64)
    values = (n - 1) / 2.0 * np.exp(-t / 2.0) * (-np.expm1(-t / 2.0)) ** (n - 2)
    values = np.where(t >= 0, values, 0.0)
    return values if values.ndim else float(values)


def moment_L_quadrature(n, j):
    """E(L_n^j) = int_0^inf j t^{j-1} (1 - P(L_n <= t)) dt by adaptive quadrature."""
    _check_args(n, j)
    value, _ = integrate.quad(
        lambda t: j * t ** (j - 1) * (1.0 - cdf_L(n, t)),
        0.0,
        np.inf,
        epsabs=1e-12,
        epsrel=1e-12,
        limit=400,
    )
    return value


@dataclass(frozen=True)
class ShiftedCumulant(object):
    """kappa_j(G_n) for G_n = L_n/2 - log n.

    For j = 1 the value is H_{n-1} - log n: an exact harmonic part plus the
    symbolic offset -log(n). For j >= 2 it is the rational (j-1)! sum 1/k^j.
    The exact part is computed on first access.
    """

    n: int
    j: int
    _exact: list = field(default_factory=list, repr=False, compare=False)

    @property
    def log_offset(self):
        """Argument x of the symbolic term -log(x) (None for j >= 2)."""
        return self.n if self.j == 1 else None

    @property
    def exact(self):
        """Rational part: H_{n-1} for j = 1, (j-1)! sum_{k<n} 1/k^j otherwise."""
        if not self._exact:
            if self.j == 1:
                self._exact.append(harmonic(self.n - 1))
            else:
                partial = power_sum(self.n - 1, self.j)
                self._exact.append(math.factorial(self.j - 1) * partial)
        return self._exact[0]

    def evaluate(self, dps=30):
        """Numeric value as an mpf at dps working digits."""
        with mpmath.workdps(dps):
            if self.j == 1:
                return mpmath.harmonic(self.n - 1) - mpmath.log(self.n)
            # sum_{k<n} k^-j = zeta(j) - zeta(j, n)
            partial = mpmath.zeta(self.j) - mpmath.zeta(self.j, self.n)
            return mpmath.factorial(self.j - 1) * partial

    def __float__(self):
        return float(self.evaluate())

    def __str__(self):
        if self.j == 1:
            return "H_{}-log({})".format(self.n - 1, self.n)
        return "{}*sum_(k<{}) k^-{}".format(math.factorial(self.j - 1), self.n, self.j)


def gumbel_shift_cumulants(n, j):
    """kappa_j(L_n/2 - log n), tending to the Gumbel cumulants as n grows."""
    _check_args(n, j)
    return ShiftedCumulant(n, j)


def mean_L_asymptotic_error(n, dps=30):
    """E(L_n) - 2 log n - 2 gamma, which behaves like -1/n."""
    err_str = "Sample size must be at least 2, got {}"
    assert n >= 2, err_str.format(n)
    with mpmath.workdps(dps):
        shifted = ShiftedCumulant(n, 1).evaluate(dps)
        return float(2 * (shifted - mpmath.mpf(EULER_GAMMA)))
