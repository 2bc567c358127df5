#!/usr/bin/env python3

"""Spectral decomposition of a pure death process with distinct death rates.

From state i the process moves to i-1 at rate d_i. With D = diag(-d_1, ..., -d_n)
the generator factors as Q = R D L with lower-triangular

    r_ij = prod_{l=j+1}^{i} d_l / (d_l - d_j),
    l_ij = prod_{l=j}^{i-1} d_{l+1} / (d_l - d_i),      (i >= j)

so that p_ij(t) = sum_{k=j}^{i} e^{-d_k t} r_ik l_kj. Matrices are exact (numpy
object arrays of Fraction) when the rates are rational and float otherwise.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import coalescent_zeta.core.logging as logging
import numpy as np
from coalescent_zeta.coalescent.absorption import MergeRates
from coalescent_zeta.core.config import cfg
from coalescent_zeta.core.errors import (
    DuplicateRatesError,
    ScaleGuardError,
    SizeGuardError,
)

__all__ = [
    "DeathRateVector",
    "SpectralPair",
    "spectral_pair",
    "generator_matrix",
    "transition_probability",
    "transition_matrix",
    "matrix_exponential",
]


logger = logging.get_logger(__name__)


@dataclass(frozen=True)
class DeathRateVector(object):
    """Pairwise distinct death rates d_1, ..., d_n."""

    rates: Tuple

    def __post_init__(self):
        rates = tuple(self.rates)
        err_str = "At least one death rate is required"
        assert len(rates) >= 1, err_str
        if len(set(rates)) != len(rates):
            err_str = "Death rates must be pairwise distinct: {}"
            raise DuplicateRatesError(err_str.format(rates))
        object.__setattr__(self, "rates", rates)

    @classmethod
    def kingman(cls, n):
        """Block-counting rates lambda_1 = 0, ..., lambda_n."""
        return cls(MergeRates.rates(n))

    @property
    def n(self):
        return len(self.rates)

    @property
    def exact(self):
        return all(isinstance(d, (int, Fraction)) for d in self.rates)

    def as_floats(self):
        return np.array([float(d) for d in self.rates])


def _zeros(n, exact):
    if exact:
        mat = np.empty((n, n), dtype=object)
        mat.fill(Fraction(0))
        return mat
    return np.zeros((n, n))


def _identity(n, exact):
    mat = _zeros(n, exact)
    for i in range(n):
        mat[i, i] = Fraction(1) if exact else 1.0
    return mat


def _as_rates(rates):
    if isinstance(rates, DeathRateVector):
        return rates
    return DeathRateVector(tuple(rates))


def generator_matrix(rates):
    """Q with q_ii = -d_i and q_{i,i-1} = d_i."""
    rates = _as_rates(rates)
    exact = rates.exact
    d = rates.rates if exact else rates.as_floats()
    q = _zeros(rates.n, exact)
    for i in range(rates.n):
        q[i, i] = -d[i]
        if i > 0:
            q[i, i - 1] = d[i]
    return q


@dataclass(frozen=True)
class SpectralPair(object):
    """R and L with R L = I and R D = Q R; condition is max |r_ij|, |l_ij|."""

    rates: DeathRateVector
    R: np.ndarray
    L: np.ndarray
    condition: float

    @property
    def exact(self):
        return self.R.dtype == object


def spectral_pair(rates):
    """Builds R and L from the closed products and verifies R L = I, R D = Q R."""
    rates = _as_rates(rates)
    n, exact = rates.n, rates.exact
    d = [Fraction(x) for x in rates.rates] if exact else list(rates.as_floats())
    r, l_mat = _zeros(n, exact), _zeros(n, exact)
    one = Fraction(1) if exact else 1.0
    for i in range(n):
        for j in range(i + 1):
            r_ij, l_ij = one, one
            for m in range(j + 1, i + 1):
                r_ij *= d[m] / (d[m] - d[j])
            for m in range(j, i):
                l_ij *= d[m + 1] / (d[m] - d[i])
            r[i, j], l_mat[i, j] = r_ij, l_ij
    condition = max(float(abs(x)) for x in np.concatenate([r.ravel(), l_mat.ravel()]))
    if condition > cfg.DEATH.COND_WARN:
        warn_str = "Spectral pair is ill-conditioned: max entry {:.3g}"
        logger.warning(warn_str.format(condition))
    _verify_pair(rates, r, l_mat, condition)
    return SpectralPair(rates, r, l_mat, condition)


def _verify_pair(rates, r, l_mat, condition):
    n, exact = rates.n, rates.exact
    q = generator_matrix(rates)
    dmat = _zeros(n, exact)
    for i in range(n):
        # D = diag(-d_i) shares its diagonal with Q
        dmat[i, i] = q[i, i]
    rl = r.dot(l_mat)
    rd, qr = r.dot(dmat), q.dot(r)
    if exact:
        assert np.array_equal(rl, _identity(n, True)), "R L = I failed"
        assert np.array_equal(rd, qr), "R D = Q R failed"
        return
    tol = 1e-9 * max(1.0, condition) ** 2
    residual = max(np.max(np.abs(rl - np.eye(n))), np.max(np.abs(rd - qr)))
    if residual > tol:
        warn_str = "Spectral pair residual {:.3g} exceeds {:.3g}"
        logger.warning(warn_str.format(residual, tol))


def _exp_weights(rates, t):
    err_str = "Time must be nonnegative, got {}"
    assert t >= 0, err_str.format(t)
    return np.exp(-rates.as_floats() * t)


def _float_matrix(mat):
    return np.array(mat, dtype=np.float64)


def transition_probability(rates, i, j, t, pair=None):
    """p_ij(t) = sum_{k=j}^{i} e^{-d_k t} r_ik l_kj (1-based states)."""
    rates = _as_rates(rates)
    err_str = "Transition needs 1 <= j <= i <= n, got i={}, j={}, n={}"
    assert 1 <= j <= i <= rates.n, err_str.format(i, j, rates.n)
    pair = spectral_pair(rates) if pair is None else pair
    weights = _exp_weights(rates, t)
    r, l_mat = _float_matrix(pair.R), _float_matrix(pair.L)
    terms = (weights[k] * r[i - 1, k] * l_mat[k, j - 1] for k in range(j - 1, i))
    return math.fsum(terms)


def transition_matrix(rates, t, pair=None):
    """P(t) = R diag(e^{-d t}) L."""
    rates = _as_rates(rates)
    pair = spectral_pair(rates) if pair is None else pair
    weights = _exp_weights(rates, t)
    r, l_mat = _float_matrix(pair.R), _float_matrix(pair.L)
    return (r * weights) @ l_mat


def matrix_exponential(q, t):
    """e^{Qt} by scaling and squaring of a truncated Taylor series (oracle)."""
    a = np.array(q, dtype=np.float64) * float(t)
    err_str = "Generator must be square, got shape {}"
    assert a.ndim == 2 and a.shape[0] == a.shape[1], err_str.format(a.shape)
    n = a.shape[0]
    if n > cfg.DEATH.MAX_N:
        err_str = "Matrix exponential oracle supports n <= {}, got {}"
        raise SizeGuardError(err_str.format(cfg.DEATH.MAX_N, n))
    norm = np.linalg.norm(a, 1)
    if norm > cfg.DEATH.MAX_NORM:
        err_str = "||Qt||_1 = {:.3g} exceeds DEATH.MAX_NORM={}"
        raise ScaleGuardError(err_str.format(norm, cfg.DEATH.MAX_NORM))
    # scale so that ||A / 2^s|| <= 1/2
    squarings = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 0 else 0
    a = a / 2.0 ** squarings
    result, term = np.eye(n), np.eye(n)
    for k in range(1, 30):
        term = term @ a / k
        result = result + term
    for _ in range(squarings):
        result = result @ result
    return result
