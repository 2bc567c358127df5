#!/usr/bin/env python3

"""The two-dimensional recursion s_ij = s_{i-1,j} - s_{i,j-1} and its two series.

Given a row s_0k = a_k and a column s_k0 = b_k, the recursion has the closed form

    s_ij = sum_{k=1}^{j} (-1)^{j-k} C(i+j-k-1, i-1) a_k
         + (-1)^j sum_{k=1}^{i} C(i+j-k-1, j-1) b_k.

Two instantiations are provided:

    unsigned  s_ij = sum_{k>=2} 1 / (k^i (k-1)^j)
    signed    s_ij = sum_{k>=2} (-1)^k (2k-1) / (k^i (k-1)^j)
"""

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
from coalescent_zeta.algebra.polynomial import ZetaPolynomial, const, log2, zeta
from coalescent_zeta.core.config import cfg
from coalescent_zeta.core.errors import DivergentTailError

__all__ = [
    "SeriesKind",
    "DoubleSequenceSpec",
    "SeriesEstimate",
    "series_spec",
    "solve_closed",
    "solve_by_recursion",
    "unsigned_diagonal",
    "signed_diagonal",
    "diagonal_series_truncated",
]


class SeriesKind(enum.Enum):
    UNSIGNED = "unsigned"
    SIGNED = "signed"


@dataclass(frozen=True)
class DoubleSequenceSpec(object):
    """Initial row a_k = s_0k and column b_k = s_k0 (k >= 1) of the recursion."""

    name: str
    a: Callable[[int], ZetaPolynomial]
    b: Callable[[int], ZetaPolynomial]


@functools.lru_cache(maxsize=None)
def _unsigned_a(k):
    # s_0k = zeta(k), with s_01 := 1
    return const(1) if k == 1 else zeta(k)


@functools.lru_cache(maxsize=None)
def _unsigned_b(k):
    # s_k0 = zeta(k) - 1, with s_10 := 0
    return const(0) if k == 1 else zeta(k) - 1


def _eta(k):
    # alternating zeta (1 - 2^{1-k}) zeta(k); eta(1) = log 2
    if k == 1:
        return log2()
    return zeta(k) * (1 - Fraction(1, 2 ** (k - 1)))


@functools.lru_cache(maxsize=None)
def _signed_a(k):
    # s_0k = 2 eta(k-1) + eta(k), with s_01 := 1
    return const(1) if k == 1 else 2 * _eta(k - 1) + _eta(k)


@functools.lru_cache(maxsize=None)
def _signed_b(k):
    # s_k0 = 1 - 2 eta(k-1) + eta(k), with s_10 := 0
    return const(0) if k == 1 else 1 - 2 * _eta(k - 1) + _eta(k)


_SPECS = {
    SeriesKind.UNSIGNED: DoubleSequenceSpec("unsigned", _unsigned_a, _unsigned_b),
    SeriesKind.SIGNED: DoubleSequenceSpec("signed", _signed_a, _signed_b),
}


def series_spec(kind):
    """The initial data of the unsigned or signed series."""
    kind = SeriesKind(kind)
    return _SPECS[kind]


def _as_spec(spec):
    if isinstance(spec, DoubleSequenceSpec):
        return spec
    return series_spec(spec)


def _check_indices(i, j):
    err_str = "The recursion is defined for i, j >= 1, got i={}, j={}"
    assert i >= 1 and j >= 1, err_str.format(i, j)


def solve_closed(i, j, spec):
    """s_ij from the closed-form solution of the recursion."""
    _check_indices(i, j)
    spec = _as_spec(spec)
    total = ZetaPolynomial.zero()
    for k in range(1, j + 1):
        sign = -1 if (j - k) % 2 else 1
        total += sign * math.comb(i + j - k - 1, i - 1) * spec.a(k)
    sign = -1 if j % 2 else 1
    for k in range(1, i + 1):
        total += sign * math.comb(i + j - k - 1, j - 1) * spec.b(k)
    return total


@functools.lru_cache(maxsize=None)
def _recursion_table(spec, i, j):
    # rows[p][q] = s_pq for 0 <= p <= i, 0 <= q <= j (s_00 unused)
    rows = [[None] * (j + 1) for _ in range(i + 1)]
    for q in range(1, j + 1):
        rows[0][q] = spec.a(q)
    for p in range(1, i + 1):
        rows[p][0] = spec.b(p)
        for q in range(1, j + 1):
            rows[p][q] = rows[p - 1][q] - rows[p][q - 1]
    return rows


def solve_by_recursion(i, j, spec):
    """s_ij by dynamic programming over s_ij = s_{i-1,j} - s_{i,j-1}."""
    _check_indices(i, j)
    return _recursion_table(_as_spec(spec), i, j)[i][j]


def unsigned_diagonal(j):
    """sum_{k>=2} 1/(k^j (k-1)^j) = 2 (-1)^j sum_m C(2j-2m-1, j-1) zeta(2m)."""
    err_str = "Diagonal index must be positive, got {}"
    assert j >= 1, err_str.format(j)
    total = ZetaPolynomial.zero()
    for m in range(j // 2 + 1):
        total += math.comb(2 * j - 2 * m - 1, j - 1) * zeta(2 * m)
    return total * (2 if j % 2 == 0 else -2)


def signed_diagonal(j):
    """sum_{k>=2} (-1)^k (2k-1)/(k^j (k-1)^j); free of log 2."""
    return solve_closed(j, j, SeriesKind.SIGNED)


@dataclass(frozen=True)
class SeriesEstimate(object):
    """Partial sum of a series with a bound on |value - limit|.

    The bound covers the truncated tail and the floating-point rounding of the sum.
    """

    value: float
    tail_bound: float
    rounding_bound: float
    terms: int

    @property
    def error_bound(self):
        return self.tail_bound + self.rounding_bound

    def contains(self, exact):
        return abs(float(exact) - self.value) <= self.error_bound


def _unsigned_partial(j, big_k):
    k = np.arange(2, big_k + 1, dtype=np.float64)
    terms = (1.0 / (k * (k - 1.0))) ** j
    value = math.fsum(terms)
    tail = (big_k - 1.0) ** (1 - 2 * j) / (2 * j - 1)
    rounding = (2 * j + 8) * np.finfo(np.float64).eps * value
    return SeriesEstimate(value, tail, rounding, big_k - 1)


def _signed_term(k, j):
    return (2.0 * k - 1.0) * (1.0 / (k * (k - 1.0))) ** j


def _signed_partial_paired(j, big_k):
    # pairs (k, k+1) = (2m, 2m+1) with 2m+1 <= K; the pair sum is positive
    big_m = (big_k - 1) // 2
    two_m = 2.0 * np.arange(1, big_m + 1, dtype=np.float64)
    even = _signed_term(two_m, j)
    odd = _signed_term(two_m + 1.0, j)
    value = math.fsum(even - odd)
    # alternating tail with decreasing magnitudes: bounded by its first term
    tail = float(_signed_term(2.0 * big_m + 2.0, j))
    mass = math.fsum(even) + math.fsum(odd)
    rounding = (2 * j + 8) * np.finfo(np.float64).eps * mass
    return SeriesEstimate(value, tail, rounding, 2 * big_m)


def _signed_partial(j, big_k):
    k = np.arange(2, big_k + 1, dtype=np.float64)
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    terms = signs * _signed_term(k, j)
    value = math.fsum(terms)
    tail = float(_signed_term(big_k + 1.0, j))
    rounding = (2 * j + 8) * np.finfo(np.float64).eps * math.fsum(np.abs(terms))
    return SeriesEstimate(value, tail, rounding, big_k - 1)


def diagonal_series_truncated(kind, j, big_k=None, paired=True):
    """Partial sum of the diagonal series up to k = K, with its error bound.

    The signed series is summed in consecutive pairs (2m, 2m+1) unless paired is
    False; unpaired partial sums of the signed series at j = 1 are refused.
    """
    kind = SeriesKind(kind)
    big_k = cfg.SERIES.TRUNC if big_k is None else big_k
    err_str = "Truncation needs j >= 1 and K >= 2, got j={}, K={}"
    assert j >= 1 and big_k >= 2, err_str.format(j, big_k)
    if kind == SeriesKind.UNSIGNED:
        return _unsigned_partial(j, big_k)
    if paired:
        err_str = "Paired signed truncation needs K >= 3, got {}"
        assert big_k >= 3, err_str.format(big_k)
        return _signed_partial_paired(j, big_k)
    if j == 1:
        raise DivergentTailError(
            "The signed series at j=1 is only conditionally convergent; use pairing"
        )
    return _signed_partial(j, big_k)
