#!/usr/bin/env python3

"""Raw and central moments of the standard Gumbel law G with CDF exp(-exp(-x)).

G has cumulants kappa_1 = gamma and kappa_j = (j-1)! zeta(j) for j >= 2. Central
moments are also expressed through the symmetric sums

    s_i(n_1, ..., n_i) = sum over distinct k_1, ..., k_i >= 1 of prod_r k_r^{-n_r},

which are polynomials in zeta values obtained from set partitions or from a
recursion in i.
"""

import functools
import math
import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

import mpmath
import numpy as np
from coalescent_zeta.algebra.polynomial import ZetaPolynomial, euler_gamma, zeta
from coalescent_zeta.algebra.rational import power_sum
from coalescent_zeta.coalescent.absorption import cumulants_to_moments
from coalescent_zeta.core.config import cfg
from coalescent_zeta.core.errors import ComplexityGuardError
from coalescent_zeta.gumbel.partitions import (
    block_type_count,
    compositions_min2,
    integer_partitions,
    set_partitions,
)

__all__ = [
    "TruncatedSum",
    "derangement",
    "derangement_explicit",
    "gumbel_cumulant",
    "gumbel_moment",
    "gumbel_central_moment",
    "central_moment_s_coefficients",
    "s_multi_partition",
    "s_multi_recursive",
    "s_multi_truncated",
    "central_to_raw",
    "exponential_central_moment",
    "shifted_sum_central_moment",
    "shifted_sum_central_moment_truncated",
    "gumbel_moment_integral",
    "gumbel_cdf",
    "get_route",
    "register_route",
]


_DERANGEMENTS = [1]
_DERANGEMENTS_LOCK = threading.Lock()


def derangement(n):
    """d_n = n d_{n-1} + (-1)^n with d_0 = 1 (memoized)."""
    err_str = "Derangement numbers are defined for n >= 0, got {}"
    assert n >= 0, err_str.format(n)
    with _DERANGEMENTS_LOCK:
        while len(_DERANGEMENTS) <= n:
            m = len(_DERANGEMENTS)
            _DERANGEMENTS.append(m * _DERANGEMENTS[-1] + (-1) ** m)
        return _DERANGEMENTS[n]


def derangement_explicit(n):
    """d_n = sum_{j=0}^{n} (-1)^j n!/j!."""
    err_str = "Derangement numbers are defined for n >= 0, got {}"
    assert n >= 0, err_str.format(n)
    nfact = math.factorial(n)
    return sum((-1) ** j * (nfact // math.factorial(j)) for j in range(n + 1))


def gumbel_cumulant(j):
    """kappa_1 = gamma, kappa_j = (j-1)! zeta(j) for j >= 2."""
    err_str = "Cumulant orders start at 1, got {}"
    assert j >= 1, err_str.format(j)
    if j == 1:
        return euler_gamma()
    return math.factorial(j - 1) * zeta(j)


def _central_cumulant(j):
    # cumulants of G - gamma
    return ZetaPolynomial.zero() if j == 1 else gumbel_cumulant(j)


def _check_order(n):
    err_str = "Moment orders start at 0, got {}"
    assert n >= 0, err_str.format(n)


def _type_weight(block_sizes):
    """Number of set partitions of {1..n} with the given multiset of block sizes."""
    n = sum(block_sizes)
    denom = math.prod(math.factorial(b) for b in block_sizes)
    denom *= math.prod(math.factorial(c) for c in Counter(block_sizes).values())
    return math.factorial(n) // denom


def _product_of_cumulants(block_sizes, cumulant):
    result = ZetaPolynomial.one()
    for size in block_sizes:
        result = result * cumulant(size)
    return result


# ------------------------------------------------------------------------------------ #
# Raw moments
# ------------------------------------------------------------------------------------ #


@functools.lru_cache(maxsize=None)
def _raw_moment_recursion(n):
    if n == 0:
        return ZetaPolynomial.one()
    return cumulants_to_moments(gumbel_cumulant(j) for j in range(1, n + 1))[-1]


@functools.lru_cache(maxsize=None)
def _raw_moment_partition(n):
    # sum over all partitions pi of {1..n} of prod_{B in pi} kappa_|B|
    if n == 0:
        return ZetaPolynomial.one()
    total = ZetaPolynomial.zero()
    for sizes, count in sorted(block_type_count(n).items()):
        total += count * _product_of_cumulants(sizes, gumbel_cumulant)
    return total


@functools.lru_cache(maxsize=None)
def _raw_moment_type(n):
    total = ZetaPolynomial.zero()
    for sizes in integer_partitions(n):
        total += _type_weight(sizes) * _product_of_cumulants(sizes, gumbel_cumulant)
    return total


@functools.lru_cache(maxsize=None)
def _central_moment_recursion(n):
    if n == 0:
        return ZetaPolynomial.one()
    return cumulants_to_moments(_central_cumulant(j) for j in range(1, n + 1))[-1]


@functools.lru_cache(maxsize=None)
def _central_moment_type(n):
    total = ZetaPolynomial.zero()
    for sizes in integer_partitions(n, min_part=2):
        total += _type_weight(sizes) * _product_of_cumulants(sizes, gumbel_cumulant)
    return total


def _s_weights(n):
    """Sorted parts -> n! sum over their arrangements of (1/i!) prod d_{n_r}/n_r!."""
    weights = Counter()
    for comp in compositions_min2(n):
        parts = comp.parts
        weight = Fraction(
            comp.multinomial * math.prod(derangement(p) for p in parts),
            math.factorial(len(parts)),
        )
        weights[tuple(sorted(parts))] += weight
    return weights


@functools.lru_cache(maxsize=None)
def _central_moment_theorem(n):
    if n == 0:
        return ZetaPolynomial.one()
    total = ZetaPolynomial.zero()
    for parts, weight in sorted(_s_weights(n).items()):
        total += weight * s_multi_recursive(parts)
    return total


# Supported routes per quantity
_routes = {
    "raw": {
        "recursion": _raw_moment_recursion,
        "partition": _raw_moment_partition,
        "type": _raw_moment_type,
    },
    "central": {
        "recursion": _central_moment_recursion,
        "theorem": _central_moment_theorem,
        "type": _central_moment_type,
    },
}


def get_route(quantity, name):
    """Gets the implementation of a moment route."""
    err_str = "Route '{}' not supported for {} moments"
    assert name in _routes[quantity].keys(), err_str.format(name, quantity)
    return _routes[quantity][name]


def register_route(quantity, name, fun):
    """Registers a moment route dynamically."""
    _routes[quantity][name] = fun


def gumbel_moment(n, route="recursion"):
    """m_n = E(G^n) as a polynomial in gamma and zeta values."""
    _check_order(n)
    return get_route("raw", route)(n)


def gumbel_central_moment(n, route="recursion"):
    """m_n' = E((G - gamma)^n); m_0' = 1, m_1' = 0."""
    _check_order(n)
    return get_route("central", route)(n)


def central_moment_s_coefficients(n):
    """Integer coefficients of m_n' in the basis s_i(n_1, ..., n_i), parts sorted.

    For n = 4 this is {(4,): 9, (2, 2): 3}.
    """
    err_str = "The s-basis expansion needs n >= 2, got {}"
    assert n >= 2, err_str.format(n)
    coeffs = {}
    weights = _s_weights(n)
    for parts in sorted(weights, key=lambda p: (len(p), p)):
        weight = weights[parts]
        assert weight.denominator == 1, "Non-integral s-basis coefficient"
        coeffs[parts] = int(weight)
    return coeffs


def central_to_raw(n):
    """m_n = sum_j C(n, j) gamma^{n-j} m_j'."""
    _check_order(n)
    gamma = euler_gamma()
    total = ZetaPolynomial.zero()
    for j in range(n + 1):
        total += math.comb(n, j) * gamma ** (n - j) * gumbel_central_moment(j)
    return total


# ------------------------------------------------------------------------------------ #
# The symmetric sums s_i
# ------------------------------------------------------------------------------------ #


def _check_parts(parts):
    parts = tuple(parts)
    err_str = "s_i needs i >= 1 parts, each at least 2, got {}"
    assert parts and min(parts) >= 2, err_str.format(parts)
    return parts


def s_multi_partition(parts):
    """sum over partitions pi of {1..i} of (-1)^{i-|pi|} prod_B (|B|-1)! zeta(n_B)."""
    parts = _check_parts(parts)
    i = len(parts)
    total = ZetaPolynomial.zero()
    for partition in set_partitions(i):
        term = ZetaPolynomial.constant((-1) ** (i - len(partition)))
        for block in partition:
            weight = math.factorial(len(block) - 1)
            term = term * (weight * zeta(sum(parts[b - 1] for b in block)))
        total += term
    return total


@functools.lru_cache(maxsize=None)
def _s_recursive(parts):
    if len(parts) == 1:
        return zeta(parts[0])
    head, last = parts[:-1], parts[-1]
    result = _s_recursive(head) * zeta(last)
    for r in range(len(head)):
        merged = head[:r] + (head[r] + last,) + head[r + 1 :]
        result -= _s_recursive(tuple(sorted(merged)))
    return result


def s_multi_recursive(parts):
    """s_{i+1}(.., n_{i+1}) = s_i(..) zeta(n_{i+1}) - sum_r s_i(.., n_r + n_{i+1}, ..).

    The base case is s_1(n_1) = zeta(n_1).
    """
    parts = _check_parts(parts)
    return _s_recursive(tuple(sorted(parts)))


@dataclass(frozen=True)
class TruncatedSum(object):
    """Partial sum over indices <= N.

    The error bound covers the omitted remainder and the rounding of the
    cumulative sums.
    """

    value: float
    tail_bound: float
    rounding_bound: float
    terms: int

    @property
    def error_bound(self):
        return self.tail_bound + self.rounding_bound

    def contains(self, exact):
        return abs(self.value - float(exact)) <= self.error_bound


def _distinct_arrangements(parts):
    return sorted(set(permutations(parts)))


def s_multi_truncated(parts, big_n):
    """Sum over distinct k_1, ..., k_i in [1, N] of prod k_r^{-n_r}.

    Every ordered tuple of distinct indices is a sorted index set k_1 < ... < k_i
    paired with an arrangement of the parts, and each distinct arrangement stands
    for prod(mult!) assignments. The sum over sorted index sets is a chain of
    cumulative sums. The omitted remainder is below
    sum_r N^{1-n_r}/(n_r-1) prod_{s != r} n_s/(n_s-1).
    """
    parts = _check_parts(parts)
    i = len(parts)
    err_str = "s_i truncation needs N >= i, got N={}, i={}"
    assert big_n >= i, err_str.format(big_n, i)
    arrangements = _distinct_arrangements(parts)
    work = len(arrangements) * big_n * i
    if work > cfg.ENUM.BUDGET:
        err_str = "Truncated s_{} over N={} needs {} operations, ENUM.BUDGET={}"
        raise ComplexityGuardError(err_str.format(i, big_n, work, cfg.ENUM.BUDGET))
    k = np.arange(1, big_n + 1, dtype=np.float64)
    total = 0.0
    for arrangement in arrangements:
        acc = k ** -float(arrangement[0])
        for p in arrangement[1:]:
            # prefix sums over strictly smaller indices
            prev = np.concatenate(([0.0], np.cumsum(acc)[:-1]))
            acc = prev * k ** -float(p)
        total += math.fsum(acc)
    total *= math.prod(math.factorial(c) for c in Counter(parts).values())
    tail = 0.0
    for r, p in enumerate(parts):
        others = math.prod(q / (q - 1.0) for s, q in enumerate(parts) if s != r)
        tail += big_n ** (1.0 - p) / (p - 1.0) * others
    # each cumulative sum of positive terms loses at most N ulps
    rounding = (i * big_n + 8) * np.finfo(np.float64).eps * abs(total)
    return TruncatedSum(total, tail, rounding, big_n)


# ------------------------------------------------------------------------------------ #
# Finite-sample counterparts and numeric oracles
# ------------------------------------------------------------------------------------ #


def exponential_central_moment(n, alpha=1):
    """E((X - 1/alpha)^n) for X ~ Exp(alpha), from the raw moments k!/alpha^k."""
    _check_order(n)
    alpha = Fraction(alpha)
    err_str = "Exponential rate must be positive, got {}"
    assert alpha > 0, err_str.format(alpha)
    return sum(
        math.comb(n, k)
        * Fraction(math.factorial(k)) / alpha ** k
        * (-1 / alpha) ** (n - k)
        for k in range(n + 1)
    )


def shifted_sum_central_moment(n, big_n):
    """E((G_N - E G_N)^n) for G_N = L_N/2 - log N, exactly.

    G_N - E G_N is a sum of independent centred Exp(k)/k variables, k < N, whose
    cumulants are (j-1)! sum_{k<N} k^{-j} for j >= 2.
    """
    _check_order(n)
    err_str = "Sample size must be at least 2, got {}"
    assert big_n >= 2, err_str.format(big_n)
    if n == 0:
        return Fraction(1)
    kappas = [Fraction(0)]
    for j in range(2, n + 1):
        partial = power_sum(big_n - 1, j)
        kappas.append(math.factorial(j - 1) * partial)
    return cumulants_to_moments(kappas)[-1]


def shifted_sum_central_moment_truncated(n, big_n):
    """The s-basis expansion of m_n' with every s_i truncated at N - 1."""
    err_str = "Sample size must be at least 2, got {}"
    assert big_n >= 2, err_str.format(big_n)
    total = 0.0
    for parts, coeff in central_moment_s_coefficients(n).items():
        # no distinct index tuples exist when i > N - 1
        if len(parts) <= big_n - 1:
            total += coeff * s_multi_truncated(parts, big_n - 1).value
    return total


def gumbel_moment_integral(n, dps=30):
    """int_0^inf (-log u)^n e^{-u} du by tanh-sinh quadrature (equals m_n)."""
    _check_order(n)
    with mpmath.workdps(dps):
        return mpmath.quad(
            lambda u: (-mpmath.log(u)) ** n * mpmath.exp(-u), [0, 1, mpmath.inf]
        )


def gumbel_cdf(x):
    """exp(-exp(-x)); x may be an array."""
    values = np.exp(-np.exp(-np.asarray(x, dtype=np.float64)))
    return values if values.ndim else float(values)
