#!/usr/bin/env python3

"""Exact rational helpers: Bernoulli numbers, even zeta coefficients, power sums.

Rationals are ``fractions.Fraction`` values, which are kept in lowest terms with a
positive denominator on every construction.
"""

import math
import threading
from fractions import Fraction

__all__ = [
    "bernoulli",
    "zeta_even_coefficient",
    "power_sum",
    "harmonic",
    "format_rational",
]

# Memo table B_0, B_1, ... (shared, guarded by the lock below)
_BERNOULLI = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n):
    """B_n from B_0 = 1 and B_n = -1/(n+1) sum_{k<n} C(n+1, k) B_k (B_1 = -1/2)."""
    err_str = "Bernoulli index must be nonnegative, got {}"
    assert n >= 0, err_str.format(n)
    with _BERNOULLI_LOCK:
        while len(_BERNOULLI) <= n:
            m = len(_BERNOULLI)
            total = sum(math.comb(m + 1, k) * _BERNOULLI[k] for k in range(m))
            _BERNOULLI.append(-total / (m + 1))
        return _BERNOULLI[n]


def zeta_even_coefficient(m):
    """Rational c with zeta(2m) = c * pi^(2m); m = 0 gives zeta(0) = -1/2."""
    err_str = "Even zeta index must be nonnegative, got {}"
    assert m >= 0, err_str.format(m)
    sign = 1 if m % 2 == 1 else -1
    coeff = Fraction(2 ** (2 * m)) * bernoulli(2 * m) / (2 * math.factorial(2 * m))
    return sign * coeff


def _split_sum(lo, hi, j):
    # (p, q) with p/q = sum_{lo <= k < hi} 1/k^j, by binary splitting
    if hi - lo == 1:
        return 1, lo ** j
    mid = (lo + hi) // 2
    p1, q1 = _split_sum(lo, mid, j)
    p2, q2 = _split_sum(mid, hi, j)
    return p1 * q2 + p2 * q1, q1 * q2


def power_sum(n, j):
    """Exact sum_{k=1}^{n} 1/k^j (0 for n = 0)."""
    err_str = "Power sum needs n >= 0 and j >= 0, got n={}, j={}"
    assert n >= 0 and j >= 0, err_str.format(n, j)
    if n == 0:
        return Fraction(0)
    p, q = _split_sum(1, n + 1, j)
    return Fraction(p, q)


def harmonic(n):
    """Exact harmonic number H_n."""
    return power_sum(n, 1)


def format_rational(value):
    """Reduced 'p/q' (or 'p') string of a rational."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)
