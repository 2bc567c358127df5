#!/usr/bin/env python3

"""Arbitrary-precision evaluation of zeta polynomials (powered by mpmath)."""

import decimal
import functools
import math

import mpmath
from coalescent_zeta.algebra.polynomial import GAMMA, LOG2, PiForm, ZetaPolynomial
from coalescent_zeta.algebra.rational import bernoulli
from coalescent_zeta.core.config import cfg
from coalescent_zeta.core.errors import PrecisionExceededError

__all__ = [
    "EULER_GAMMA",
    "PI",
    "LOG_2",
    "zeta_mpf",
    "zeta_numeric",
    "eval_mpf",
    "eval_decimal",
    "eval_numeric",
    "eval_float",
    "mpf_to_decimal",
]

# Embedded constants (50 significant digits)
EULER_GAMMA = "0.57721566490153286060651209008240243104215933593992"
PI = "3.1415926535897932384626433832795028841971693993751"
LOG_2 = "0.69314718055994530941723212145817656807550013436026"

# Significant digits carried by the embedded constants
_CONSTANT_DIGITS = 50


def _check_digits(digits):
    err_str = "Number of digits must be positive, got {}"
    assert digits >= 1, err_str.format(digits)
    max_digits = min(cfg.NUMERIC.MAX_DIGITS, _CONSTANT_DIGITS)
    if digits > max_digits:
        err_str = "Requested {} digits, the embedded constants support at most {}"
        raise PrecisionExceededError(err_str.format(digits, max_digits))


def _rising(s, length):
    # s (s + 1) ... (s + length - 1)
    return math.prod(range(s, s + length))


def _em_plan(s, eps):
    """Chooses (N, R) so that the Euler-Maclaurin remainder is below eps.

    With R correction terms the remainder is bounded by the first omitted term
    |B_{2R+2}| / (2R+2)! * s (s+1) ... (s+2R) * N^{-s-2R-1}.
    """
    num_terms = cfg.NUMERIC.EM_TERMS
    while True:
        r2 = 2 * num_terms + 2
        c = abs(bernoulli(r2)) * _rising(s, r2 - 1) / math.factorial(r2)
        exponent = s + r2 - 1
        # smallest N with c * N^-exponent < eps
        n = max(2, math.ceil((float(c) / eps) ** (1.0 / exponent)) + 1)
        if n <= cfg.NUMERIC.ZETA_MAX_TERMS:
            return n, num_terms
        num_terms += 1


@functools.lru_cache(maxsize=None)
def _zeta_mpf_cached(k, dps, em_terms, max_terms):
    with mpmath.workdps(dps):
        eps = 10.0 ** (-dps)
        n, num_terms = _em_plan(k, eps)
        s = mpmath.mpf(k)
        head = mpmath.fsum(mpmath.mpf(m) ** (-s) for m in range(1, n))
        big_n = mpmath.mpf(n)
        tail = big_n ** (1 - s) / (s - 1) + big_n ** (-s) / 2
        for r in range(1, num_terms + 1):
            b = bernoulli(2 * r)
            c = mpmath.mpf(b.numerator) / b.denominator / math.factorial(2 * r)
            tail += c * _rising(k, 2 * r - 1) * big_n ** (-s - 2 * r + 1)
        return +(head + tail)


def zeta_mpf(k, dps):
    """zeta(k) for integer k >= 2 as an mpf with absolute error below 10^-dps."""
    err_str = "zeta(k) needs k >= 2, got {}"
    assert k >= 2, err_str.format(k)
    return _zeta_mpf_cached(k, dps, cfg.NUMERIC.EM_TERMS, cfg.NUMERIC.ZETA_MAX_TERMS)


def mpf_to_decimal(value, digits):
    """Rounds an mpf to digits decimal places (half-even), never returning -0."""
    man, exp = mpmath.mpf(value).man_exp
    # the gmpy backend hands back an mpz, which Decimal rejects
    man = int(man)
    with decimal.localcontext() as ctx:
        ctx.prec = max(len(str(abs(man))) + abs(exp) + digits + 10, 64)
        if exp >= 0:
            exact = decimal.Decimal(man * 2 ** exp)
        else:
            # man * 2^exp = man * 5^-exp * 10^exp, exact in decimal
            exact = decimal.Decimal(man * 5 ** (-exp)).scaleb(exp)
        rounded = exact.quantize(
            decimal.Decimal(1).scaleb(-digits), rounding=decimal.ROUND_HALF_EVEN
        )
    if rounded.is_zero():
        rounded = rounded.copy_abs()
    return rounded


def zeta_numeric(k, digits=None):
    """zeta(k) rounded to digits decimal places."""
    digits = cfg.NUMERIC.DIGITS if digits is None else digits
    _check_digits(digits)
    dps = digits + cfg.NUMERIC.GUARD_DIGITS
    with mpmath.workdps(dps):
        return mpf_to_decimal(zeta_mpf(k, dps), digits)


def _generator_value(gen, dps):
    if gen.kind == GAMMA:
        return mpmath.mpf(EULER_GAMMA)
    if gen.kind == LOG2:
        return mpmath.mpf(LOG_2)
    return zeta_mpf(gen.param, dps)


def _constant_factors(poly):
    """Yields (term, count of gamma, log 2 and pi factors) for terms that use them."""
    if isinstance(poly, PiForm):
        for (power, rest), coeff in poly.items():
            count = power + sum(1 for g in rest if g.kind in (GAMMA, LOG2))
            if count:
                yield PiForm({(power, rest): coeff}), count
    else:
        for mono, coeff in poly.items():
            count = sum(1 for g in mono if g.kind in (GAMMA, LOG2))
            if count:
                yield ZetaPolynomial({mono: coeff}), count


def _check_constant_error(poly, digits):
    """Raises when the rounding of the embedded constants reaches the last digit.

    A term with k constant factors inherits a relative error near k 10^-50, so
    digits plus the decimal magnitude of k |term| may not exceed the constant digits.
    """
    for term, count in _constant_factors(poly):
        size = abs(eval_mpf(term, 15)) * count
        magnitude = int(mpmath.ceil(mpmath.log10(size))) if size > 0 else 0
        if digits + magnitude > _CONSTANT_DIGITS:
            err_str = "Requested {} digits of {}, embedded constants support {}"
            raise PrecisionExceededError(
                err_str.format(digits, term, _CONSTANT_DIGITS - magnitude)
            )


def _working_dps(poly, digits):
    """Working precision covering the magnitude of the largest term."""
    if isinstance(poly, PiForm):
        sizes = [(c, power) for (power, _), c in poly.items()]
    else:
        sizes = [(c, len(mono)) for mono, c in poly.items()]
    magnitude = max(
        (len(str(abs(c.numerator) // c.denominator)) + extra for c, extra in sizes),
        default=1,
    )
    return digits + cfg.NUMERIC.GUARD_DIGITS + magnitude


def eval_mpf(poly, dps):
    """Evaluates a ZetaPolynomial or PiForm as an mpf at dps working digits."""
    with mpmath.workdps(dps):
        terms = []
        if isinstance(poly, PiForm):
            pi = mpmath.mpf(PI)
            for (power, rest), coeff in poly.items():
                value = mpmath.mpf(coeff.numerator) / coeff.denominator * pi ** power
                for gen in rest:
                    value *= _generator_value(gen, dps)
                terms.append(value)
        else:
            for mono, coeff in poly.items():
                value = mpmath.mpf(coeff.numerator) / coeff.denominator
                for gen in mono:
                    value *= _generator_value(gen, dps)
                terms.append(value)
        return mpmath.fsum(terms)


def eval_decimal(poly, digits=None):
    """Evaluates poly rounded to digits decimal places, as a Decimal."""
    digits = cfg.NUMERIC.DIGITS if digits is None else digits
    _check_digits(digits)
    _check_constant_error(poly, digits)
    dps = _working_dps(poly, digits)
    with mpmath.workdps(dps):
        return mpf_to_decimal(eval_mpf(poly, dps), digits)


def eval_numeric(poly, digits=None):
    """Evaluates poly to digits decimal places, as a string such as '1.15947'."""
    return format(eval_decimal(poly, digits), "f")


def eval_float(poly):
    """Evaluates poly as a float (for comparisons against float oracles)."""
    dps = _working_dps(poly, 17)
    return float(eval_mpf(poly, dps))
