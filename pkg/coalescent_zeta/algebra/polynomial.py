#!/usr/bin/env python3

"""Formal polynomials in Euler's constant, log 2 and zeta values.

A ZetaPolynomial maps monomials (sorted tuples of Generator, repetitions allowed)
to nonzero Fraction coefficients; the empty monomial is the constant term. Values
are immutable. ``to_pi_form`` rewrites every zeta(2m) as a rational multiple of
pi^(2m) and is the only simplification performed.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby

import simplejson
from coalescent_zeta.algebra.rational import format_rational, zeta_even_coefficient

__all__ = [
    "Generator",
    "ZetaPolynomial",
    "PiForm",
    "to_pi_form",
    "zeta",
    "euler_gamma",
    "log2",
    "const",
]

# Generator kinds, in monomial sort order
GAMMA = 0
LOG2 = 1
ZETA = 2

_ZETA_NAME = re.compile(r"^zeta\((\d+)\)$")


@dataclass(frozen=True, order=True)
class Generator(object):
    """A formal constant: gamma, log 2 or zeta(k) with k >= 2."""

    kind: int
    param: int = 0

    def __post_init__(self):
        err_str = "Generator kind '{}' not supported"
        assert self.kind in (GAMMA, LOG2, ZETA), err_str.format(self.kind)
        if self.kind == ZETA:
            err_str = "zeta(k) needs k >= 2, got {}"
            assert self.param >= 2, err_str.format(self.param)
        else:
            assert self.param == 0, "gamma and log2 carry no parameter"

    @classmethod
    def gamma(cls):
        return cls(GAMMA)

    @classmethod
    def log2(cls):
        return cls(LOG2)

    @classmethod
    def zeta(cls, k):
        return cls(ZETA, k)

    @classmethod
    def from_name(cls, name):
        if name == "gamma":
            return cls.gamma()
        if name == "log2":
            return cls.log2()
        match = _ZETA_NAME.match(name)
        err_str = "Generator name '{}' not supported"
        assert match is not None, err_str.format(name)
        return cls.zeta(int(match.group(1)))

    @property
    def name(self):
        """JSON name: 'gamma', 'log2' or 'zeta(k)'."""
        if self.kind == GAMMA:
            return "gamma"
        if self.kind == LOG2:
            return "log2"
        return "zeta({})".format(self.param)

    @property
    def symbol(self):
        """Display symbol: 'γ', 'log2' or 'ζ(k)'."""
        if self.kind == GAMMA:
            return "γ"
        if self.kind == LOG2:
            return "log2"
        return "ζ({})".format(self.param)

    @property
    def is_even_zeta(self):
        return self.kind == ZETA and self.param % 2 == 0


def _render_factors(symbols):
    # ('ζ(2)', 'ζ(2)', 'ζ(4)') -> 'ζ(2)^2ζ(4)'
    out = []
    for sym, group in groupby(symbols):
        power = len(list(group))
        out.append(sym if power == 1 else "{}^{}".format(sym, power))
    return "".join(out)


def _render_terms(pieces):
    """Joins (coefficient, factor string) pairs as '4/3π^2-12'.

    A binomial with a negative leading term is written positive term first,
    e.g. '160-16π^2'.
    """
    if not pieces:
        return "0"
    if len(pieces) == 2 and pieces[0][0] < 0 < pieces[1][0]:
        pieces = [pieces[1], pieces[0]]
    out = []
    for idx, (coeff, factors) in enumerate(pieces):
        sign = "-" if coeff < 0 else ("+" if idx > 0 else "")
        mag = abs(coeff)
        if not factors:
            body = format_rational(mag)
        elif mag == 1:
            body = factors
        else:
            body = format_rational(mag) + factors
        out.append(sign + body)
    return "".join(out)


class ZetaPolynomial(object):
    """Exact linear combination of monomials in gamma, log 2 and zeta values."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc = {}
        for mono, coeff in dict(terms or {}).items():
            key = tuple(sorted(mono))
            acc[key] = acc.get(key, 0) + Fraction(coeff)
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k] != 0}

    @classmethod
    def _from_canonical(cls, terms):
        poly = cls.__new__(cls)
        poly._terms = {k: terms[k] for k in sorted(terms) if terms[k] != 0}
        return poly

    @classmethod
    def constant(cls, value):
        return cls({(): value})

    @classmethod
    def generator(cls, gen, coeff=1):
        return cls({(gen,): coeff})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.constant(1)

    # -------------------------------------------------------------------------------- #
    # Accessors
    # -------------------------------------------------------------------------------- #

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """(monomial, coefficient) pairs in canonical (ascending) order."""
        return list(self._terms.items())

    def coefficient(self, *gens):
        return self._terms.get(tuple(sorted(gens)), Fraction(0))

    def constant_term(self):
        return self._terms.get((), Fraction(0))

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(mono == () for mono in self._terms)

    def generators(self):
        return frozenset(g for mono in self._terms for g in mono)

    def has_kind(self, kind):
        return any(g.kind == kind for g in self.generators())

    def degree(self):
        """Largest number of generator factors in a monomial (0 for constants)."""
        return max((len(mono) for mono in self._terms), default=0)

    def __len__(self):
        return len(self._terms)

    # -------------------------------------------------------------------------------- #
    # Ring operations
    # -------------------------------------------------------------------------------- #

    @staticmethod
    def _coerce(other):
        if isinstance(other, ZetaPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return ZetaPolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return ZetaPolynomial._from_canonical(terms)

    __radd__ = __add__

    def __neg__(self):
        return ZetaPolynomial._from_canonical({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ZetaPolynomial._from_canonical(
                {m: c * other for m, c in self._terms.items()}
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = tuple(sorted(m1 + m2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return ZetaPolynomial._from_canonical(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        err_str = "Only division by a nonzero rational is supported"
        assert isinstance(other, (int, Fraction)) and other != 0, err_str
        return self * (1 / Fraction(other))

    def __pow__(self, exponent):
        err_str = "Only nonnegative integer powers are supported, got {}"
        assert isinstance(exponent, int) and exponent >= 0, err_str.format(exponent)
        result = ZetaPolynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_term())
        return hash(tuple(self._terms.items()))

    # -------------------------------------------------------------------------------- #
    # Rendering and serialization
    # -------------------------------------------------------------------------------- #

    def to_string(self):
        """Zeta form, monomials in descending order with the constant last."""
        pieces = [
            (coeff, _render_factors([g.symbol for g in mono]))
            for mono, coeff in sorted(self._terms.items(), reverse=True)
        ]
        return _render_terms(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return "ZetaPolynomial({})".format(self.to_string())

    def to_json_obj(self):
        return {
            "terms": [
                {"coeff": format_rational(c), "generators": [g.name for g in mono]}
                for mono, c in self._terms.items()
            ]
        }

    def to_json(self):
        return simplejson.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, data):
        """Parses the output of to_json (a string) or to_json_obj (a dict)."""
        if isinstance(data, str):
            data = simplejson.loads(data)
        terms = {}
        for term in data["terms"]:
            mono = tuple(sorted(Generator.from_name(n) for n in term["generators"]))
            terms[mono] = terms.get(mono, 0) + Fraction(term["coeff"])
        return cls(terms)


def zeta(k):
    """zeta(k) as a polynomial; zeta(0) is the constant -1/2."""
    if k == 0:
        return ZetaPolynomial.constant(Fraction(-1, 2))
    return ZetaPolynomial.generator(Generator.zeta(k))


def euler_gamma():
    return ZetaPolynomial.generator(Generator.gamma())


def log2():
    return ZetaPolynomial.generator(Generator.log2())


def const(value):
    return ZetaPolynomial.constant(value)


class PiForm(object):
    """Polynomial in pi^2 whose coefficients may carry odd-zeta, gamma, log 2 factors.

    Terms map (pi power, remaining monomial) to a nonzero Fraction.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc = {}
        for (power, rest), coeff in dict(terms or {}).items():
            key = (power, tuple(sorted(rest)))
            acc[key] = acc.get(key, 0) + Fraction(coeff)
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k] != 0}

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return list(self._terms.items())

    def coefficient(self, power, *rest):
        return self._terms.get((power, tuple(sorted(rest))), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, PiForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def to_string(self):
        """Pi form with reduced fractions before the power, e.g. '4/3π^2-12'."""
        pieces = []
        for (power, rest), coeff in sorted(self._terms.items(), reverse=True):
            pi_part = "" if power == 0 else "π" if power == 1 else "π^{}".format(power)
            pieces.append((coeff, pi_part + _render_factors([g.symbol for g in rest])))
        return _render_terms(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return "PiForm({})".format(self.to_string())


def to_pi_form(poly):
    """Replaces every zeta(2m) factor by zeta_even_coefficient(m) * pi^(2m)."""
    terms = {}
    for mono, coeff in poly.items():
        power, factor, rest = 0, coeff, []
        for gen in mono:
            if gen.is_even_zeta:
                m = gen.param // 2
                factor *= zeta_even_coefficient(m)
                power += 2 * m
            else:
                rest.append(gen)
        key = (power, tuple(rest))
        terms[key] = terms.get(key, 0) + factor
    return PiForm(terms)
