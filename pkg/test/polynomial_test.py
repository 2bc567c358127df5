#!/usr/bin/env python3

"""Zeta polynomials and their pi forms."""

import unittest
from fractions import Fraction

import numpy as np
from coalescent_zeta.algebra.polynomial import (
    LOG2,
    Generator,
    ZetaPolynomial,
    const,
    euler_gamma,
    log2,
    to_pi_form,
    zeta,
)
from parameterized import parameterized


class TestGenerator(unittest.TestCase):
    def test_zeta_needs_k_at_least_two(self):
        with self.assertRaises(AssertionError):
            Generator.zeta(1)

    @parameterized.expand([("gamma",), ("log2",), ("zeta(7)",)])
    def test_name_round_trip(self, name):
        self.assertEqual(Generator.from_name(name).name, name)

    def test_unknown_name(self):
        with self.assertRaises(AssertionError):
            Generator.from_name("pi")


class TestArithmetic(unittest.TestCase):
    def test_cancellation_leaves_no_zero_terms(self):
        poly = zeta(2) * zeta(2) - zeta(2) ** 2
        self.assertTrue(poly.is_zero())
        self.assertEqual(len(poly), 0)

    def test_constants(self):
        self.assertEqual(const(0), 0)
        self.assertEqual(zeta(0), Fraction(-1, 2))
        self.assertEqual(zeta(2) + 1 - zeta(2), 1)

    def test_rational_scaling(self):
        self.assertEqual((4 * zeta(3)) / 2, zeta(3) * 2)
        self.assertEqual(Fraction(1, 3) * zeta(2) * 3, zeta(2))

    def test_monomials_commute(self):
        self.assertEqual(zeta(2) * zeta(3) * euler_gamma(), euler_gamma() * zeta(3) * zeta(2))

    def test_coefficients(self):
        poly = 3 * zeta(2) ** 2 + 5
        self.assertEqual(poly.coefficient(Generator.zeta(2), Generator.zeta(2)), 3)
        self.assertEqual(poly.constant_term(), 5)
        self.assertEqual(poly.degree(), 2)

    def test_kinds(self):
        self.assertTrue((log2() + zeta(2)).has_kind(LOG2))
        self.assertFalse(zeta(2).has_kind(LOG2))


_POOL = [Generator.gamma(), Generator.log2()] + [Generator.zeta(k) for k in range(2, 6)]


def _random_poly(rng):
    terms = {}
    for _ in range(int(rng.integers(0, 5))):
        size = int(rng.integers(0, 4))
        mono = tuple(_POOL[int(i)] for i in rng.integers(0, len(_POOL), size=size))
        terms[mono] = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6)))
    return ZetaPolynomial(terms)


class TestRingLaws(unittest.TestCase):
    @parameterized.expand([(seed,) for seed in range(10)])
    def test_ring_laws(self, seed):
        rng = np.random.default_rng(seed)
        for _ in range(20):
            p, q, r = _random_poly(rng), _random_poly(rng), _random_poly(rng)
            self.assertEqual((p + q) * r, p * r + q * r)
            self.assertEqual(p * q, q * p)
            self.assertEqual(p + q, q + p)
            self.assertEqual((p * q) * r, p * (q * r))
            self.assertEqual((p + q) + r, p + (q + r))
            self.assertTrue((p * ZetaPolynomial.zero()).is_zero())
            self.assertTrue((p - p).is_zero())

    @parameterized.expand([(seed,) for seed in range(10)])
    def test_canonical_form_is_idempotent(self, seed):
        rng = np.random.default_rng(seed)
        for _ in range(20):
            p = _random_poly(rng)
            again = ZetaPolynomial(p.terms)
            self.assertEqual(again, p)
            self.assertEqual(list(again.items()), list(p.items()))

    def test_canonicalization_merges_and_drops(self):
        z2, z3 = Generator.zeta(2), Generator.zeta(3)
        poly = ZetaPolynomial({(z3, z2): 1, (z2, z3): 2, (Generator.gamma(),): 0})
        self.assertEqual(poly.items(), [((z2, z3), Fraction(3))])


class TestRendering(unittest.TestCase):
    def test_descending_with_constant_last(self):
        poly = 192 * zeta(4) + 1920 * zeta(2) - 3360
        self.assertEqual(poly.to_string(), "192ζ(4)+1920ζ(2)-3360")

    def test_zero_and_unit_coefficients(self):
        self.assertEqual(ZetaPolynomial.zero().to_string(), "0")
        self.assertEqual((zeta(3) - euler_gamma()).to_string(), "ζ(3)-γ")

    def test_powers(self):
        self.assertEqual((15 * zeta(2) ** 3).to_string(), "15ζ(2)^3")

    @parameterized.expand(
        [
            (160 - 96 * zeta(2), "160-96ζ(2)"),
            (zeta(2) ** 2 - zeta(4), "ζ(2)^2-ζ(4)"),
            (-zeta(3) - 1, "-ζ(3)-1"),
        ]
    )
    def test_binomial_leads_with_positive_term(self, poly, expected):
        self.assertEqual(poly.to_string(), expected)

    def test_pi_binomial_leads_with_constant(self):
        self.assertEqual(to_pi_form(160 - 96 * zeta(2)).to_string(), "160-16π^2")

    @parameterized.expand(
        [
            (8 * zeta(2) - 12, "4/3π^2-12"),
            (192 * zeta(4) + 1920 * zeta(2) - 3360, "32/15π^4+320π^2-3360"),
            (zeta(2) * zeta(3), "1/6π^2ζ(3)"),
            (zeta(4) - zeta(2) ** 2 * Fraction(2, 5), "0"),
        ]
    )
    def test_pi_form(self, poly, expected):
        self.assertEqual(to_pi_form(poly).to_string(), expected)


class TestJson(unittest.TestCase):
    @parameterized.expand(
        [
            (zeta(2) * 8 - 12,),
            (euler_gamma() ** 2 + zeta(2) * Fraction(-7, 3),),
            (log2() * zeta(5) + zeta(3) ** 2,),
            (const(0),),
        ]
    )
    def test_round_trip(self, poly):
        self.assertEqual(ZetaPolynomial.from_json(poly.to_json()), poly)
        self.assertEqual(ZetaPolynomial.from_json(poly.to_json_obj()), poly)


if __name__ == "__main__":
    unittest.main()
