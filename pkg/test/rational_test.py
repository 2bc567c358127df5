#!/usr/bin/env python3

"""Exact rational helpers."""

import unittest
from fractions import Fraction

from coalescent_zeta.algebra.rational import (
    bernoulli,
    format_rational,
    harmonic,
    power_sum,
    zeta_even_coefficient,
)
from parameterized import parameterized


class TestBernoulli(unittest.TestCase):
    @parameterized.expand(
        [
            (0, Fraction(1)),
            (1, Fraction(-1, 2)),
            (2, Fraction(1, 6)),
            (3, Fraction(0)),
            (4, Fraction(-1, 30)),
            (12, Fraction(-691, 2730)),
        ]
    )
    def test_values(self, n, expected):
        self.assertEqual(bernoulli(n), expected)

    def test_negative_index(self):
        with self.assertRaises(AssertionError):
            bernoulli(-1)

    @parameterized.expand([(m,) for m in range(1, 21)])
    def test_odd_indices_vanish(self, m):
        self.assertEqual(bernoulli(2 * m + 1), 0)


class TestZetaEvenCoefficient(unittest.TestCase):
    @parameterized.expand(
        [(0, Fraction(-1, 2)), (1, Fraction(1, 6)), (2, Fraction(1, 90)), (3, Fraction(1, 945))]
    )
    def test_values(self, m, expected):
        self.assertEqual(zeta_even_coefficient(m), expected)


class TestPowerSums(unittest.TestCase):
    def test_harmonic(self):
        self.assertEqual(harmonic(1), 1)
        self.assertEqual(harmonic(4), Fraction(25, 12))

    def test_squares(self):
        self.assertEqual(power_sum(3, 2), Fraction(49, 36))

    def test_empty_sum(self):
        self.assertEqual(power_sum(0, 3), 0)

    def test_large_sum_matches_direct(self):
        direct = sum(Fraction(1, k ** 3) for k in range(1, 301))
        self.assertEqual(power_sum(300, 3), direct)


class TestCanonicalForm(unittest.TestCase):
    def test_reduced_with_positive_denominator(self):
        value = Fraction(2, -4)
        self.assertEqual((value.numerator, value.denominator), (-1, 2))

    def test_format(self):
        self.assertEqual(format_rational(Fraction(-4, 6)), "-2/3")
        self.assertEqual(format_rational(5), "5")
        self.assertEqual(format_rational(Fraction(10, 5)), "2")


if __name__ == "__main__":
    unittest.main()
