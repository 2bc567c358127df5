#!/usr/bin/env python3

"""Total tree length L_n and the shifted quantity L_n / 2 - log n."""

import math
import unittest
from fractions import Fraction

import numpy as np
from coalescent_zeta.algebra.numeric import eval_float
from coalescent_zeta.algebra.polynomial import euler_gamma, zeta
from coalescent_zeta.coalescent import tree_length
from coalescent_zeta.coalescent.absorption import cumulants_to_moments
from coalescent_zeta.core.config import cfg
from coalescent_zeta.core.errors import ComplexityGuardError
from coalescent_zeta.gumbel.moments import gumbel_cumulant
from parameterized import parameterized


class TestCumulants(unittest.TestCase):
    @parameterized.expand([(2, 1, 2), (2, 2, 4), (4, 1, Fraction(11, 3))])
    def test_values(self, n, j, expected):
        self.assertEqual(tree_length.cumulant_L(n, j), expected)

    def test_edge_rates(self):
        self.assertEqual(tree_length.EdgeRates.rate(5), 2)

    def test_arguments(self):
        with self.assertRaises(AssertionError):
            tree_length.cumulant_L(1, 1)


class TestMoments(unittest.TestCase):
    def test_small_values(self):
        self.assertEqual(tree_length.moment_L_alternating(2, 1), 2)
        self.assertEqual(tree_length.moment_L_alternating(3, 1), 3)

    @parameterized.expand([(n, j) for n in (2, 5, 12) for j in (1, 3, 6)])
    def test_both_formulas_agree(self, n, j):
        self.assertEqual(
            tree_length.moment_L_alternating(n, j), tree_length.moment_L_ordered(n, j)
        )

    @parameterized.expand([(n,) for n in range(2, 11)])
    def test_moments_from_cumulants(self, n):
        kappas = [tree_length.cumulant_L(n, j) for j in range(1, 7)]
        expected = [tree_length.moment_L_alternating(n, j) for j in range(1, 7)]
        self.assertEqual(cumulants_to_moments(kappas), expected)

    @parameterized.expand([(n,) for n in (2, 7, 30)])
    def test_mean_is_first_cumulant(self, n):
        self.assertEqual(tree_length.moment_L_alternating(n, 1), tree_length.cumulant_L(n, 1))

    def test_ordered_sum_budget(self):
        cfg.ENUM.BUDGET = 10
        with self.assertRaises(ComplexityGuardError):
            tree_length.moment_L_ordered(12, 6)

    def test_quadrature(self):
        exact = float(tree_length.moment_L_alternating(10, 3))
        self.assertLess(abs(tree_length.moment_L_quadrature(10, 3) - exact), 1e-8 * exact)


class TestDistribution(unittest.TestCase):
    def test_cdf_two_lineages(self):
        self.assertAlmostEqual(tree_length.cdf_L(2, 3.0), 1.0 - math.exp(-1.5), places=14)

    def test_cdf_is_power_of_exponential_cdf(self):
        t = np.array([0.5, 2.0, 9.0])
        expected = (1.0 - np.exp(-t / 2.0)) ** 9
        np.testing.assert_allclose(tree_length.cdf_L(10, t), expected, rtol=1e-12)

    def test_density_derivative_of_cdf(self):
        t, h = 4.0, 1e-5
        slope = (tree_length.cdf_L(8, t + h) - tree_length.cdf_L(8, t - h)) / (2 * h)
        self.assertAlmostEqual(tree_length.density_L(8, t), slope, places=8)


class TestShifted(unittest.TestCase):
    def test_exact_parts(self):
        kappa = tree_length.gumbel_shift_cumulants(3, 2)
        self.assertEqual(kappa.exact, Fraction(5, 4))
        self.assertIsNone(kappa.log_offset)
        mean = tree_length.gumbel_shift_cumulants(3, 1)
        self.assertEqual(mean.exact, Fraction(3, 2))
        self.assertEqual(mean.log_offset, 3)
        self.assertEqual(str(mean), "H_2-log(3)")

    def test_mean_value(self):
        mean = tree_length.gumbel_shift_cumulants(3, 1)
        self.assertAlmostEqual(float(mean), 1.5 - math.log(3), places=14)

    def test_second_cumulant_tends_to_zeta2(self):
        n = 10 ** 4
        value = float(tree_length.gumbel_shift_cumulants(n, 2))
        self.assertLess(abs(value - eval_float(zeta(2))), 1.0 / (n - 1))

    def test_mean_tends_to_euler_gamma(self):
        value = float(tree_length.gumbel_shift_cumulants(10 ** 6, 1))
        self.assertLess(abs(value - eval_float(euler_gamma())), 1e-6)

    @parameterized.expand([(3,), (4,)])
    def test_higher_cumulants_converge(self, j):
        # the omitted tail (j-1)! sum_{k >= n} k^-j is below (j-2)! (n-1)^(1-j)
        limit = eval_float(gumbel_cumulant(j))
        previous = None
        for n in (10, 100, 10 ** 4):
            error = abs(float(tree_length.gumbel_shift_cumulants(n, j)) - limit)
            self.assertLess(error, math.factorial(j - 2) * (n - 1) ** (1 - j) + 1e-15)
            if previous is not None:
                self.assertLess(error, previous)
            previous = error

    def test_mean_error_decays_like_inverse_n(self):
        n = 10 ** 4
        self.assertAlmostEqual(n * tree_length.mean_L_asymptotic_error(n), -1.0, places=3)


if __name__ == "__main__":
    unittest.main()
