#!/usr/bin/env python3

"""Pure death processes: generator, spectral pair and transition probabilities."""

import unittest
from fractions import Fraction

import numpy as np
from coalescent_zeta.coalescent import absorption, death_process
from coalescent_zeta.core.errors import (
    DuplicateRatesError,
    ScaleGuardError,
    SizeGuardError,
)
from parameterized import parameterized
from scipy import linalg


class TestRates(unittest.TestCase):
    def test_duplicates(self):
        with self.assertRaises(DuplicateRatesError):
            death_process.DeathRateVector((1, 2, 1))

    def test_kingman(self):
        rates = death_process.DeathRateVector.kingman(4)
        self.assertEqual(rates.rates, (0, 1, 3, 6))
        self.assertTrue(rates.exact)
        self.assertEqual(rates.n, 4)

    def test_generator(self):
        q = death_process.generator_matrix((0, 1, 3))
        expected = [[0, 0, 0], [1, -1, 0], [0, 3, -3]]
        self.assertTrue(np.array_equal(q, np.array(expected, dtype=object)))


class TestSpectralPair(unittest.TestCase):
    @parameterized.expand([(n,) for n in (1, 2, 5, 10)])
    def test_exact_identities(self, n):
        rates = death_process.DeathRateVector.kingman(n)
        pair = death_process.spectral_pair(rates)
        self.assertTrue(pair.exact)
        eye = np.identity(n, dtype=object)
        self.assertTrue(np.array_equal(pair.R.dot(pair.L), eye))

    def test_random_rational_rates(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            n = int(rng.integers(1, 9))
            nums = rng.choice(np.arange(0, 500), size=n, replace=False)
            rates = tuple(Fraction(int(x), 3) for x in nums)
            pair = death_process.spectral_pair(rates)
            q = death_process.generator_matrix(rates)
            dmat = np.diag([-d for d in rates]).astype(object)
            self.assertTrue(np.array_equal(pair.R.dot(dmat), q.dot(pair.R)))

    def test_float_rates(self):
        pair = death_process.spectral_pair((0.0, 1.5, 4.0))
        self.assertFalse(pair.exact)
        np.testing.assert_allclose(pair.R @ pair.L, np.eye(3), atol=1e-12)


class TestTransitions(unittest.TestCase):
    @parameterized.expand([(n, t) for n in (2, 6, 10) for t in (0.1, 1.0, 3.0)])
    def test_absorption_probability(self, n, t):
        rates = death_process.DeathRateVector.kingman(n)
        p = death_process.transition_probability(rates, n, 1, t)
        self.assertAlmostEqual(p, absorption.cdf_T_n(n, t), places=10)

    def test_identity_at_zero(self):
        p = death_process.transition_matrix((0, 1, 3, 6), 0.0)
        np.testing.assert_allclose(p, np.eye(4), atol=1e-12)

    def test_rows_are_distributions(self):
        p = death_process.transition_matrix(death_process.DeathRateVector.kingman(6), 0.8)
        np.testing.assert_allclose(p.sum(axis=1), np.ones(6), atol=1e-12)
        self.assertTrue(np.all(p > -1e-12))

    @parameterized.expand([(0.2,), (1.0,), (2.5,)])
    def test_matches_matrix_exponential(self, t):
        rates = tuple(Fraction(k) for k in range(7))
        q = death_process.generator_matrix(rates)
        np.testing.assert_allclose(
            death_process.transition_matrix(rates, t),
            death_process.matrix_exponential(q, t),
            atol=1e-10,
        )

    @parameterized.expand([(n, s, t) for n in (2, 4, 6) for s, t in ((0.3, 0.5), (1.0, 2.5))])
    def test_chapman_kolmogorov(self, n, s, t):
        rates = death_process.DeathRateVector.kingman(n)
        pair = death_process.spectral_pair(rates)
        p_s = death_process.transition_matrix(rates, s, pair)
        p_t = death_process.transition_matrix(rates, t, pair)
        p_st = death_process.transition_matrix(rates, s + t, pair)
        np.testing.assert_allclose(p_s @ p_t, p_st, atol=1e-9)

    @parameterized.expand([(n,) for n in (3, 6, 10)])
    def test_absorption_is_nondecreasing(self, n):
        rates = death_process.DeathRateVector.kingman(n)
        pair = death_process.spectral_pair(rates)
        grid = np.linspace(0.0, 8.0, 81)
        for i in range(2, n + 1):
            p = [death_process.transition_probability(rates, i, 1, t, pair) for t in grid]
            self.assertTrue(np.all(np.diff(p) >= -1e-10))

    def test_state_range(self):
        with self.assertRaises(AssertionError):
            death_process.transition_probability((0, 1, 3), 1, 2, 1.0)


class TestMatrixExponentialGuards(unittest.TestCase):
    def test_norm_guard(self):
        q = death_process.generator_matrix(death_process.DeathRateVector.kingman(8))
        with self.assertRaises(ScaleGuardError):
            death_process.matrix_exponential(q, 100.0)

    def test_size_guard(self):
        q = death_process.generator_matrix(death_process.DeathRateVector.kingman(20))
        with self.assertRaises(SizeGuardError):
            death_process.matrix_exponential(q, 0.1)

    @parameterized.expand([(4, 0.3), (8, 1.0), (12, 0.5)])
    def test_matches_scipy(self, n, t):
        q = death_process.generator_matrix(death_process.DeathRateVector.kingman(n))
        np.testing.assert_allclose(
            death_process.matrix_exponential(q, t),
            linalg.expm(np.array(q, dtype=np.float64) * t),
            atol=1e-12,
        )

    def test_scalar_case(self):
        np.testing.assert_allclose(
            death_process.matrix_exponential(np.array([[-2.0]]), 1.5), [[np.exp(-3.0)]]
        )


if __name__ == "__main__":
    unittest.main()
