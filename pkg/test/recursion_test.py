#!/usr/bin/env python3

"""The double recursion s_ij = s_{i-1,j} - s_{i,j-1} and its diagonal series."""

import itertools
import math
import unittest

from coalescent_zeta.algebra.numeric import eval_float
from coalescent_zeta.algebra.polynomial import LOG2, log2, zeta
from coalescent_zeta.core.errors import DivergentTailError
from coalescent_zeta.series.recursion import (
    SeriesKind,
    diagonal_series_truncated,
    series_spec,
    signed_diagonal,
    solve_by_recursion,
    solve_closed,
    unsigned_diagonal,
)
from parameterized import parameterized


_PAIRS = [
    (kind, i, j)
    for kind in ("unsigned", "signed")
    for i, j in itertools.product(range(1, 7), repeat=2)
]


class TestSolver(unittest.TestCase):
    @parameterized.expand(_PAIRS)
    def test_closed_form_matches_recursion(self, kind, i, j):
        spec = series_spec(kind)
        self.assertEqual(solve_closed(i, j, spec), solve_by_recursion(i, j, spec))

    def test_signed_initial_values(self):
        spec = series_spec(SeriesKind.SIGNED)
        self.assertEqual(spec.a(1), 1)
        self.assertEqual(spec.b(1), 0)
        self.assertEqual(spec.a(2), 2 * log2() + zeta(2) / 2)

    def test_unsigned_initial_values(self):
        spec = series_spec("unsigned")
        self.assertEqual(spec.a(3), zeta(3))
        self.assertEqual(spec.b(2), zeta(2) - 1)

    def test_indices_start_at_one(self):
        with self.assertRaises(AssertionError):
            solve_closed(0, 2, series_spec("unsigned"))

    def test_unknown_kind(self):
        with self.assertRaises(ValueError):
            series_spec("alternating")


class TestDiagonals(unittest.TestCase):
    def test_unsigned_first_values(self):
        self.assertEqual(unsigned_diagonal(1), 1)
        self.assertEqual(unsigned_diagonal(2), 2 * zeta(2) - 3)

    @parameterized.expand([(j,) for j in range(1, 9)])
    def test_unsigned_diagonal_solves_recursion(self, j):
        self.assertEqual(unsigned_diagonal(j), solve_closed(j, j, "unsigned"))

    @parameterized.expand([(j,) for j in range(1, 11)])
    def test_log2_cancels_on_signed_diagonal(self, j):
        self.assertFalse(signed_diagonal(j).has_kind(LOG2))

    def test_signed_first_value(self):
        self.assertEqual(signed_diagonal(1), 1)


class TestTruncatedSeries(unittest.TestCase):
    @parameterized.expand([(j,) for j in range(1, 6)])
    def test_unsigned_contains_closed_form(self, j):
        est = diagonal_series_truncated("unsigned", j, 10 ** 5)
        self.assertTrue(est.contains(eval_float(unsigned_diagonal(j))))

    @parameterized.expand([(j,) for j in range(1, 6)])
    def test_signed_paired_contains_closed_form(self, j):
        est = diagonal_series_truncated("signed", j, 10 ** 5 + 1)
        self.assertTrue(est.contains(eval_float(signed_diagonal(j))))

    def test_unpaired_signed_j1_diverges(self):
        with self.assertRaises(DivergentTailError):
            diagonal_series_truncated("signed", 1, 1000, paired=False)

    def test_unpaired_signed_converges_for_j2(self):
        est = diagonal_series_truncated("signed", 2, 10 ** 4, paired=False)
        self.assertTrue(est.contains(eval_float(signed_diagonal(2))))

    def test_tail_bound_shrinks(self):
        coarse = diagonal_series_truncated("unsigned", 2, 100)
        fine = diagonal_series_truncated("unsigned", 2, 10000)
        self.assertLess(fine.tail_bound, coarse.tail_bound)
        self.assertTrue(math.isfinite(fine.error_bound))


if __name__ == "__main__":
    unittest.main()
