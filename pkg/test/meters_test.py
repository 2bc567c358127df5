#!/usr/bin/env python3

"""Moment and check meters, the timer and the process pool helper."""

import unittest

import numpy as np
import simplejson
from coalescent_zeta.core import distributed as dist
from coalescent_zeta.core import logging
from coalescent_zeta.core.meters import CheckMeter, MomentMeter
from coalescent_zeta.core.timer import Timer
from parameterized import parameterized


def _square(x):
    return x * x


def _fail(x):
    raise ValueError("bad input {}".format(x))


def _json_stats(lines, data_type):
    tag = "json_stats: "
    lines = [line[line.find(tag) + len(tag) :] for line in lines if tag in line]
    records = [simplejson.loads(line) for line in lines]
    return [r for r in records if r["_type"] == data_type]


class TestMomentMeter(unittest.TestCase):
    @parameterized.expand([(1,), (7,), (500,)])
    def test_merge_matches_single_pass(self, split):
        values = np.random.default_rng(3).exponential(size=1000)
        whole = MomentMeter.from_values(values)
        merged = MomentMeter.from_values(values[:split])
        merged.merge(MomentMeter.from_values(values[split:]))
        self.assertEqual(merged.count, whole.count)
        self.assertAlmostEqual(merged.mean, whole.mean, places=12)
        for p in range(2, 7):
            self.assertAlmostEqual(
                merged.get_central_moment(p) / whole.get_central_moment(p), 1.0, places=9
            )

    def test_exponential_moments(self):
        values = np.random.default_rng(0).exponential(size=200000)
        meter = MomentMeter.from_values(values)
        self.assertAlmostEqual(meter.get_variance(), 1.0, delta=0.02)
        self.assertAlmostEqual(meter.get_central_moment(3), 2.0, delta=0.1)

    def test_empty_merge(self):
        meter = MomentMeter()
        meter.merge(MomentMeter())
        self.assertEqual(meter.count, 0)
        meter.add_values([1.0, 3.0])
        self.assertEqual(meter.get_stats()["mean"], 2.0)
        self.assertEqual(meter.get_variance(), 2.0)


class TestCheckMeter(unittest.TestCase):
    def test_counts(self):
        meter = CheckMeter()
        meter.add("a", True, 1, 1, None)
        meter.add("b", False, 1.5, 1.0, 0.1)
        self.assertEqual(meter.num_failed, 1)
        self.assertFalse(meter.all_passed)
        self.assertEqual(meter.get_stats()["checks"], 2)
        meter.reset()
        self.assertTrue(meter.all_passed)

    def test_records_are_logged(self):
        meter = CheckMeter()
        with self.assertLogs("coalescent_zeta.core.meters", level="INFO") as logs:
            meter.add("a", True, "2", "2", None)
        records = _json_stats(logs.output, "check")
        self.assertEqual([r["name"] for r in records], ["a"])


class TestTimer(unittest.TestCase):
    def test_laps(self):
        timer = Timer()
        with timer.lap("work"):
            sum(range(1000))
        self.assertEqual(timer.calls, 1)
        self.assertIn("work", timer.laps)
        self.assertGreaterEqual(timer.total_time, 0.0)
        timer.reset()
        self.assertEqual(timer.average_time, 0.0)

    def test_toc_needs_tic(self):
        with self.assertRaises(AssertionError):
            Timer().toc()


class TestMultiProcMap(unittest.TestCase):
    @parameterized.expand([(1,), (3,)])
    def test_order_is_kept(self, num_proc):
        args = [(x,) for x in range(10)]
        self.assertEqual(dist.multi_proc_map(num_proc, _square, args), [x * x for x in range(10)])

    def test_child_exception(self):
        with self.assertRaises(dist.ChildException):
            dist.multi_proc_map(2, _fail, [(1,), (2,)])


class TestLogData(unittest.TestCase):
    def test_round_trip(self):
        line = logging.dump_log_data({"x": 0.125, "n": 3}, "sample")
        (record,) = _json_stats([line], "sample")
        self.assertEqual(record["n"], 3)
        self.assertEqual(float(record["x"]), 0.125)


if __name__ == "__main__":
    unittest.main()
