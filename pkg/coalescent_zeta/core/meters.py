#!/usr/bin/env python3

"""Meters."""

import math

import coalescent_zeta.core.logging as logging
import numpy as np
from coalescent_zeta.core.timer import Timer


logger = logging.get_logger(__name__)

# Highest central power sum tracked by MomentMeter
_MAX_ORDER = 6


class MomentMeter(object):
    """Count, mean and central power sums M_2..M_6 of a stream of blocks.

    Each block is reduced with a two-pass scheme and blocks are combined with the
    pairwise update of the central power sums, so merging in a fixed order gives
    identical results whatever the number of workers.
    """

    def __init__(self):
        self.count = 0
        self.mean = 0.0
        # sums[p] = sum (x - mean)^p for 2 <= p <= _MAX_ORDER
        self.sums = [0.0] * (_MAX_ORDER + 1)

    def reset(self):
        self.__init__()

    @classmethod
    def from_values(cls, values):
        meter = cls()
        values = np.asarray(values, dtype=np.float64)
        if values.size == 0:
            return meter
        meter.count = int(values.size)
        meter.mean = float(np.mean(values))
        dev = values - meter.mean
        for p in range(2, _MAX_ORDER + 1):
            meter.sums[p] = math.fsum(dev ** p)
        return meter

    def add_values(self, values):
        self.merge(MomentMeter.from_values(values))

    def merge(self, other):
        """Folds other into self (self plays the role of the first block)."""
        if other.count == 0:
            return self
        if self.count == 0:
            self.count, self.mean, self.sums = other.count, other.mean, list(other.sums)
            return self
        n_a, n_b = self.count, other.count
        n = n_a + n_b
        delta = other.mean - self.mean
        sums = [0.0] * (_MAX_ORDER + 1)
        for p in range(2, _MAX_ORDER + 1):
            total = self.sums[p] + other.sums[p]
            for k in range(1, p - 1):
                total += math.comb(p, k) * delta ** k * (
                    (-n_b / n) ** k * self.sums[p - k]
                    + (n_a / n) ** k * other.sums[p - k]
                )
            total += (n_a * n_b * delta / n) ** p * (
                1.0 / n_b ** (p - 1) - (-1.0 / n_a) ** (p - 1)
            )
            sums[p] = total
        self.count, self.mean, self.sums = n, self.mean + delta * n_b / n, sums
        return self

    def get_central_moment(self, p):
        """Population central moment sum (x - mean)^p / count."""
        if p == 1:
            return 0.0
        return self.sums[p] / self.count

    def get_variance(self):
        """Unbiased sample variance."""
        return self.sums[2] / (self.count - 1) if self.count > 1 else 0.0

    def get_stats(self):
        stats = {"count": self.count, "mean": self.mean}
        stats["variance"] = self.get_variance()
        for p in range(2, _MAX_ORDER + 1):
            stats["m{}".format(p)] = self.get_central_moment(p)
        return stats


class CheckMeter(object):
    """Records verification checks and logs each as a json_stats record."""

    def __init__(self):
        self.timer = Timer()
        self.records = []

    def reset(self):
        self.timer.reset()
        self.records = []

    def add(self, name, passed, observed, expected, tolerance, seconds=0.0):
        record = {
            "name": name,
            "passed": bool(passed),
            "observed": observed,
            "expected": expected,
            "tolerance": tolerance,
            "seconds": seconds,
        }
        self.records.append(record)
        logger.info(logging.dump_log_data(record, "check"))
        return record

    @property
    def num_failed(self):
        return sum(not r["passed"] for r in self.records)

    @property
    def all_passed(self):
        return self.num_failed == 0

    def get_stats(self):
        return {
            "checks": len(self.records),
            "failed": self.num_failed,
            "time_total": self.timer.total_time,
        }

    def log_stats(self):
        logger.info(logging.dump_log_data(self.get_stats(), "verify"))
