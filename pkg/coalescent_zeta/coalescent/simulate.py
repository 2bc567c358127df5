#!/usr/bin/env python3

"""Seeded Monte-Carlo sampling of T_n and L_n from the block-counting chain.

Replicate r draws from its own generator default_rng(SeedSequence(seed,
spawn_key=(r,))); a replicate draws the holding times tau_k ~ Exp(lambda_k) for
k = n down to 2 by inversion, tau = -log(1 - U) / lambda. Replicates are grouped
in fixed-size blocks whose moment accumulators are merged in block order, so a
configuration always yields the same summary regardless of NUM_PROC.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import coalescent_zeta.core.distributed as dist
import coalescent_zeta.core.logging as logging
import numpy as np
from coalescent_zeta.core.config import cfg
from coalescent_zeta.core.meters import MomentMeter
from scipy import stats

__all__ = [
    "SimConfig",
    "SampleSummary",
    "KSResult",
    "sample",
    "ks_test",
    "ks_two_sample",
    "get_statistic",
    "register_statistic",
]


logger = logging.get_logger(__name__)


def _hold_times(rng, n):
    # tau_k for k = n, n-1, ..., 2
    k = np.arange(n, 1, -1, dtype=np.float64)
    rates = k * (k - 1.0) / 2.0
    return k, -np.log1p(-rng.random(n - 1)) / rates


def absorption_time(rng, n):
    """T_n = sum_k tau_k."""
    _, tau = _hold_times(rng, n)
    return float(np.sum(tau))


def tree_length(rng, n):
    """L_n = sum_k k tau_k."""
    k, tau = _hold_times(rng, n)
    return float(np.sum(k * tau))


def shifted_tree_length(rng, n):
    """G_n = L_n / 2 - log n."""
    return tree_length(rng, n) / 2.0 - math.log(n)


def tree_length_max(rng, n):
    """L_n drawn as the maximum of n-1 independent Exp(1/2) variables."""
    return float(np.max(-2.0 * np.log1p(-rng.random(n - 1))))


# Supported statistics
_statistics = {
    "absorption_time": absorption_time,
    "tree_length": tree_length,
    "shifted_tree_length": shifted_tree_length,
    "tree_length_max": tree_length_max,
}


def get_statistic(name):
    """Gets the sampler of a statistic."""
    err_str = "Statistic '{}' not supported"
    assert name in _statistics.keys(), err_str.format(name)
    return _statistics[name]


def register_statistic(name, sampler):
    """Registers a statistic dynamically (sampler(rng, n) -> float)."""
    _statistics[name] = sampler


@dataclass(frozen=True)
class SimConfig(object):
    n: int
    reps: int
    seed: int
    statistic: str = "absorption_time"
    block_size: int = 10000
    num_proc: int = 1

    def __post_init__(self):
        err_str = "Simulation needs n >= 2 and reps >= 1, got n={}, reps={}"
        assert self.n >= 2 and self.reps >= 1, err_str.format(self.n, self.reps)
        get_statistic(self.statistic)

    @classmethod
    def from_cfg(cls):
        return cls(
            n=cfg.SIM.N,
            reps=cfg.SIM.REPS,
            seed=cfg.SIM.SEED,
            statistic=cfg.SIM.STATISTIC,
            block_size=cfg.SIM.BLOCK_SIZE,
            num_proc=cfg.SIM.NUM_PROC,
        )


def replicate_rng(seed, r):
    """Generator of replicate r, derived from (seed, r)."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(r,)))


def _sample_block(statistic, n, seed, start, stop):
    sampler = get_statistic(statistic)
    return np.array([sampler(replicate_rng(seed, r), n) for r in range(start, stop)])


@dataclass
class SampleSummary(object):
    """Moments and empirical CDF of a sample."""

    count: int
    mean: float
    variance: float
    central_moments: dict
    values: Optional[np.ndarray] = field(default=None, repr=False)

    @classmethod
    def from_meter(cls, meter, values=None):
        moments = {p: meter.get_central_moment(p) for p in range(2, 7)}
        values = None if values is None else np.sort(values)
        return cls(meter.count, meter.mean, meter.get_variance(), moments, values)

    @property
    def standard_error(self):
        """Standard error of the mean."""
        return math.sqrt(self.variance / self.count)

    @property
    def variance_standard_error(self):
        """Asymptotic standard error of the sample variance, sqrt((m4 - m2^2) / n)."""
        m2, m4 = self.central_moments[2], self.central_moments[4]
        return math.sqrt(max(m4 - m2 * m2, 0.0) / self.count)

    def ecdf(self, x):
        """Empirical CDF at x (scalar or array)."""
        assert self.values is not None, "The sample was not kept"
        return np.searchsorted(self.values, x, side="right") / self.count

    def ks_statistic(self, cdf):
        return ks_test(self.values, cdf).statistic

    def get_stats(self):
        stats_ = {"count": self.count, "mean": self.mean, "variance": self.variance}
        stats_.update({"m{}".format(p): v for p, v in self.central_moments.items()})
        return stats_


def sample(config=None, keep_values=True):
    """Draws config.reps replicates of the configured statistic."""
    config = SimConfig.from_cfg() if config is None else config
    n_reps = config.reps
    starts = range(0, n_reps, config.block_size)
    args = [
        (config.statistic, config.n, config.seed, s, min(s + config.block_size, n_reps))
        for s in starts
    ]
    blocks = dist.multi_proc_map(config.num_proc, _sample_block, args)
    meter = MomentMeter()
    for block in blocks:
        meter.merge(MomentMeter.from_values(block))
    values = np.concatenate(blocks) if keep_values else None
    summary = SampleSummary.from_meter(meter, values)
    data = {"statistic": config.statistic, "n": config.n, "seed": config.seed}
    data.update(summary.get_stats())
    logger.info(logging.dump_log_data(data, "sample"))
    return summary


@dataclass(frozen=True)
class KSResult(object):
    statistic: float
    pvalue: float
    critical_value: float
    alpha: float

    @property
    def passed(self):
        return self.statistic <= self.critical_value


def _values_of(sample_):
    if isinstance(sample_, SampleSummary):
        return sample_.values
    return np.asarray(sample_, dtype=np.float64)


def ks_test(sample_, cdf, alpha=None):
    """One-sample Kolmogorov-Smirnov test against a vectorized cdf.

    Passes when the statistic is below the asymptotic critical value
    K_{1-alpha} / sqrt(n) of the Kolmogorov distribution.
    """
    alpha = cfg.SIM.ALPHA if alpha is None else alpha
    values = _values_of(sample_)
    assert values is not None and values.size > 0, "KS test needs a non-empty sample"
    result = stats.kstest(values, cdf)
    critical = stats.kstwobign.ppf(1.0 - alpha) / math.sqrt(values.size)
    statistic, pvalue = float(result.statistic), float(result.pvalue)
    return KSResult(statistic, pvalue, float(critical), alpha)


def ks_two_sample(sample_a, sample_b, alpha=None):
    """Two-sample Kolmogorov-Smirnov test with the asymptotic critical value."""
    alpha = cfg.SIM.ALPHA if alpha is None else alpha
    a, b = _values_of(sample_a), _values_of(sample_b)
    assert a.size > 0 and b.size > 0, "KS test needs non-empty samples"
    result = stats.ks_2samp(a, b)
    scale = math.sqrt((a.size + b.size) / (a.size * b.size))
    critical = stats.kstwobign.ppf(1.0 - alpha) * scale
    statistic, pvalue = float(result.statistic), float(result.pvalue)
    return KSResult(statistic, pvalue, float(critical), alpha)
