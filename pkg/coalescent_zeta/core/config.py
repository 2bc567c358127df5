#!/usr/bin/env python3

"""Configuration file (powered by YACS)."""

import argparse
import os

from yacs.config import CfgNode as CfgNode

# Global config object
_C = CfgNode()
# Example usage:
#   from coalescent_zeta.core.config import cfg
cfg = _C

# ------------------------------------------------------------------------------------ #
# Numeric evaluation options
# ------------------------------------------------------------------------------------ #
_C.NUMERIC = CfgNode()

# Decimal places for numeric output (the published tables use 5)
_C.NUMERIC.DIGITS = 5

# Largest supported number of decimal places (precision of the embedded constants)
_C.NUMERIC.MAX_DIGITS = 50

# Extra working digits used by mpmath on top of the requested ones
_C.NUMERIC.GUARD_DIGITS = 10

# Number of Euler-Maclaurin correction terms used by the zeta evaluator
_C.NUMERIC.EM_TERMS = 2

# Cap on the direct-sum length of the zeta evaluator (more correction terms beyond it)
_C.NUMERIC.ZETA_MAX_TERMS = 10000


# ------------------------------------------------------------------------------------ #
# Truncated series options
# ------------------------------------------------------------------------------------ #
_C.SERIES = CfgNode()

# Truncation index K for the defining series of the diagonal values
_C.SERIES.TRUNC = 1000000


# ------------------------------------------------------------------------------------ #
# Enumeration options
# ------------------------------------------------------------------------------------ #
_C.ENUM = CfgNode()

# Maximum number of tuples visited by a brute-force enumeration
_C.ENUM.BUDGET = 10000000

# Largest set size for set-partition enumeration (Bell number growth)
_C.ENUM.MAX_SET_SIZE = 14


# ------------------------------------------------------------------------------------ #
# Density options
# ------------------------------------------------------------------------------------ #
_C.DENSITY = CfgNode()

# Below this t the series for the limiting density is not evaluated
_C.DENSITY.MIN_T = 1e-3

# Largest accepted tail bound of the limiting density series
_C.DENSITY.TOL = 1e-12

# Upper integration limit for quadrature checks (the density decays like e^{-t})
_C.DENSITY.T_MAX = 60.0

# Number of terms K of the limiting density series
_C.DENSITY.TRUNC = 400


# ------------------------------------------------------------------------------------ #
# Death process options
# ------------------------------------------------------------------------------------ #
_C.DEATH = CfgNode()

# Largest matrix handled by the matrix exponential oracle
_C.DEATH.MAX_N = 16

# Largest accepted 1-norm of Q*t for the matrix exponential oracle
_C.DEATH.MAX_NORM = 1000.0

# Warn when max |r_ij| of the spectral pair exceeds this value
_C.DEATH.COND_WARN = 1e8


# ------------------------------------------------------------------------------------ #
# Simulation options
# ------------------------------------------------------------------------------------ #
_C.SIM = CfgNode()

# Sample size n of the coalescent
_C.SIM.N = 100

# Number of independent replicates
_C.SIM.REPS = 100000

# Root seed; replicate r draws from the stream derived from (SEED, r)
_C.SIM.SEED = 42

# Statistic to sample (see coalescent_zeta/coalescent/simulate.py for options)
_C.SIM.STATISTIC = "absorption_time"

# Replicates per block; blocks are merged in block order
_C.SIM.BLOCK_SIZE = 10000

# Number of worker processes
_C.SIM.NUM_PROC = 1

# Significance level of the Kolmogorov-Smirnov gates
_C.SIM.ALPHA = 0.01

# Optional CSV file receiving the raw sample (empty -> no file)
_C.SIM.SAMPLES_FILE = ""


# ------------------------------------------------------------------------------------ #
# Output options
# ------------------------------------------------------------------------------------ #
_C.OUTPUT = CfgNode()

# Representation of exact values ('zeta', 'pi', 'numeric' or 'all')
_C.OUTPUT.FORM = "all"

# Output format ('text', 'json' or 'csv')
_C.OUTPUT.FORMAT = "text"


# ------------------------------------------------------------------------------------ #
# Verification options
# ------------------------------------------------------------------------------------ #
_C.VERIFY = CfgNode()

# Suite to run ('exact', 'numeric', 'simulation' or 'all')
_C.VERIFY.SUITE = "all"

# Name of a check whose observed value is corrupted (fault injection, empty -> none)
_C.VERIFY.FAULT = ""


# ------------------------------------------------------------------------------------ #
# Misc options
# ------------------------------------------------------------------------------------ #

# Output directory (config dumps, log file, sample files)
_C.OUT_DIR = "/tmp/coalescent_zeta"

# Config destination (in OUT_DIR)
_C.CFG_DEST = "config.yaml"

# Log destination ('stderr', 'stdout' or 'file')
_C.LOG_DEST = "stderr"


_SUPPORTED_FORMS = ["zeta", "pi", "numeric", "all"]
_SUPPORTED_FORMATS = ["text", "json", "csv"]
_SUPPORTED_SUITES = ["exact", "numeric", "simulation", "all"]
_SUPPORTED_LOG_DESTS = ["stderr", "stdout", "file"]


def assert_and_infer_cfg():
    """Checks config values invariants."""
    err_str = "NUMERIC.DIGITS must lie in [1, NUMERIC.MAX_DIGITS]"
    assert 1 <= _C.NUMERIC.DIGITS <= _C.NUMERIC.MAX_DIGITS, err_str
    err_str = "NUMERIC.EM_TERMS must be at least 1"
    assert _C.NUMERIC.EM_TERMS >= 1, err_str
    err_str = "SERIES.TRUNC must be at least 2"
    assert _C.SERIES.TRUNC >= 2, err_str
    err_str = "DENSITY.TRUNC must be at least 2"
    assert _C.DENSITY.TRUNC >= 2, err_str
    err_str = "SIM.N must be at least 2"
    assert _C.SIM.N >= 2, err_str
    err_str = "SIM.REPS, SIM.BLOCK_SIZE and SIM.NUM_PROC must be positive"
    assert min(_C.SIM.REPS, _C.SIM.BLOCK_SIZE, _C.SIM.NUM_PROC) >= 1, err_str
    err_str = "SIM.ALPHA must lie in (0, 1)"
    assert 0.0 < _C.SIM.ALPHA < 1.0, err_str
    err_str = "Output form '{}' not supported"
    assert _C.OUTPUT.FORM in _SUPPORTED_FORMS, err_str.format(_C.OUTPUT.FORM)
    err_str = "Output format '{}' not supported"
    assert _C.OUTPUT.FORMAT in _SUPPORTED_FORMATS, err_str.format(_C.OUTPUT.FORMAT)
    err_str = "Verification suite '{}' not supported"
    assert _C.VERIFY.SUITE in _SUPPORTED_SUITES, err_str.format(_C.VERIFY.SUITE)
    err_str = "Log destination '{}' not supported"
    assert _C.LOG_DEST in _SUPPORTED_LOG_DESTS, err_str.format(_C.LOG_DEST)


def dump_cfg():
    """Dumps the config to the output directory."""
    os.makedirs(_C.OUT_DIR, exist_ok=True)
    cfg_file = os.path.join(_C.OUT_DIR, _C.CFG_DEST)
    with open(cfg_file, "w") as f:
        _C.dump(stream=f)
    return cfg_file


def add_cfg_args(parser):
    """Adds the --cfg file and --opts override arguments to a parser."""
    help_s = "Config file location"
    parser.add_argument("--cfg", dest="cfg_file", help=help_s, default=None, type=str)
    help_s = "Trailing KEY VALUE overrides, see coalescent_zeta/core/config.py"
    parser.add_argument(
        "--opts", help=help_s, default=[], nargs=argparse.REMAINDER
    )


def load_cfg_fom_args(args):
    """Load config from parsed command line arguments and apply the overrides."""
    if args.cfg_file:
        _C.merge_from_file(args.cfg_file)
    if args.opts:
        _C.merge_from_list(args.opts)


def reset_cfg():
    """Reset config to initial state."""
    _C.defrost()
    _C.merge_from_other_cfg(_CFG_DEFAULT)

# Pristine copy of the defaults (used by reset_cfg)
_CFG_DEFAULT = _C.clone()
_CFG_DEFAULT.freeze()
