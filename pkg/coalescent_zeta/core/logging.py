#!/usr/bin/env python3

"""Logging."""

import decimal
import logging
import os
import sys
from fractions import Fraction

import simplejson
from coalescent_zeta.core.config import cfg


# Show filename and line number in logs
_FORMAT = "[%(filename)s: %(lineno)3d]: %(message)s"

# Log file name (for cfg.LOG_DEST = 'file')
_LOG_FILE = "stdout.log"

# Data output with dump_log_data(data, data_type) will be tagged w/ this
_TAG = "json_stats: "

# Data output with dump_log_data(data, data_type) will have data[_TYPE]=data_type
_TYPE = "_type"


def setup_logging():
    """Sets up the logging."""
    # Clear the root logger to prevent any existing logging config
    # (e.g. set by another module) from messing with our setup
    logging.root.handlers = []
    # Construct logging configuration
    logging_config = {"level": logging.INFO, "format": _FORMAT}
    # Data goes to stdout, so logs default to stderr
    if cfg.LOG_DEST == "stderr":
        logging_config["stream"] = sys.stderr
    elif cfg.LOG_DEST == "stdout":
        logging_config["stream"] = sys.stdout
    else:
        os.makedirs(cfg.OUT_DIR, exist_ok=True)
        logging_config["filename"] = log_file_path()
    # Configure logging
    logging.basicConfig(**logging_config)


def get_logger(name):
    """Retrieves the logger."""
    return logging.getLogger(name)


def log_file_path():
    """Path of the log file written when cfg.LOG_DEST is 'file'."""
    return os.path.join(cfg.OUT_DIR, _LOG_FILE)


def dump_log_data(data, data_type, prec=6):
    """Covert data (a dictionary) into tagged json string for logging."""
    data = dict(data)
    data[_TYPE] = data_type
    data = float_to_decimal(data, prec)
    data_json = simplejson.dumps(data, sort_keys=True, use_decimal=True)
    return "{:s}{:s}".format(_TAG, data_json)


def float_to_decimal(data, prec=6):
    """Convert floats to decimals which allows for fixed width json."""
    if isinstance(data, dict):
        return {k: float_to_decimal(v, prec) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [float_to_decimal(v, prec) for v in data]
    if isinstance(data, Fraction):
        return str(data)
    if isinstance(data, float):
        if data != data or data in (float("inf"), float("-inf")):
            return str(data)
        return decimal.Decimal(("{:." + str(prec) + "g}").format(data))
    else:
        return data
