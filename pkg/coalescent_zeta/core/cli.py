#!/usr/bin/env python3

"""Command-line driver: tables, compute and verify."""

import argparse
import sys
from fractions import Fraction

import coalescent_zeta.core.builders as builders
import coalescent_zeta.core.config as config
import coalescent_zeta.core.io as io
import coalescent_zeta.core.logging as logging
import coalescent_zeta.gumbel.moments as gumbel
import simplejson
from coalescent_zeta.coalescent.absorption import cumulant_T, moment_T
from coalescent_zeta.core.config import cfg
from coalescent_zeta.core.errors import CoalescentZetaError
from coalescent_zeta.core.meters import CheckMeter
from coalescent_zeta.core.timer import Timer


logger = logging.get_logger(__name__)

# Exit codes
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _int_tuple(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected integers like 2,3,4: " + text)


def _rational_list(text):
    try:
        return [Fraction(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("expected rationals like 0,1,5/2: " + text)


def _common_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--digits", type=int, help="Decimal places of numeric output")
    parser.add_argument("--form", choices=["zeta", "pi", "numeric", "all"])
    parser.add_argument("--format", dest="fmt", choices=["text", "json", "csv"])
    parser.add_argument("--seed", type=int, help="Simulation seed")
    parser.add_argument("--trunc", type=int, help="Series truncation K or N")
    config.add_cfg_args(parser)
    return parser


def _add_compute_args(parser):
    parser.add_argument("quantity", choices=builders.quantity_names())
    for name in ("n", "j", "i", "m", "k", "reps"):
        parser.add_argument("--" + name, type=int)
    parser.add_argument("--t", type=float, help="Time argument")
    parser.add_argument("--alpha", type=Fraction, help="Exponential rate")
    parser.add_argument("--parts", type=_int_tuple, help="Parts n_1,...,n_i")
    parser.add_argument("--rates", type=_rational_list, help="Death rates d_1,...,d_n")
    parser.add_argument("--route", type=str, help="Alternative computation route")
    parser.add_argument("--kind", choices=["unsigned", "signed"], default="unsigned")
    parser.add_argument("--statistic", type=str, help="Simulated statistic")


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="coalescent-zeta",
        description="Exact zeta-value moments of the Kingman coalescent and Gumbel law",
    )
    sub = parser.add_subparsers(dest="command")
    sub.required = True
    sub.add_parser("tables", parents=[common], help="Cumulant, moment tables")
    compute = sub.add_parser("compute", parents=[common], help="Compute a quantity")
    _add_compute_args(compute)
    verify = sub.add_parser("verify", parents=[common], help="Run oracle suites")
    verify.add_argument(
        "suite", nargs="?", choices=["exact", "numeric", "simulation", "all"]
    )
    verify.add_argument("--fault", type=str, help="Corrupt the named check")
    return parser


def _apply_flags(args):
    """Flags override the config file and --opts."""
    flags = {
        "NUMERIC.DIGITS": args.digits,
        "OUTPUT.FORM": args.form,
        "OUTPUT.FORMAT": args.fmt,
        "SIM.SEED": args.seed,
        "VERIFY.SUITE": getattr(args, "suite", None),
        "VERIFY.FAULT": getattr(args, "fault", None),
    }
    opts = []
    for key, value in flags.items():
        if value is not None:
            opts += [key, value]
    if args.trunc is not None and args.command == "verify":
        opts += ["SERIES.TRUNC", args.trunc]
    cfg.merge_from_list(opts)


def table_records():
    """Records of the cumulant and moment tables and the central-moment list."""
    records = [
        io.OutputRecord.from_value("cumulant-t", j, cumulant_T(j)) for j in range(1, 6)
    ]
    records += [
        io.OutputRecord.from_value("moment-t", j, moment_T(j)) for j in range(1, 6)
    ]
    records += [
        io.OutputRecord.from_value("gumbel-central", n, gumbel.gumbel_central_moment(n))
        for n in range(2, 11)
    ]
    return records


def cmd_tables(args):
    print(io.render(table_records()))
    return EXIT_OK


def cmd_compute(args):
    handler = builders.get_quantity(args.quantity)
    print(io.render(handler(args)))
    return EXIT_OK


def _check_line(record):
    status = "PASS" if record["passed"] else "FAIL"
    line = "{} {} observed={} expected={}".format(
        status, record["name"], record["observed"], record["expected"]
    )
    if record["tolerance"] is not None:
        line += " tolerance={:g}".format(record["tolerance"])
    return line + " ({:.2f}s)".format(record["seconds"])


def cmd_verify(args):
    meter = CheckMeter()
    suite_timer = Timer()
    for suite in builders.get_suites():
        with suite_timer.lap(suite.__name__):
            suite(meter)
    meter.log_stats()
    logger.info(logging.dump_log_data(suite_timer.laps, "suite_times"))
    if cfg.OUTPUT.FORMAT == "json":
        report = {"checks": meter.records, "summary": meter.get_stats()}
        print(simplejson.dumps(logging.float_to_decimal(report), use_decimal=True))
    else:
        for record in meter.records:
            print(_check_line(record))
        stats = meter.get_stats()
        print("{} checks, {} failed".format(stats["checks"], stats["failed"]))
    return EXIT_OK if meter.all_passed else EXIT_CHECK_FAILED


_commands = {"tables": cmd_tables, "compute": cmd_compute, "verify": cmd_verify}


def main(argv=None):
    """Parses argv, sets up the config and runs a command; returns the exit code."""
    args = build_parser().parse_args(argv)
    try:
        config.load_cfg_fom_args(args)
        _apply_flags(args)
        config.assert_and_infer_cfg()
        cfg.freeze()
        logging.setup_logging()
        if args.command != "tables":
            logger.info("Config written to {}".format(config.dump_cfg()))
        return _commands[args.command](args)
    except (CoalescentZetaError, AssertionError) as err:
        print("error: {}".format(err), file=sys.stderr)
        return EXIT_USAGE
