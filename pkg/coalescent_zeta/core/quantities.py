#!/usr/bin/env python3

"""Quantities exposed by the compute command.

Every handler takes the parsed arguments and returns a list of OutputRecord.
Missing arguments fail with an assertion (a usage error).
"""

from fractions import Fraction

import coalescent_zeta.algebra.rational as rational
import coalescent_zeta.coalescent.absorption as absorption
import coalescent_zeta.coalescent.death_process as death
import coalescent_zeta.coalescent.simulate as simulate
import coalescent_zeta.coalescent.tree_length as tree
import coalescent_zeta.gumbel.moments as gumbel
import coalescent_zeta.gumbel.partitions as partitions
import coalescent_zeta.series.recursion as recursion
from coalescent_zeta.algebra.numeric import zeta_numeric
from coalescent_zeta.algebra.polynomial import zeta
from coalescent_zeta.core.config import cfg
from coalescent_zeta.core.io import OutputRecord, write_samples_csv


def _need(args, *names):
    for name in names:
        err_str = "Argument --{} is required for this quantity"
        assert getattr(args, name, None) is not None, err_str.format(name)
    return [getattr(args, name) for name in names]


def _record(quantity, index, value, **extra):
    record = OutputRecord.from_value(quantity, index, value, cfg.NUMERIC.DIGITS)
    record.extra.update(extra)
    return record


def _float_record(quantity, index, value, **extra):
    record = OutputRecord(quantity, index, numeric=repr(float(value)))
    record.extra.update(extra)
    return record


def _trunc(args, default):
    return default if getattr(args, "trunc", None) is None else args.trunc


def _rates(args):
    if getattr(args, "rates", None):
        return death.DeathRateVector(tuple(args.rates))
    (n,) = _need(args, "n")
    return death.DeathRateVector.kingman(n)


# ------------------------------------------------------------------------------------ #
# Exact algebra
# ------------------------------------------------------------------------------------ #


def bernoulli(args):
    (n,) = _need(args, "n")
    return [_record("bernoulli", n, rational.bernoulli(n))]


def zeta_even(args):
    (m,) = _need(args, "m")
    coeff = rational.format_rational(rational.zeta_even_coefficient(m))
    return [_record("zeta-even", m, zeta(2 * m), coefficient=coeff)]


def zeta_value(args):
    (k,) = _need(args, "k")
    err_str = "zeta(k) needs k >= 2, got {}"
    assert k >= 2, err_str.format(k)
    record = _record("zeta", k, zeta(k))
    record.numeric = format(zeta_numeric(k, cfg.NUMERIC.DIGITS), "f")
    return [record]


# ------------------------------------------------------------------------------------ #
# Recursion solver
# ------------------------------------------------------------------------------------ #


def _solvers(route):
    routes = {
        "closed": [("closed", recursion.solve_closed)],
        "recursion": [("recursion", recursion.solve_by_recursion)],
    }
    routes["both"] = routes["closed"] + routes["recursion"]
    err_str = "Route '{}' not supported (closed, recursion, both)"
    assert route in routes, err_str.format(route)
    return routes[route]


def solve(args):
    i, j = _need(args, "i", "j")
    kind = recursion.SeriesKind(args.kind or "unsigned")
    spec = recursion.series_spec(kind)
    return [
        _record("s", {"i": i, "j": j, "kind": kind.value}, fun(i, j, spec), route=name)
        for name, fun in _solvers(args.route or "closed")
    ]


def diagonal(args):
    (j,) = _need(args, "j")
    kind = recursion.SeriesKind(args.kind or "unsigned")
    if kind == recursion.SeriesKind.UNSIGNED:
        value = recursion.unsigned_diagonal(j)
    else:
        value = recursion.signed_diagonal(j)
    return [_record("diagonal", {"j": j, "kind": kind.value}, value)]


def diagonal_series(args):
    (j,) = _need(args, "j")
    kind = recursion.SeriesKind(args.kind or "unsigned")
    est = recursion.diagonal_series_truncated(kind, j, _trunc(args, cfg.SERIES.TRUNC))
    index = {"j": j, "kind": kind.value}
    bound = est.error_bound
    return [_float_record("diagonal-series", index, est.value, error_bound=bound)]


# ------------------------------------------------------------------------------------ #
# Absorption time
# ------------------------------------------------------------------------------------ #


def cumulant_t(args):
    (j,) = _need(args, "j")
    return [_record("cumulant-t", j, absorption.cumulant_T(j))]


def moment_t(args):
    (j,) = _need(args, "j")
    return [_record("moment-t", j, absorption.moment_T(j))]


def cumulant_t_n(args):
    n, j = _need(args, "n", "j")
    return [_record("cumulant-t-n", {"n": n, "j": j}, absorption.cumulant_T_n(n, j))]


def moment_t_n(args):
    n, j = _need(args, "n", "j")
    return [_record("moment-t-n", {"n": n, "j": j}, absorption.moment_T_n(n, j))]


def cumulant_t_series(args):
    (j,) = _need(args, "j")
    est = absorption.cumulant_T_series(j, _trunc(args, cfg.SERIES.TRUNC))
    bound = est.error_bound
    return [_float_record("cumulant-t-series", j, est.value, error_bound=bound)]


def moment_t_series(args):
    (j,) = _need(args, "j")
    est = absorption.moment_T_series(j, _trunc(args, cfg.SERIES.TRUNC))
    bound = est.error_bound
    return [_float_record("moment-t-series", j, est.value, error_bound=bound)]


def moment_t_ordered(args):
    (j,) = _need(args, "j")
    kmax = _trunc(args, 2000)
    value = absorption.moment_T_ordered_oracle(j, kmax)
    return [_float_record("moment-t-ordered", {"j": j, "kmax": kmax}, value)]


def hypoexp(args):
    (n,) = _need(args, "n")
    coeffs = absorption.hypoexp_coefficients(n)
    return [
        _record("hypoexp", {"n": n, "k": k}, coeffs.coefficient(k))
        for k in range(2, n + 1)
    ]


def cdf_t_n(args):
    n, t = _need(args, "n", "t")
    return [_float_record("cdf-t-n", {"n": n, "t": t}, absorption.cdf_T_n(n, t))]


def density_t_n(args):
    n, t = _need(args, "n", "t")
    value = absorption.density_g_n(n, t)
    return [_float_record("density-t-n", {"n": n, "t": t}, value)]


def density_t(args):
    (t,) = _need(args, "t")
    est = absorption.density_g(t, _trunc(args, cfg.DENSITY.TRUNC))
    return [_float_record("density-t", t, est.value, tail_bound=est.tail_bound)]


# ------------------------------------------------------------------------------------ #
# Tree length
# ------------------------------------------------------------------------------------ #


def tree_cumulant(args):
    n, j = _need(args, "n", "j")
    return [_record("tree-cumulant", {"n": n, "j": j}, tree.cumulant_L(n, j))]


_TREE_MOMENT_ROUTES = {
    "alternating": tree.moment_L_alternating,
    "ordered": tree.moment_L_ordered,
    "quadrature": tree.moment_L_quadrature,
}


def tree_moment(args):
    n, j = _need(args, "n", "j")
    route = args.route or "alternating"
    names = ["alternating", "ordered"] if route == "both" else [route]
    err_str = "Route '{}' not supported (alternating, ordered, quadrature, both)"
    assert all(name in _TREE_MOMENT_ROUTES for name in names), err_str.format(route)
    index = {"n": n, "j": j}
    return [
        _record("tree-moment", index, _TREE_MOMENT_ROUTES[name](n, j), route=name)
        for name in names
    ]


def tree_cdf(args):
    n, t = _need(args, "n", "t")
    return [_float_record("tree-cdf", {"n": n, "t": t}, tree.cdf_L(n, t))]


def tree_density(args):
    n, t = _need(args, "n", "t")
    return [_float_record("tree-density", {"n": n, "t": t}, tree.density_L(n, t))]


def gumbel_shift(args):
    n, j = _need(args, "n", "j")
    value = tree.gumbel_shift_cumulants(n, j)
    return [_record("gumbel-shift", {"n": n, "j": j}, value)]


def tree_mean_error(args):
    (n,) = _need(args, "n")
    return [_float_record("tree-mean-error", n, tree.mean_L_asymptotic_error(n))]


# ------------------------------------------------------------------------------------ #
# Gumbel
# ------------------------------------------------------------------------------------ #


def derangement(args):
    (n,) = _need(args, "n")
    return [_record("derangement", n, gumbel.derangement(n))]


def gumbel_cumulant(args):
    (j,) = _need(args, "j")
    return [_record("gumbel-cumulant", j, gumbel.gumbel_cumulant(j))]


def gumbel_moment(args):
    (n,) = _need(args, "n")
    route = args.route or "recursion"
    return [_record("gumbel-moment", n, gumbel.gumbel_moment(n, route), route=route)]


def gumbel_central(args):
    (n,) = _need(args, "n")
    route = args.route or "recursion"
    value = gumbel.gumbel_central_moment(n, route)
    return [_record("gumbel-central", n, value, route=route)]


def central_to_raw(args):
    (n,) = _need(args, "n")
    return [_record("central-to-raw", n, gumbel.central_to_raw(n))]


def s_coefficients(args):
    (n,) = _need(args, "n")
    coeffs = gumbel.central_moment_s_coefficients(n)
    return [
        _record("s-coefficient", {"n": n, "parts": "-".join(map(str, p))}, c)
        for p, c in coeffs.items()
    ]


def s_multi(args):
    (parts,) = _need(args, "parts")
    route = args.route or "partition"
    index = "-".join(map(str, parts))
    if route == "truncated":
        est = gumbel.s_multi_truncated(parts, _trunc(args, 2000))
        return [_float_record("s-multi", index, est.value, tail_bound=est.tail_bound)]
    routes = {
        "partition": gumbel.s_multi_partition,
        "recursive": gumbel.s_multi_recursive,
    }
    err_str = "Route '{}' not supported (partition, recursive, truncated)"
    assert route in routes, err_str.format(route)
    return [_record("s-multi", index, routes[route](parts), route=route)]


def set_partition_list(args):
    (i,) = _need(args, "i")
    return [
        OutputRecord("set-partition", {"i": i, "rank": rank}, zeta=str(list(p.blocks)))
        for rank, p in enumerate(partitions.set_partitions(i))
    ]


def bell(args):
    (i,) = _need(args, "i")
    return [_record("bell", i, partitions.bell_number(i))]


def exp_central(args):
    (n,) = _need(args, "n")
    alpha = Fraction(args.alpha or 1)
    index = {"n": n, "alpha": str(alpha)}
    return [_record("exp-central", index, gumbel.exponential_central_moment(n, alpha))]


def shifted_central(args):
    n, big_n = _need(args, "n", "m")
    value = gumbel.shifted_sum_central_moment(n, big_n)
    return [_record("shifted-central", {"n": n, "N": big_n}, value)]


def gumbel_integral(args):
    (n,) = _need(args, "n")
    dps = cfg.NUMERIC.DIGITS + cfg.NUMERIC.GUARD_DIGITS
    value = gumbel.gumbel_moment_integral(n, dps)
    return [OutputRecord.from_value("gumbel-integral", n, value, cfg.NUMERIC.DIGITS)]


# ------------------------------------------------------------------------------------ #
# Death process
# ------------------------------------------------------------------------------------ #


def transition(args):
    i, j, t = _need(args, "i", "j", "t")
    rates = _rates(args)
    value = death.transition_probability(rates, i, j, t)
    return [_float_record("transition", {"i": i, "j": j, "t": t}, value)]


def spectral(args):
    pair = death.spectral_pair(_rates(args))
    records = []
    for name, mat in (("R", pair.R), ("L", pair.L)):
        for r in range(pair.rates.n):
            for c in range(r + 1):
                records.append(_record(name, {"i": r + 1, "j": c + 1}, mat[r, c]))
    return records


# ------------------------------------------------------------------------------------ #
# Simulation
# ------------------------------------------------------------------------------------ #


def sample(args):
    config = simulate.SimConfig(
        n=args.n or cfg.SIM.N,
        reps=args.reps or cfg.SIM.REPS,
        seed=cfg.SIM.SEED,
        statistic=args.statistic or cfg.SIM.STATISTIC,
        block_size=cfg.SIM.BLOCK_SIZE,
        num_proc=cfg.SIM.NUM_PROC,
    )
    summary = simulate.sample(config)
    if cfg.SIM.SAMPLES_FILE:
        write_samples_csv(
            cfg.SIM.SAMPLES_FILE,
            summary.values,
            config.statistic,
            config.seed,
            config.n,
        )
    index = {"statistic": config.statistic, "n": config.n, "seed": config.seed}
    stats = summary.get_stats()
    return [
        _float_record("sample-" + name, index, stats[name]) for name in sorted(stats)
    ]
