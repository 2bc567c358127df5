#!/usr/bin/env python3

"""Verification suites: every closed form against its independent oracle.

A check produces (observed, expected, tolerance). With tolerance None the values
must be equal; an expected (lo, hi) tuple asks for lo < observed < hi. The check
named by VERIFY.FAULT has its observed value corrupted before comparison.
"""

import math
from fractions import Fraction

import coalescent_zeta.coalescent.simulate as simulate
import coalescent_zeta.core.logging as logging
import mpmath
import numpy as np
from coalescent_zeta.algebra.numeric import (
    EULER_GAMMA,
    PI,
    eval_float,
    eval_numeric,
    zeta_numeric,
)
from coalescent_zeta.algebra.polynomial import LOG2, ZetaPolynomial, to_pi_form
from coalescent_zeta.algebra.rational import format_rational, zeta_even_coefficient
from coalescent_zeta.coalescent import absorption, death_process, tree_length
from coalescent_zeta.core.config import cfg
from coalescent_zeta.core.errors import CoalescentZetaError
from coalescent_zeta.gumbel import moments as gumbel
from coalescent_zeta.gumbel.partitions import (
    bell_number,
    integer_partitions,
    set_partitions,
)
from coalescent_zeta.series import recursion
from coalescent_zeta.verify import golden

__all__ = ["run_check", "exact_suite", "numeric_suite", "simulation_suite"]


logger = logging.get_logger(__name__)


def _corrupt(value):
    if isinstance(value, bool):
        return not value
    if isinstance(value, str):
        return "corrupted:" + value
    if isinstance(value, (int, Fraction, ZetaPolynomial)):
        return value + 1
    return float(value) + 1.0 + abs(float(value))


def _show(value):
    if isinstance(value, ZetaPolynomial):
        return value.to_string()
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, tuple):
        return [_show(v) for v in value]
    if isinstance(value, (float, np.floating, mpmath.mpf)):
        return float(value)
    return value


def _compare(observed, expected, tolerance):
    if isinstance(expected, tuple):
        lo, hi = expected
        return lo < float(observed) < hi
    if tolerance is None:
        return observed == expected
    return abs(float(observed) - float(expected)) <= tolerance


def run_check(meter, name, fun):
    """Runs one check and records it in meter."""
    meter.timer.tic()
    try:
        observed, expected, tolerance = fun()
    except (CoalescentZetaError, AssertionError) as err:
        seconds = meter.timer.toc()
        return meter.add(name, False, "error: {}".format(err), None, None, seconds)
    seconds = meter.timer.toc()
    if name == cfg.VERIFY.FAULT:
        observed = _corrupt(observed)
    passed = _compare(observed, expected, tolerance)
    return meter.add(
        name, passed, _show(observed), _show(expected), tolerance, seconds
    )


# ------------------------------------------------------------------------------------ #
# Exact suite
# ------------------------------------------------------------------------------------ #


def _table_checks(meter, label, fun, table):
    for j, (zeta_form, pi_form, _) in table.items():
        run_check(
            meter, "{}.j{}.zeta".format(label, j), lambda: (fun(j), zeta_form, None)
        )
        run_check(
            meter,
            "{}.j{}.pi".format(label, j),
            lambda: (to_pi_form(fun(j)).to_string(), pi_form, None),
        )


def _all_equal(pairs):
    mismatches = [key for key, (a, b) in pairs if a != b]
    return not mismatches, True, None


def _t_moments_from_cumulants(max_j=8):
    # zeta(2)^2 and zeta(4) are independent monomials, so compare in pi form
    kappas = [absorption.cumulant_T(j) for j in range(1, max_j + 1)]
    moments = absorption.cumulants_to_moments(kappas)
    return _all_equal(
        (j, (to_pi_form(m), to_pi_form(absorption.moment_T(j))))
        for j, m in enumerate(moments, 1)
    )


def _spectral_identities(num_vectors=100, max_n=10, seed=0):
    rng = np.random.default_rng(seed)
    for _ in range(num_vectors):
        n = int(rng.integers(1, max_n + 1))
        den = int(rng.integers(1, 8))
        nums = rng.choice(np.arange(0, 1000), size=n, replace=False)
        rates = tuple(Fraction(int(x), den) for x in nums)
        pair = death_process.spectral_pair(rates)
        eye = np.identity(n, dtype=object)
        q = death_process.generator_matrix(rates)
        dmat = np.diag([-d for d in rates]).astype(object)
        if not np.array_equal(pair.R.dot(pair.L), eye):
            return False
        if not np.array_equal(pair.R.dot(dmat), q.dot(pair.R)):
            return False
    return True


def _s_part_tuples(max_parts, max_total):
    for total in range(2, max_total + 1):
        for parts in integer_partitions(total, min_part=2):
            if len(parts) <= max_parts:
                yield parts


def exact_suite(meter):
    """Exact equalities in the zeta-monomial basis."""
    _table_checks(meter, "cumulants_t", absorption.cumulant_T, golden.CUMULANTS_T)
    _table_checks(meter, "moments_t", absorption.moment_T, golden.MOMENTS_T)
    for n, exact in golden.CENTRAL_MOMENTS.items():
        run_check(
            meter,
            "central_moments.n{}".format(n),
            lambda: (gumbel.gumbel_central_moment(n, "theorem"), exact, None),
        )
    for n, coeffs in golden.S_COEFFICIENTS.items():
        run_check(
            meter,
            "s_coefficients.n{}".format(n),
            lambda: (gumbel.central_moment_s_coefficients(n) == coeffs, True, None),
        )
    run_check(
        meter,
        "cumulant_t.unsigned_diagonal",
        lambda: _all_equal(
            (
                j,
                (
                    absorption.cumulant_T(j),
                    math.factorial(j - 1) * 2 ** j * recursion.unsigned_diagonal(j),
                ),
            )
            for j in range(1, 9)
        ),
    )
    run_check(
        meter,
        "moment_t.signed_diagonal",
        lambda: _all_equal(
            (
                j,
                (
                    absorption.moment_T(j),
                    math.factorial(j) * 2 ** j * recursion.signed_diagonal(j),
                ),
            )
            for j in range(1, 9)
        ),
    )
    for kind in recursion.SeriesKind:
        spec = recursion.series_spec(kind)
        run_check(
            meter,
            "solver.{}.closed_vs_recursion".format(kind.value),
            lambda: _all_equal(
                (
                    (i, j),
                    (
                        recursion.solve_closed(i, j, spec),
                        recursion.solve_by_recursion(i, j, spec),
                    ),
                )
                for i in range(1, 9)
                for j in range(1, 9)
            ),
        )
    run_check(
        meter,
        "solver.signed.log2_cancels",
        lambda: (
            any(recursion.signed_diagonal(j).has_kind(LOG2) for j in range(1, 11)),
            False,
            None,
        ),
    )
    run_check(
        meter,
        "absorption.finite_cumulants_to_moments",
        lambda: _all_equal(
            (
                n,
                (
                    absorption.cumulants_to_moments(
                        absorption.cumulant_T_n(n, j) for j in range(1, 7)
                    ),
                    [absorption.moment_T_n(n, j) for j in range(1, 7)],
                ),
            )
            for n in range(2, 11)
        ),
    )
    run_check(
        meter,
        "tree.alternating_vs_ordered",
        lambda: _all_equal(
            (
                (n, j),
                (
                    tree_length.moment_L_alternating(n, j),
                    tree_length.moment_L_ordered(n, j),
                ),
            )
            for n in range(2, 13)
            for j in range(1, 7)
        ),
    )
    run_check(meter, "cumulant_t.cumulants_to_moments", _t_moments_from_cumulants)
    run_check(
        meter,
        "tree.cumulants_to_moments",
        lambda: _all_equal(
            (
                n,
                (
                    absorption.cumulants_to_moments(
                        tree_length.cumulant_L(n, j) for j in range(1, 7)
                    ),
                    [tree_length.moment_L_alternating(n, j) for j in range(1, 7)],
                ),
            )
            for n in range(2, 11)
        ),
    )
    for route in ("partition", "type"):
        run_check(
            meter,
            "gumbel.raw.recursion_vs_{}".format(route),
            lambda: _all_equal(
                (n, (gumbel.gumbel_moment(n), gumbel.gumbel_moment(n, route)))
                for n in range(11)
            ),
        )
    for route in ("theorem", "type"):
        run_check(
            meter,
            "gumbel.central.recursion_vs_{}".format(route),
            lambda: _all_equal(
                (
                    n,
                    (
                        gumbel.gumbel_central_moment(n),
                        gumbel.gumbel_central_moment(n, route),
                    ),
                )
                for n in range(11)
            ),
        )
    run_check(
        meter,
        "gumbel.central_to_raw",
        lambda: _all_equal(
            (n, (gumbel.central_to_raw(n), gumbel.gumbel_moment(n))) for n in range(11)
        ),
    )
    run_check(
        meter,
        "gumbel.s_partition_vs_recursive",
        lambda: _all_equal(
            (p, (gumbel.s_multi_partition(p), gumbel.s_multi_recursive(p)))
            for p in _s_part_tuples(5, 12)
        ),
    )
    run_check(
        meter,
        "gumbel.derangements",
        lambda: _all_equal(
            (n, (gumbel.derangement(n), gumbel.derangement_explicit(n)))
            for n in range(21)
        ),
    )
    run_check(
        meter,
        "gumbel.exponential_central_moment",
        lambda: _all_equal(
            (
                (n, alpha),
                (
                    gumbel.exponential_central_moment(n, alpha),
                    gumbel.derangement(n) / Fraction(alpha) ** n,
                ),
            )
            for n in range(9)
            for alpha in (1, 2, Fraction(3, 2))
        ),
    )
    run_check(
        meter,
        "partitions.bell_numbers",
        lambda: _all_equal(
            (i, (sum(1 for _ in set_partitions(i)), bell_number(i)))
            for i in range(1, 9)
        ),
    )
    run_check(
        meter,
        "death.spectral_identities",
        lambda: (_spectral_identities(), True, None),
    )


# ------------------------------------------------------------------------------------ #
# Numeric suite
# ------------------------------------------------------------------------------------ #


def _density_rate_slope():
    grid = np.linspace(0.1, 8.0, 400)
    limit = np.array([absorption.density_g(t).value for t in grid])
    sizes = [25, 50, 100, 200]
    errors = [np.max(np.abs(absorption.density_g_n(n, grid) - limit)) for n in sizes]
    slope = np.polyfit(np.log(sizes), np.log(errors), 1)[0]
    return -slope


def _density_mass():
    mass, _ = absorption.integrate_density(lambda t: absorption.density_g(t).value)
    return mass, 1.0, 1e-8


def _transition_vs_expm(max_n=8, times=(0.1, 0.7, 2.0)):
    worst = 0.0
    for n in range(1, max_n + 1):
        kingman = death_process.DeathRateVector.kingman(n)
        linear = tuple(Fraction(k) for k in range(n))
        for rates in (kingman, linear):
            pair = death_process.spectral_pair(rates)
            q = death_process.generator_matrix(rates)
            for t in times:
                p_spec = death_process.transition_matrix(rates, t, pair)
                p_expm = death_process.matrix_exponential(q, t)
                worst = max(worst, float(np.max(np.abs(p_spec - p_expm))))
    return worst


def _kingman_absorption_cdf(max_n=8, times=(0.1, 0.7, 2.0)):
    worst = 0.0
    for n in range(2, max_n + 1):
        rates = death_process.DeathRateVector.kingman(n)
        pair = death_process.spectral_pair(rates)
        for t in times:
            p_n1 = death_process.transition_probability(rates, n, 1, t, pair)
            worst = max(worst, abs(p_n1 - absorption.cdf_T_n(n, t)))
    return worst


def numeric_suite(meter):
    """Numeric columns, truncated series and quadrature oracles."""
    for label, fun, table in (
        ("cumulants_t", absorption.cumulant_T, golden.CUMULANTS_T),
        ("moments_t", absorption.moment_T, golden.MOMENTS_T),
    ):
        for j, (_, _, numeric) in table.items():
            run_check(
                meter,
                "{}.j{}.numeric".format(label, j),
                lambda: (eval_numeric(fun(j), 5), numeric, None),
            )
    for n, numeric in golden.CENTRAL_MOMENTS_NUMERIC.items():
        run_check(
            meter,
            "central_moments.n{}.numeric".format(n),
            lambda: (eval_numeric(gumbel.gumbel_central_moment(n), 5), numeric, None),
        )
    for j in range(2, 7):
        for label, closed, series in (
            ("cumulant", absorption.cumulant_T, absorption.cumulant_T_series),
            ("moment", absorption.moment_T, absorption.moment_T_series),
        ):
            run_check(
                meter,
                "series.{}.j{}".format(label, j),
                lambda: _series_check(closed, series, j),
            )
    for parts in _s_part_tuples(3, 15):
        if max(parts) > 5:
            continue
        run_check(
            meter,
            "s_truncated.{}".format("-".join(map(str, parts))),
            lambda: _truncated_check(parts, 2000),
        )
    run_check(
        meter,
        "zeta.even_vs_pi",
        lambda: (
            float(zeta_numeric(2, 30)),
            float(zeta_even_coefficient(1) * Fraction(PI[:32]) ** 2),
            1e-15,
        ),
    )
    run_check(
        meter,
        "asymptotics.cumulant_t20",
        lambda: (
            eval_float(absorption.cumulant_T(20)) / math.factorial(19),
            (1.0, 1.0 + 1e-8),
            None,
        ),
    )
    run_check(
        meter,
        "asymptotics.moment_t15",
        lambda: (
            eval_float(absorption.moment_T(15)) / (3 * math.factorial(15)),
            (0.999, 1.001),
            None,
        ),
    )
    run_check(
        meter,
        "asymptotics.central_moment_growth",
        lambda: (
            eval_float(gumbel.gumbel_central_moment(10)) / math.factorial(10),
            math.exp(-float(EULER_GAMMA)),
            0.05 * math.exp(-float(EULER_GAMMA)),
        ),
    )
    run_check(meter, "asymptotics.central_moment_growth_closes", _growth_closes)
    run_check(
        meter, "density.rate_order", lambda: (_density_rate_slope(), (0.8, 1.2), None)
    )
    run_check(meter, "density.integrates_to_one", _density_mass)
    run_check(
        meter,
        "tree.mean_error_order",
        lambda: (1e4 * abs(tree_length.mean_L_asymptotic_error(10 ** 4)), 1.0, 1e-3),
    )
    run_check(
        meter,
        "tree.shifted_cumulant_limit",
        lambda: (
            float(tree_length.gumbel_shift_cumulants(10 ** 4, 2)),
            eval_float(gumbel.gumbel_cumulant(2)),
            1.0 / (10 ** 4 - 1),
        ),
    )
    run_check(
        meter,
        "tree.quadrature_vs_alternating",
        lambda: (
            tree_length.moment_L_quadrature(10, 3),
            float(tree_length.moment_L_alternating(10, 3)),
            1e-7 * float(tree_length.moment_L_alternating(10, 3)),
        ),
    )
    for n in range(1, 7):
        run_check(
            meter,
            "gumbel.integral.n{}".format(n),
            lambda: (
                float(gumbel.gumbel_moment_integral(n)),
                eval_float(gumbel.gumbel_moment(n)),
                1e-10,
            ),
        )
    for n in range(2, 7):
        run_check(
            meter,
            "gumbel.shifted_sum.n{}".format(n),
            lambda: (
                gumbel.shifted_sum_central_moment_truncated(n, 50),
                float(gumbel.shifted_sum_central_moment(n, 50)),
                1e-9 * float(gumbel.shifted_sum_central_moment(n, 50)),
            ),
        )
    run_check(
        meter, "death.transition_vs_expm", lambda: (_transition_vs_expm(), 0.0, 1e-9)
    )
    run_check(
        meter, "death.absorption_cdf", lambda: (_kingman_absorption_cdf(), 0.0, 1e-10)
    )


def _growth_closes():
    # mu_n / n! tends to exp(-gamma); n = 12 sits closer than n = 10
    limit = math.exp(-float(EULER_GAMMA))
    errors = [
        abs(eval_float(gumbel.gumbel_central_moment(n)) / math.factorial(n) - limit)
        for n in (10, 12)
    ]
    return errors[1] < errors[0], True, None


def _series_check(closed, series, j):
    est = series(j, cfg.SERIES.TRUNC)
    return est.value, eval_float(closed(j)), est.error_bound


def _truncated_check(parts, big_n):
    est = gumbel.s_multi_truncated(parts, big_n)
    return est.value, eval_float(gumbel.s_multi_partition(parts)), est.error_bound


# ------------------------------------------------------------------------------------ #
# Simulation suite
# ------------------------------------------------------------------------------------ #


def _sim(n, statistic, reps=100000, seed=None, num_proc=None):
    config = simulate.SimConfig(
        n=n,
        reps=reps,
        seed=cfg.SIM.SEED if seed is None else seed,
        statistic=statistic,
        block_size=cfg.SIM.BLOCK_SIZE,
        num_proc=cfg.SIM.NUM_PROC if num_proc is None else num_proc,
    )
    return simulate.sample(config)


def simulation_suite(meter):
    """Seeded Monte-Carlo checks at the configured seed."""
    alpha = cfg.SIM.ALPHA

    def mean_t100():
        summary = _sim(100, "absorption_time")
        return summary.mean, 2.0 * (1.0 - 1.0 / 100), 4.0 * summary.standard_error

    def variance_t1000():
        summary = _sim(1000, "absorption_time")
        return summary.variance, eval_float(absorption.cumulant_T(2)), 0.05

    def ks_shifted_tree():
        summary = _sim(500, "shifted_tree_length")
        return simulate.ks_test(summary, gumbel.gumbel_cdf, alpha).passed, True, None

    def ks_absorption_t10():
        summary = _sim(10, "absorption_time")
        cdf = lambda t: absorption.cdf_T_n(10, t)  # noqa: E731
        return simulate.ks_test(summary, cdf, alpha).passed, True, None

    def ks_tree_constructions():
        a = _sim(50, "tree_length", reps=20000)
        b = _sim(50, "tree_length_max", reps=20000, seed=cfg.SIM.SEED + 1)
        return simulate.ks_two_sample(a, b, alpha).passed, True, None

    def thread_count_independence():
        a = _sim(20, "absorption_time", reps=20000, num_proc=1)
        b = _sim(20, "absorption_time", reps=20000, num_proc=2)
        same = a.get_stats() == b.get_stats() and np.array_equal(a.values, b.values)
        return same, True, None

    run_check(meter, "sim.mean_t100", mean_t100)
    run_check(meter, "sim.variance_t1000", variance_t1000)
    run_check(meter, "sim.ks_shifted_tree_length", ks_shifted_tree)
    run_check(meter, "sim.ks_absorption_t10", ks_absorption_t10)
    run_check(meter, "sim.ks_tree_length_constructions", ks_tree_constructions)
    run_check(meter, "sim.thread_count_independence", thread_count_independence)
