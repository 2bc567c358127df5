#!/usr/bin/env python3

"""Quantity and verification-suite lookup."""

import coalescent_zeta.core.quantities as quantities
import coalescent_zeta.verify.suites as suites
from coalescent_zeta.core.config import cfg


# Supported quantities of the compute command
_quantities = {
    "bernoulli": quantities.bernoulli,
    "zeta-even": quantities.zeta_even,
    "zeta": quantities.zeta_value,
    "solve": quantities.solve,
    "diagonal": quantities.diagonal,
    "diagonal-series": quantities.diagonal_series,
    "cumulant-t": quantities.cumulant_t,
    "moment-t": quantities.moment_t,
    "cumulant-t-n": quantities.cumulant_t_n,
    "moment-t-n": quantities.moment_t_n,
    "cumulant-t-series": quantities.cumulant_t_series,
    "moment-t-series": quantities.moment_t_series,
    "moment-t-ordered": quantities.moment_t_ordered,
    "hypoexp": quantities.hypoexp,
    "cdf-t-n": quantities.cdf_t_n,
    "density-t-n": quantities.density_t_n,
    "density-t": quantities.density_t,
    "tree-cumulant": quantities.tree_cumulant,
    "tree-moment": quantities.tree_moment,
    "tree-cdf": quantities.tree_cdf,
    "tree-density": quantities.tree_density,
    "gumbel-shift": quantities.gumbel_shift,
    "tree-mean-error": quantities.tree_mean_error,
    "derangement": quantities.derangement,
    "gumbel-cumulant": quantities.gumbel_cumulant,
    "gumbel-moment": quantities.gumbel_moment,
    "gumbel-central": quantities.gumbel_central,
    "central-to-raw": quantities.central_to_raw,
    "s-coefficients": quantities.s_coefficients,
    "s-multi": quantities.s_multi,
    "set-partitions": quantities.set_partition_list,
    "bell": quantities.bell,
    "exp-central": quantities.exp_central,
    "shifted-central": quantities.shifted_central,
    "gumbel-integral": quantities.gumbel_integral,
    "transition": quantities.transition,
    "spectral": quantities.spectral,
    "sample": quantities.sample,
}

# Supported verification suites, in the order "all" runs them
_suites = {
    "exact": suites.exact_suite,
    "numeric": suites.numeric_suite,
    "simulation": suites.simulation_suite,
}


def quantity_names():
    return sorted(_quantities.keys())


def get_quantity(name):
    """Gets the handler that computes the named quantity."""
    err_str = "Quantity '{}' not supported"
    assert name in _quantities.keys(), err_str.format(name)
    return _quantities[name]


def get_suites(name=None):
    """Gets the suite functions selected by name (VERIFY.SUITE by default)."""
    name = cfg.VERIFY.SUITE if name is None else name
    if name == "all":
        return list(_suites.values())
    err_str = "Verification suite '{}' not supported"
    assert name in _suites.keys(), err_str.format(name)
    return [_suites[name]]
