"""Generalized Champernowne constructions over finite-digit product-measure
systems: enumeration of the expansion, empirical block statistics, exact
multinomial lattice sums and the Laplace-method growth checks."""

from ._core import (
    System,
    block_counts,
    concavity_check,
    convergence_table,
    cylinder_measure,
    digit_prefix,
    digit_sum,
    enumerate_prefix,
    gaussian_sum_check,
    hot_spot_report,
    laplace_analysis,
    lattice_points,
    load_system,
    log_measure,
    multinomial_entropy,
    occurrence_sum,
    parse_system,
    surface_sums,
    taylor_residual,
    threshold_counts,
    verify,
    word_sum,
)

__all__ = [
    "System",
    "block_counts",
    "concavity_check",
    "convergence_table",
    "cylinder_measure",
    "digit_prefix",
    "digit_sum",
    "enumerate_prefix",
    "gaussian_sum_check",
    "hot_spot_report",
    "laplace_analysis",
    "lattice_points",
    "load_system",
    "log_measure",
    "multinomial_entropy",
    "occurrence_sum",
    "parse_system",
    "surface_sums",
    "taylor_residual",
    "threshold_counts",
    "verify",
    "word_sum",
]

__version__ = "0.1.0"
