"""KL-expansion channel compression and outage analysis for fluid antenna systems."""

from ._core import (
    __version__,
    bcm_blocks,
    bessel_j0,
    block_frobenius_rel_error,
    capacity_mc,
    capacity_rank1,
    cdf_kl_gh,
    cdf_kl_mc,
    dof_rule,
    eigensystem,
    entropy_fraction,
    exp_integral_e1,
    gauss_hermite,
    jakes_matrix,
    kl_frobenius_rel_error,
    kl_rd_point,
    min_modes,
    mutual_information,
    outage_mc,
    outage_rank1,
    rd_curve,
    truncation_metrics,
    vbcm_blocks,
)

__all__ = [
    "__version__",
    "bcm_blocks",
    "bessel_j0",
    "block_frobenius_rel_error",
    "capacity_mc",
    "capacity_rank1",
    "cdf_kl_gh",
    "cdf_kl_mc",
    "dof_rule",
    "eigensystem",
    "entropy_fraction",
    "exp_integral_e1",
    "gauss_hermite",
    "jakes_matrix",
    "kl_frobenius_rel_error",
    "kl_rd_point",
    "min_modes",
    "mutual_information",
    "outage_mc",
    "outage_rank1",
    "rd_curve",
    "truncation_metrics",
    "vbcm_blocks",
]
