"""Alternating matrix spaces over F_q and the brute-force isotropic-subspace oracle."""

from .models import AltSpace, SubspaceBasis, PQLabel
from .space import (
    altspace_make,
    zero_space,
    elementary_alternating,
    graphical_space,
    direct_sum,
    permute,
    is_totally_isotropic,
    isotropic_mask,
)
from .oracle import (
    IsotropicSubspaceOracle,
    ti_counts_brute,
    ti_polynomial_brute,
    alpha,
    enumerate_isotropic,
    stratum_counts,
    rank_locus_counts,
    projection_lift_counts,
    direct_sum_lift_expected,
    classify_PQ,
    plucker_support,
)

__all__ = [
    "AltSpace",
    "SubspaceBasis",
    "PQLabel",
    "altspace_make",
    "zero_space",
    "elementary_alternating",
    "graphical_space",
    "direct_sum",
    "permute",
    "is_totally_isotropic",
    "isotropic_mask",
    "IsotropicSubspaceOracle",
    "ti_counts_brute",
    "ti_polynomial_brute",
    "alpha",
    "enumerate_isotropic",
    "stratum_counts",
    "rank_locus_counts",
    "projection_lift_counts",
    "direct_sum_lift_expected",
    "classify_PQ",
    "plucker_support",
]
