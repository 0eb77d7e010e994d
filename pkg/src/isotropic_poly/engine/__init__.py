"""Symbolic q-independence engine and cross validation against the brute-force oracle."""

from .models import QIndepPoly, StratumWeight, Discrepancy, ValidationReport, format_counts
from .qindep import (
    QIndependenceEngine,
    q_valid,
    pq_weight,
    strata,
    strata_by_label,
    p_stratum_total,
    symbolic_coefficient,
    q_independence_polynomial,
)
from .validator import cross_validate, direct_sum_check, product_check

__all__ = [
    "QIndepPoly",
    "StratumWeight",
    "Discrepancy",
    "ValidationReport",
    "format_counts",
    "QIndependenceEngine",
    "q_valid",
    "pq_weight",
    "strata",
    "strata_by_label",
    "p_stratum_total",
    "symbolic_coefficient",
    "q_independence_polynomial",
    "cross_validate",
    "direct_sum_check",
    "product_check",
]
