"""Exact arithmetic in Z[q] and Z[q][x]."""

from .intpoly import IntPolyQ
from .gaussian import gaussian_binomial, general_linear_count, structure_constant
from .bivariate import (
    Basis,
    BivarPoly,
    xq_expand,
    to_monomial,
    from_monomial,
    xq_mul,
    evaluate,
    specialize_q,
)

# XQ basis로 제한된 BivarPoly (TI 다항식 / q-independence 다항식)
XqPoly = BivarPoly

__all__ = [
    "IntPolyQ",
    "gaussian_binomial",
    "general_linear_count",
    "structure_constant",
    "Basis",
    "BivarPoly",
    "XqPoly",
    "xq_expand",
    "to_monomial",
    "from_monomial",
    "xq_mul",
    "evaluate",
    "specialize_q",
]
