"""Finite field F_q, matrices, and Grassmannian enumeration."""

from .gfq import (
    SUPPORTED_ORDERS,
    IRREDUCIBLE_MODULI,
    FieldSpec,
    FqElement,
    field_make,
    is_irreducible,
)
from .matrix import (
    FqMatrix,
    EchelonForm,
    mat_mul,
    mat_transpose,
    mat_neg,
    mat_add,
    mat_scale,
    matmul_codes,
    rref,
    rank,
    batch_rank,
    random_matrix,
)
from .grassmannian import (
    pivot_patterns,
    free_positions,
    subspace_batches,
    subspace_iter,
    grassmannian_size,
    enumeration_cost,
)

__all__ = [
    "SUPPORTED_ORDERS",
    "IRREDUCIBLE_MODULI",
    "FieldSpec",
    "FqElement",
    "field_make",
    "is_irreducible",
    "FqMatrix",
    "EchelonForm",
    "mat_mul",
    "mat_transpose",
    "mat_neg",
    "mat_add",
    "mat_scale",
    "matmul_codes",
    "rref",
    "rank",
    "batch_rank",
    "random_matrix",
    "pivot_patterns",
    "free_positions",
    "subspace_batches",
    "subspace_iter",
    "grassmannian_size",
    "enumeration_cost",
]
