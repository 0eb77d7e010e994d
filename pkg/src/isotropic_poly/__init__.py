"""
isotropic_poly.

q-analogue 독립 다항식과 교대 행렬 공간의 전등방(totally-isotropic) 다항식.

그래프 G에 대해 I(G, x, q) ∈ Z[q][x] 를 기호적으로 계산하고,
q가 소수 거듭제곱일 때 graphical 행렬 공간 B_G 의 전등방 부분공간 수와
brute-force oracle로 교차 검증합니다.

주요 모듈:
- field: F_q 산술, 행렬, Grassmannian 열거
- poly: Z[q], Z[q][x] (monomial / x_q basis)
- graph: 단순 그래프와 독립집합
- altspace: 교대 행렬 공간과 brute-force oracle
- engine: 기호 엔진과 교차 검증
- catalog: 이름 붙은 그래프
- interfaces: 파일 형식, JSON codec, CLI 설정

사용 예시:
    from isotropic_poly import path_graph, q_independence_polynomial, cross_validate

    G = path_graph(3)
    str(q_independence_polynomial(G))      # "1 + (q^2 + q + 1)*xq^1 + xq^2"
    cross_validate(G, 3).passed            # True
"""

__version__ = "1.0.0"
__author__ = "CRK Team"

# 핵심 클래스 export
from .field.gfq import FieldSpec, FqElement, field_make
from .field.matrix import FqMatrix, rref, rank
from .field.grassmannian import subspace_iter, grassmannian_size
from .poly.intpoly import IntPolyQ
from .poly.gaussian import gaussian_binomial, structure_constant
from .poly.bivariate import (
    Basis,
    BivarPoly,
    xq_expand,
    to_monomial,
    from_monomial,
    xq_mul,
    evaluate,
    specialize_q,
)
from .graph.graph import (
    Graph,
    graph_make,
    independence_counts,
    independence_polynomial,
    complete_graph,
    path_graph,
    cycle_graph,
    empty_graph,
    star_graph,
    disjoint_union,
)
from .altspace.models import AltSpace, SubspaceBasis, PQLabel
from .altspace.space import altspace_make, graphical_space, direct_sum, is_totally_isotropic
from .altspace.oracle import (
    IsotropicSubspaceOracle,
    ti_counts_brute,
    ti_polynomial_brute,
    classify_PQ,
    plucker_support,
    rank_locus_counts,
)
from .engine.models import QIndepPoly, ValidationReport
from .engine.qindep import QIndependenceEngine, q_independence_polynomial, pq_weight, q_valid
from .engine.validator import cross_validate, direct_sum_check, product_check
from .catalog.graph_catalog import GraphCatalog

__all__ = [
    # Version
    "__version__",
    # Field
    "FieldSpec",
    "FqElement",
    "field_make",
    "FqMatrix",
    "rref",
    "rank",
    "subspace_iter",
    "grassmannian_size",
    # Polynomials
    "IntPolyQ",
    "gaussian_binomial",
    "structure_constant",
    "Basis",
    "BivarPoly",
    "xq_expand",
    "to_monomial",
    "from_monomial",
    "xq_mul",
    "evaluate",
    "specialize_q",
    # Graph
    "Graph",
    "graph_make",
    "independence_counts",
    "independence_polynomial",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "empty_graph",
    "star_graph",
    "disjoint_union",
    # Alternating spaces
    "AltSpace",
    "SubspaceBasis",
    "PQLabel",
    "altspace_make",
    "graphical_space",
    "direct_sum",
    "is_totally_isotropic",
    "IsotropicSubspaceOracle",
    "ti_counts_brute",
    "ti_polynomial_brute",
    "classify_PQ",
    "plucker_support",
    "rank_locus_counts",
    # Engine
    "QIndepPoly",
    "ValidationReport",
    "QIndependenceEngine",
    "q_independence_polynomial",
    "pq_weight",
    "q_valid",
    "cross_validate",
    "direct_sum_check",
    "product_check",
    # Catalog
    "GraphCatalog",
]
