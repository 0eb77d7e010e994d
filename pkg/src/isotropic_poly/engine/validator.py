"""
Cross Validation

기호 엔진과 brute-force oracle을 비교합니다.

cross_validate(G, q0):
1. counts: c_i(q0) (symbolic) == c_i(B_G) (brute)
2. stratum: (P, Q)별 pq_weight(q0) == classify_PQ로 묶은 brute 개수
3. plucker: 모든 전등방 부분공간의 Plücker support ⊆ G의 독립집합
4. alpha: α(B_G) == α(G)

direct_sum_check(B, C):
    TI(B ⊕ C) == xq_mul(TI(B), TI(C))   (brute, q 고정)

product_check(G, H):
    I(G ⊔ H, x, q) == xq_mul(I(G, x, q), I(H, x, q))   (Z[q] 수준)

사용 예시:
    report = cross_validate(path_graph(3), 2, label="P3")
    report.passed        # True
    report.summary()     # "P3 q=2: c = (1, 7, 1) symbolic == brute ..."
"""

from typing import List, Optional
import logging

from .models import Discrepancy, ValidationReport
from .qindep import QIndependenceEngine
from ..altspace.models import AltSpace, SubspaceBasis
from ..altspace.oracle import IsotropicSubspaceOracle, plucker_support
from ..altspace.space import direct_sum, graphical_space
from ..field.gfq import field_make
from ..graph.graph import Graph, disjoint_union, independence_number
from ..poly.bivariate import xq_mul

logger = logging.getLogger(__name__)


def _compare_sequences(check: str, expected, actual) -> List[Discrepancy]:
    out = []
    for i in range(max(len(expected), len(actual))):
        e = expected[i] if i < len(expected) else 0
        a = actual[i] if i < len(actual) else 0
        if e != a:
            out.append(Discrepancy(check, i, expected=e, actual=a))
    return out


def cross_validate(
    G: Graph,
    q0: int,
    label: Optional[str] = None,
    guard_limit: Optional[int] = None,
    workers: Optional[int] = None,
    engine: Optional[QIndependenceEngine] = None,
    check_strata: bool = True,
    check_plucker: bool = True,
) -> ValidationReport:
    """
    I(G, x, q0) 와 TI(B_G, x) 비교.

    Args:
        G: 그래프
        q0: 지원되는 소수 거듭제곱
        label: 보고서 이름 (None이면 그래프 repr)
        guard_limit: oracle guard 한도
        workers: oracle 프로세스 수 (None이면 settings)
        engine: 사용할 엔진 (None이면 기본 설정)
        check_strata: (P, Q) stratum 비교 수행 여부
        check_plucker: Plücker support 검사 수행 여부

    Returns:
        ValidationReport

    Raises:
        NotAPrimePower: q0 미지원
        TooLarge: oracle guard 초과
    """
    field = field_make(q0)
    engine = engine or QIndependenceEngine()
    oracle = IsotropicSubspaceOracle(guard_limit=guard_limit, workers=workers)
    S = graphical_space(G, field)

    # 1. counts
    brute = oracle.counts(S)
    symbolic = engine.polynomial(G).evaluate_counts(q0)
    report = ValidationReport(
        label=label or repr(G), q=q0, symbolic=symbolic, brute=brute, checks=["counts"]
    )
    report.discrepancies.extend(_compare_sequences("counts", symbolic, brute))

    # 2. strata
    if check_strata:
        report.checks.append("stratum")
        for i in range(1, len(brute)):
            expected = {s.label: s.weight.evaluate(q0) for s in engine.strata(G, i)}
            actual = oracle.stratum_counts(S, i)
            for key in sorted(set(expected) | set(actual), key=lambda k: (k.P, k.Q)):
                e, a = expected.get(key, 0), actual.get(key, 0)
                if e != a:
                    report.discrepancies.append(Discrepancy("stratum", i, key.P, key.Q, e, a))

    # 3. plucker
    if check_plucker:
        report.checks.append("plucker")
        for i in range(1, len(brute)):
            for ech in oracle.enumerate_isotropic(S, i):
                for R in sorted(plucker_support(SubspaceBasis.from_echelon(ech))):
                    if not G.is_independent(R):
                        report.discrepancies.append(
                            Discrepancy("plucker", i, P=R, expected="independent", actual="edge")
                        )

    # 4. alpha
    report.checks.append("alpha")
    alpha_g = independence_number(G)
    if alpha_g != len(brute) - 1:
        report.discrepancies.append(
            Discrepancy("alpha", None, expected=alpha_g, actual=len(brute) - 1)
        )

    if report.passed:
        logger.info(f"cross validation passed: {report.label} q={q0}")
    else:
        logger.warning(
            f"cross validation failed: {report.label} q={q0}, "
            f"{len(report.discrepancies)} issue(s)"
        )
    return report


def direct_sum_check(
    B: AltSpace,
    C: AltSpace,
    label: str = "B+C",
    guard_limit: Optional[int] = None,
    workers: Optional[int] = None,
) -> ValidationReport:
    """
    TI(B ⊕ C) 와 xq_mul(TI(B), TI(C)) 비교 (q 고정, brute).

    Raises:
        FieldMismatch: 다른 field
        TooLarge: oracle guard 초과
    """
    oracle = IsotropicSubspaceOracle(guard_limit=guard_limit, workers=workers)
    joint = oracle.polynomial(direct_sum(B, C))
    product = xq_mul(oracle.polynomial(B), oracle.polynomial(C))
    expected = tuple(product.coefficient(d).constant_value() for d in range(product.degree + 1))
    actual = tuple(joint.coefficient(d).constant_value() for d in range(joint.degree + 1))
    report = ValidationReport(
        label=label, q=B.field.q, symbolic=expected, brute=actual, checks=["direct_sum"]
    )
    report.discrepancies.extend(_compare_sequences("direct_sum", expected, actual))
    return report


def product_check(
    G: Graph, H: Graph, label: str = "G+H", engine: Optional[QIndependenceEngine] = None
) -> ValidationReport:
    """I(G ⊔ H, x, q) 와 xq_mul(I(G), I(H)) 를 Z[q] 계수로 비교."""
    engine = engine or QIndependenceEngine()
    joint = engine.polynomial(disjoint_union(G, H)).to_xq_poly()
    product = xq_mul(engine.polynomial(G).to_xq_poly(), engine.polynomial(H).to_xq_poly())
    expected = tuple(str(product.coefficient(d)) for d in range(product.degree + 1))
    actual = tuple(str(joint.coefficient(d)) for d in range(joint.degree + 1))
    report = ValidationReport(
        label=label, q=None, symbolic=expected, brute=actual, checks=["product"]
    )
    report.discrepancies.extend(_compare_sequences("product", expected, actual))
    return report
