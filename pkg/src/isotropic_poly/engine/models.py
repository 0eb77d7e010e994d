"""
q-Independence Engine Data Models

엔진 결과와 검증 보고서 모델.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..altspace.models import PQLabel
from ..errors import VerificationError
from ..poly.bivariate import BivarPoly, specialize_q
from ..poly.intpoly import IntPolyQ

CountLike = Union[int, str]


def format_counts(values: Sequence[CountLike]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


@dataclass(frozen=True)
class QIndepPoly:
    """
    I(G, x, q) = Σ c_i(q) x_q^i.

    Attributes:
        coefficients: (c_0, ..., c_α), c_0 = 1
    """
    coefficients: Tuple[IntPolyQ, ...]

    @property
    def degree(self) -> int:
        """x_q 차수 = α(G)."""
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> IntPolyQ:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return IntPolyQ.zero()

    def to_xq_poly(self) -> BivarPoly:
        return BivarPoly.xq(enumerate(self.coefficients))

    def evaluate_counts(self, q0: int) -> Tuple[int, ...]:
        """각 c_i 를 q = q0 에서 평가."""
        return tuple(c.evaluate(q0) for c in self.coefficients)

    def specialize(self, q0: int) -> BivarPoly:
        return specialize_q(self.to_xq_poly(), q0)

    def to_dict(self) -> Dict:
        return {"coefficients": [str(c) for c in self.coefficients]}

    def __str__(self) -> str:
        return str(self.to_xq_poly())


@dataclass(frozen=True)
class StratumWeight:
    """(P, Q) stratum 과 그 크기 다항식."""
    label: PQLabel
    weight: IntPolyQ


@dataclass(frozen=True)
class Discrepancy:
    """
    검증 불일치 한 건.

    Attributes:
        check: 검사 이름 (counts, stratum, plucker, alpha, direct_sum, product)
        i: dimension (해당 없으면 None)
        P, Q: 관련 정점 집합 (해당 없으면 빈 tuple)
        expected: 기대값 (symbolic 쪽)
        actual: 실제값 (brute-force 쪽)
    """
    check: str
    i: Optional[int]
    P: Tuple[int, ...] = ()
    Q: Tuple[int, ...] = ()
    expected: CountLike = 0
    actual: CountLike = 0

    def to_dict(self) -> Dict:
        return {
            "check": self.check,
            "i": self.i,
            "P": list(self.P),
            "Q": list(self.Q),
            "expected": str(self.expected),
            "actual": str(self.actual),
        }

    def __str__(self) -> str:
        return (
            f"{self.check}: i={self.i} P={list(self.P)} Q={list(self.Q)} "
            f"expected={self.expected} actual={self.actual}"
        )


@dataclass
class ValidationReport:
    """
    교차 검증 결과.

    Attributes:
        label: 대상 이름
        q: 검증에 쓴 q (기호 수준 검사는 None)
        symbolic: symbolic 계수 (q에서 평가된 정수, 또는 Z[q] 문자열)
        brute: brute-force 계수
        checks: 수행한 검사 이름
        discrepancies: 불일치 목록
    """
    label: str
    q: Optional[int]
    symbolic: Tuple[CountLike, ...]
    brute: Tuple[CountLike, ...]
    checks: List[str] = field(default_factory=list)
    discrepancies: List[Discrepancy] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.discrepancies

    def raise_if_failed(self) -> None:
        """
        Raises:
            VerificationError: 불일치가 하나라도 있음
        """
        if self.discrepancies:
            raise VerificationError(self.discrepancies)

    def summary(self) -> str:
        """
        사람이 읽는 요약.

        첫 줄 예: "P3 q=2: c = (1, 7, 1) symbolic == brute"
        """
        head = f"{self.label} q={self.q}" if self.q is not None else self.label
        if tuple(self.symbolic) == tuple(self.brute):
            line = f"{head}: c = {format_counts(self.brute)} symbolic == brute"
        else:
            line = (
                f"{head}: c = {format_counts(self.symbolic)} symbolic != brute "
                f"{format_counts(self.brute)}"
            )
        lines = [line]
        if self.checks:
            status = "PASS" if self.passed else "FAIL"
            lines.append(f"  checks: {', '.join(self.checks)} -> {status}")
        lines.extend(f"  {d}" for d in self.discrepancies)
        return "\n".join(lines)

    def to_dict(self) -> Dict:
        return {
            "label": self.label,
            "q": self.q,
            "symbolic": [str(v) for v in self.symbolic],
            "brute": [str(v) for v in self.brute],
            "checks": list(self.checks),
            "passed": self.passed,
            "discrepancies": [d.to_dict() for d in self.discrepancies],
        }
