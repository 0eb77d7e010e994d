"""
Error hierarchy for isotropic_poly.

모든 예외는 IsotropicPolyError를 상속합니다.
인자 형태 오류는 ValueError도 함께 상속하여 일반 호출자가 잡을 수 있도록 합니다.

CLI 종료 코드 매핑 (main.py):
- VerificationError → 1
- TooLarge → 3
- 그 외 IsotropicPolyError → 2
"""

from typing import Any, Optional, Sequence, Tuple


class IsotropicPolyError(Exception):
    pass


class NotAPrimePower(IsotropicPolyError, ValueError):
    """지원하지 않는 field order (소수 거듭제곱이 아니거나 지원 목록 밖)."""

    def __init__(self, q: int, reason: str = "not a supported prime power"):
        self.q = q
        super().__init__(f"q={q}: {reason}")


class ShapeMismatch(IsotropicPolyError, ValueError):
    pass


class FieldMismatch(IsotropicPolyError, ValueError):
    pass


class BadDimension(IsotropicPolyError, ValueError):
    pass


class BadArgs(IsotropicPolyError, ValueError):
    pass


class LoopEdge(IsotropicPolyError, ValueError):
    pass


class DuplicateEdge(IsotropicPolyError, ValueError):
    pass


class VertexOutOfRange(IsotropicPolyError, ValueError):
    pass


class RankDeficient(IsotropicPolyError, ValueError):
    pass


class InvalidStratum(IsotropicPolyError, ValueError):
    pass


class NotAlternating(IsotropicPolyError, ValueError):
    """
    교대(alternating) 조건 위반.

    Attributes:
        index: 문제가 된 generator 위치 (0부터)
        witness: u^T B u != 0 을 만족하는 벡터 u
    """

    def __init__(self, index: int, witness: Tuple[int, ...]):
        self.index = index
        self.witness = witness
        super().__init__(
            f"generator {index} is not alternating: witness u={list(witness)} has u^T B u != 0"
        )


class TooLarge(IsotropicPolyError):
    """
    열거 비용이 guard 한도를 초과.

    Attributes:
        estimated: 예상 열거 크기
        limit: 설정된 한도
    """

    def __init__(self, what: str, estimated: int, limit: int):
        self.what = what
        self.estimated = estimated
        self.limit = limit
        super().__init__(f"{what}: estimated {estimated} exceeds guard limit {limit}")


class ParseError(IsotropicPolyError, ValueError):
    """입력 파일 파싱 실패 (파일, 1-based 줄 번호 포함)."""

    def __init__(self, path: Any, line: Optional[int], reason: str):
        self.path = str(path)
        self.line = line
        self.reason = reason
        where = f"{self.path}:{line}" if line is not None else self.path
        super().__init__(f"{where}: {reason}")


class VerificationError(IsotropicPolyError):
    """검증 실패. discrepancies에 불일치 목록을 담습니다."""

    def __init__(self, discrepancies: Sequence[Any]):
        self.discrepancies = list(discrepancies)
        super().__init__(f"{len(self.discrepancies)} verification check(s) failed")
