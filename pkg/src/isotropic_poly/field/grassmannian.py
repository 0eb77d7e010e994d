"""
Grassmannian enumeration over F_q.

Gr(i, n, q)의 모든 dimension-i 부분공간을 canonical RREF로 정확히 한 번씩 열거.

열거 순서 (결정적):
1. pivot 집합: 사전순 (itertools.combinations)
2. free entry: row-major 위치 순, 첫 위치가 최상위 자리인 코드 사전순

pivot 집합 단위로 독립적인 sub-stream(subspace_batches)으로 나눌 수 있어
병렬 집계 결과가 스케줄과 무관합니다.

사용 예시:
    F = field_make(2)
    sum(1 for _ in subspace_iter(4, 2, F))   # 35
"""

from itertools import combinations
from typing import Iterator, List, Tuple
import logging

import numpy as np

from .gfq import FieldSpec
from .matrix import EchelonForm, FqMatrix
from ..errors import BadDimension, TooLarge
from ..poly.gaussian import gaussian_binomial

logger = logging.getLogger(__name__)

DEFAULT_CHUNK = 1 << 16

# int64 코드 인덱스 한계
_INDEX_LIMIT = 1 << 62


def _check_dims(n: int, i: int) -> None:
    if n < 0 or i < 0 or i > n:
        raise BadDimension(f"need 0 <= i <= n, got n={n}, i={i}")


def pivot_patterns(n: int, i: int) -> Iterator[Tuple[int, ...]]:
    """pivot 열 집합 (0-based), 사전순."""
    _check_dims(n, i)
    return combinations(range(n), i)


def free_positions(n: int, pivots: Tuple[int, ...]) -> List[Tuple[int, int]]:
    """RREF에서 자유롭게 값을 가질 수 있는 (row, col) 위치, row-major 순."""
    pivot_set = set(pivots)
    return [
        (r, c)
        for r, p in enumerate(pivots)
        for c in range(p + 1, n)
        if c not in pivot_set
    ]


def subspace_batches(
    n: int,
    i: int,
    field: FieldSpec,
    pivots: Tuple[int, ...],
    chunk_size: int = DEFAULT_CHUNK,
) -> Iterator[np.ndarray]:
    """
    한 pivot 패턴에 속하는 RREF 행렬들을 (b, i, n) 배치로 생성.

    Args:
        n: ambient dimension
        i: subspace dimension
        field: 유한체
        pivots: pivot 열 (0-based, 길이 i)
        chunk_size: 배치 최대 크기

    Yields:
        원소 코드 배열 (b, i, n), subspace_iter와 같은 순서
    """
    q = field.q
    free = free_positions(n, pivots)
    total = q ** len(free)
    if total > _INDEX_LIMIT:
        raise TooLarge(f"pivot pattern {pivots} in Gr({i}, {n}, {q})", total, _INDEX_LIMIT)

    template = np.zeros((i, n), dtype=np.int64)
    for r, p in enumerate(pivots):
        template[r, p] = 1
    rows_idx = np.array([r for r, _ in free], dtype=np.int64)
    cols_idx = np.array([c for _, c in free], dtype=np.int64)
    weights = q ** np.arange(len(free) - 1, -1, -1, dtype=np.int64)

    for start in range(0, total, chunk_size):
        idx = np.arange(start, min(total, start + chunk_size), dtype=np.int64)
        batch = np.broadcast_to(template, (idx.size, i, n)).copy()
        if free:
            digits = (idx[:, None] // weights[None, :]) % q
            batch[:, rows_idx, cols_idx] = digits
        yield batch


def subspace_iter(n: int, i: int, field: FieldSpec) -> Iterator[EchelonForm]:
    """
    Gr(i, n, q)의 canonical RREF 스트림.

    Raises:
        BadDimension: i > n 또는 음수
    """
    _check_dims(n, i)
    return _iter_subspaces(n, i, field)


def _iter_subspaces(n: int, i: int, field: FieldSpec) -> Iterator[EchelonForm]:
    for pivots in pivot_patterns(n, i):
        for batch in subspace_batches(n, i, field, pivots):
            for mat in batch:
                yield EchelonForm(FqMatrix(field, mat), pivots, i)


def grassmannian_size(n: int, i: int, q: int) -> int:
    _check_dims(n, i)
    return gaussian_binomial(n, i).evaluate(q)


def enumeration_cost(n: int, q: int) -> int:
    """Σ_i [n choose i]_q : 전체 부분공간 수."""
    return sum(grassmannian_size(n, i, q) for i in range(n + 1))
