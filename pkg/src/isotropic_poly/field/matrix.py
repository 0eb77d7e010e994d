"""
Matrices over F_q.

F_q 위의 정확한 행렬 커널.

모든 연산은 FieldSpec의 산술 표를 numpy fancy indexing으로 조회하여 수행합니다.
소수체(k = 1)의 곱셈은 정수 행렬곱 후 mod p 로 처리합니다.

핵심 연산:
- mat_mul / mat_transpose / mat_neg / mat_add / mat_scale
- rref: canonical reduced row echelon form (pivot 열은 0-based index)
- rank / batch_rank: 작은 행렬 다수의 rank를 한 번에 계산

사용 예시:
    F = field_make(3)
    A = FqMatrix.from_rows(F, [[1, 2], [2, 1]])
    ech = rref(A)
    ech.pivots, ech.rank
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
import logging

import numpy as np

from .gfq import FieldSpec
from ..errors import BadArgs, FieldMismatch, ShapeMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FqMatrix:
    """
    F_q 위의 행렬 (불변).

    Attributes:
        field: 소속 유한체
        array: (rows, cols) int64 원소 코드, 읽기 전용
    """
    field: FieldSpec
    array: np.ndarray

    def __post_init__(self):
        arr = np.array(self.array, dtype=np.int64)
        if arr.ndim != 2:
            raise ShapeMismatch(f"matrix must be 2-dimensional, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= self.field.q):
            raise BadArgs(f"entries must lie in [0, {self.field.q})")
        arr.setflags(write=False)
        object.__setattr__(self, "array", arr)

    @classmethod
    def from_rows(
        cls, field: FieldSpec, rows: Sequence[Sequence[int]], cols: Optional[int] = None
    ) -> "FqMatrix":
        """행 리스트로 생성. 행이 없으면 cols로 (0 x cols) 행렬."""
        if len(rows) == 0:
            return cls(field, np.zeros((0, cols or 0), dtype=np.int64))
        return cls(field, np.array(rows, dtype=np.int64))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "FqMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "FqMatrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> Tuple[int, ...]:
        """row-major 원소 코드."""
        return tuple(int(v) for v in self.array.ravel())

    def to_lists(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.array]

    def __getitem__(self, idx):
        return self.array[idx]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FqMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.array, other.array))
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.shape, self.array.tobytes()))

    def __repr__(self) -> str:
        return f"FqMatrix(q={self.field.q}, {self.to_lists()})"


@dataclass(frozen=True)
class EchelonForm:
    """
    Reduced row echelon form.

    Attributes:
        matrix: RREF 행렬
        pivots: pivot 열 index (0-based, 증가 순)
        rank: pivot 개수
    """
    matrix: FqMatrix
    pivots: Tuple[int, ...]
    rank: int

    def basis(self) -> FqMatrix:
        """행 공간 basis (처음 rank 개 행)."""
        return FqMatrix(self.matrix.field, self.matrix.array[: self.rank])


# ========== 코드 배열 커널 ==========

def _same_field(a: FqMatrix, b: FqMatrix) -> FieldSpec:
    if a.field != b.field:
        raise FieldMismatch(f"F_{a.field.q} vs F_{b.field.q}")
    return a.field


def matmul_codes(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(r x m) · (m x c) over F_q, 원소 코드 배열 입출력."""
    if field.is_prime_field:
        return (a @ b) % field.p
    rows, inner = a.shape
    cols = b.shape[1]
    acc = np.zeros((rows, cols), dtype=np.int64)
    for j in range(inner):
        acc = field.add_table[acc, field.mul_table[a[:, j, None], b[None, j, :]]]
    return acc


def _row_reduce(field: FieldSpec, a: np.ndarray) -> Tuple[np.ndarray, Tuple[int, ...]]:
    m = np.array(a, dtype=np.int64, copy=True)
    n_rows, n_cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        m[r] = field.mul_table[field.inv_table[m[r, c]], m[r]]
        factors = m[:, c].copy()
        factors[r] = 0
        targets = np.nonzero(factors)[0]
        if targets.size:
            scaled = field.mul_table[factors[targets, None], m[r][None, :]]
            m[targets] = field.add_table[m[targets], field.neg_table[scaled]]
        pivots.append(c)
        r += 1
    return m, tuple(pivots)


# ========== 공개 연산 ==========

def mat_mul(a: FqMatrix, b: FqMatrix) -> FqMatrix:
    field = _same_field(a, b)
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return FqMatrix(field, matmul_codes(field, a.array, b.array))


def mat_transpose(a: FqMatrix) -> FqMatrix:
    return FqMatrix(a.field, a.array.T)


def mat_neg(a: FqMatrix) -> FqMatrix:
    return FqMatrix(a.field, a.field.neg_table[a.array])


def mat_add(a: FqMatrix, b: FqMatrix) -> FqMatrix:
    field = _same_field(a, b)
    if a.shape != b.shape:
        raise ShapeMismatch(f"cannot add {a.shape} and {b.shape}")
    return FqMatrix(field, field.add_table[a.array, b.array])


def mat_scale(c: int, a: FqMatrix) -> FqMatrix:
    return FqMatrix(a.field, a.field.mul_table[c, a.array])


def rref(a: FqMatrix) -> EchelonForm:
    """
    Canonical RREF.

    같은 행 공간을 갖는 두 행렬은 동일한 EchelonForm을 돌려줍니다.
    pivot 집합은 행 공간의 가역 부분행렬을 주는 열 집합 중 사전순 최소입니다.
    """
    reduced, pivots = _row_reduce(a.field, a.array)
    return EchelonForm(FqMatrix(a.field, reduced), pivots, len(pivots))


def rank(a: FqMatrix) -> int:
    return len(_row_reduce(a.field, a.array)[1])


def batch_rank(field: FieldSpec, arrays: np.ndarray) -> np.ndarray:
    """
    (b, r, c) 배열의 행렬별 rank.

    배치 전체에 대해 열 단위로 Gauss-Jordan 소거를 동시에 수행합니다.

    Args:
        field: 유한체
        arrays: 원소 코드 배열 (b, r, c)

    Returns:
        (b,) int64 rank 배열
    """
    m = np.array(arrays, dtype=np.int64, copy=True)
    b, n_rows, n_cols = m.shape
    ranks = np.zeros(b, dtype=np.int64)
    if b == 0 or n_rows == 0:
        return ranks
    row_idx = np.arange(n_rows)
    for c in range(n_cols):
        candidate = (m[:, :, c] != 0) & (row_idx[None, :] >= ranks[:, None])
        active = np.nonzero(candidate.any(axis=1))[0]
        if active.size == 0:
            continue
        piv = np.argmax(candidate[active], axis=1)
        target = ranks[active]

        # pivot 행을 rank 위치로 교환
        pivot_rows = m[active, piv].copy()
        m[active, piv] = m[active, target]
        m[active, target] = pivot_rows

        inv = field.inv_table[pivot_rows[:, c]]
        pivot_rows = field.mul_table[inv[:, None], pivot_rows]
        m[active, target] = pivot_rows

        factors = m[active, :, c].copy()
        factors[np.arange(active.size), target] = 0
        scaled = field.mul_table[factors[:, :, None], pivot_rows[:, None, :]]
        m[active] = field.add_table[m[active], field.neg_table[scaled]]
        ranks[active] += 1
    return ranks


def random_matrix(
    field: FieldSpec, rows: int, cols: int, rng: Optional[np.random.Generator] = None
) -> FqMatrix:
    rng = rng if rng is not None else np.random.default_rng()
    return FqMatrix(field, rng.integers(0, field.q, size=(rows, cols), dtype=np.int64))
