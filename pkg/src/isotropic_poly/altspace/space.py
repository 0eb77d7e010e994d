"""
Alternating Matrix Space Construction

교대 행렬 공간 생성과 전(全)등방성(total isotropy) 판정.

교대 조건: 모든 u 에 대해 u^T B u = 0.
동치 조건은 대각 성분이 0이고 B[j,k] + B[k,j] = 0 인 것입니다.
표수 2에서는 두 번째 조건이 대칭성이 되며, 대각 조건은 별도로 검사해야 합니다.

사용 예시:
    F = field_make(3)
    S = graphical_space(path_graph(3), F)       # span{A_12, A_23}
    U = SubspaceBasis.from_columns(F, [[1, 0, 0], [0, 0, 1]], 3)
    is_totally_isotropic(S, U)                   # True
"""

from typing import Iterable, List, Sequence, Union
import logging

import numpy as np

from .models import AltSpace, SubspaceBasis
from ..errors import BadArgs, FieldMismatch, NotAlternating, ShapeMismatch
from ..field.gfq import FieldSpec
from ..field.matrix import FqMatrix, mat_mul, mat_transpose, rank
from ..graph.graph import Graph

logger = logging.getLogger(__name__)

MatrixLike = Union[FqMatrix, Sequence[Sequence[int]]]


def _alternating_witness(field: FieldSpec, B: np.ndarray) -> Union[tuple, None]:
    """u^T B u != 0 인 u를 찾으면 반환, 교대 행렬이면 None."""
    n = B.shape[0]
    diag = np.nonzero(np.diagonal(B))[0]
    if diag.size:
        j = int(diag[0])
        return tuple(1 if t == j else 0 for t in range(n))
    sym = field.add_table[B, B.T]
    bad = np.argwhere(sym != 0)
    if bad.size:
        j, k = (int(v) for v in bad[0])
        return tuple(1 if t in (j, k) else 0 for t in range(n))
    return None


def altspace_make(n: int, field: FieldSpec, matrices: Iterable[MatrixLike]) -> AltSpace:
    """
    교대 행렬 공간 생성.

    1. 각 행렬의 shape / field 확인
    2. 교대 조건 검사 (실패 시 witness u 보고)
    3. n^2 벡터로서 선형독립인 부분 목록으로 축소

    Args:
        n: ambient dimension
        field: 유한체
        matrices: generator 후보

    Returns:
        AltSpace (dim = 독립 generator 수)

    Raises:
        ShapeMismatch: n x n 이 아닌 행렬
        FieldMismatch: 다른 field의 FqMatrix
        NotAlternating: 교대 조건 위반
    """
    checked: List[FqMatrix] = []
    for idx, raw in enumerate(matrices):
        if isinstance(raw, FqMatrix):
            if raw.field != field:
                raise FieldMismatch(
                    f"generator {idx} is over F_{raw.field.q}, expected F_{field.q}"
                )
            B = raw
        else:
            B = FqMatrix.from_rows(field, raw, cols=n)
        if B.shape != (n, n):
            raise ShapeMismatch(f"generator {idx} has shape {B.shape}, expected ({n}, {n})")
        witness = _alternating_witness(field, B.array)
        if witness is not None:
            raise NotAlternating(idx, witness)
        checked.append(B)

    independent: List[FqMatrix] = []
    rows: List[np.ndarray] = []
    for B in checked:
        candidate = rows + [B.array.ravel()]
        if rank(FqMatrix(field, np.stack(candidate))) == len(candidate):
            rows = candidate
            independent.append(B)
    if len(independent) < len(checked):
        logger.debug(f"reduced {len(checked)} generators to {len(independent)} independent ones")
    return AltSpace(n, field, tuple(independent))


def zero_space(n: int, field: FieldSpec) -> AltSpace:
    return AltSpace(n, field, ())


def elementary_alternating(n: int, field: FieldSpec, u: int, v: int) -> FqMatrix:
    """A_{u,v}: (u, v) 성분 1, (v, u) 성분 -1 (1-based)."""
    a = np.zeros((n, n), dtype=np.int64)
    a[u - 1, v - 1] = 1
    a[v - 1, u - 1] = field.neg(1)
    return FqMatrix(field, a)


def graphical_space(G: Graph, field: FieldSpec) -> AltSpace:
    """B_G = span{A_{u,v} : {u,v} ∈ E}, 간선은 정렬 순서."""
    gens = tuple(elementary_alternating(G.n, field, u, v) for u, v in G.sorted_edges())
    return AltSpace(G.n, field, gens)


def direct_sum(B: AltSpace, C: AltSpace) -> AltSpace:
    """
    Disjoint direct sum: B의 generator는 왼쪽 위 블록, C의 generator는 오른쪽 아래 블록.

    Raises:
        FieldMismatch: 다른 field
    """
    if B.field != C.field:
        raise FieldMismatch(f"F_{B.field.q} vs F_{C.field.q}")
    n = B.n + C.n
    gens = []
    for g in B.gens:
        a = np.zeros((n, n), dtype=np.int64)
        a[: B.n, : B.n] = g.array
        gens.append(FqMatrix(B.field, a))
    for g in C.gens:
        a = np.zeros((n, n), dtype=np.int64)
        a[B.n :, B.n :] = g.array
        gens.append(FqMatrix(B.field, a))
    return AltSpace(n, B.field, tuple(gens))


def permute(S: AltSpace, perm: Sequence[int]) -> AltSpace:
    """
    좌표 순열 적용 (각 generator B → P^T B P).

    좌표 v는 perm[v-1]로 이동합니다 (1-based).
    """
    if sorted(perm) != list(range(1, S.n + 1)):
        raise BadArgs(f"not a permutation of 1..{S.n}: {list(perm)}")
    target = np.array(perm, dtype=np.int64) - 1
    gens = []
    for g in S.gens:
        a = np.zeros((S.n, S.n), dtype=np.int64)
        a[np.ix_(target, target)] = g.array
        gens.append(FqMatrix(S.field, a))
    return AltSpace(S.n, S.field, tuple(gens))


def is_totally_isotropic(S: AltSpace, U: SubspaceBasis) -> bool:
    """
    모든 generator B에 대해 T^T B T = 0 인지.

    Raises:
        ShapeMismatch: ambient dimension 불일치
        FieldMismatch: 다른 field
    """
    if U.n != S.n:
        raise ShapeMismatch(f"subspace lives in F^{U.n}, space acts on F^{S.n}")
    if U.field != S.field:
        raise FieldMismatch(f"F_{U.field.q} vs F_{S.field.q}")
    Tt = mat_transpose(U.T)
    for g in S.gens:
        if np.any(mat_mul(mat_mul(Tt, g), U.T).array):
            return False
    return True


def isotropic_mask(field: FieldSpec, gens: np.ndarray, batch: np.ndarray) -> np.ndarray:
    """
    배치 판정: batch[b]의 행 공간이 전등방인지.

    Args:
        field: 유한체
        gens: (m, n, n) generator 배열
        batch: (b, i, n) 행 basis 배열

    Returns:
        (b,) bool 배열
    """
    b, i, n = batch.shape
    mask = np.ones(b, dtype=bool)
    if i <= 1 or gens.shape[0] == 0:
        return mask
    for B in gens:
        if field.is_prime_field:
            XB = np.einsum("bin,nk->bik", batch, B) % field.p
            Z = np.einsum("bik,bjk->bij", XB, batch) % field.p
        else:
            XB = np.zeros((b, i, n), dtype=np.int64)
            for t in range(n):
                XB = field.add_table[XB, field.mul_table[batch[:, :, t, None], B[None, None, t, :]]]
            Z = np.zeros((b, i, i), dtype=np.int64)
            for t in range(n):
                Z = field.add_table[Z, field.mul_table[XB[:, :, None, t], batch[:, None, :, t]]]
        mask &= ~np.any(Z != 0, axis=(1, 2))
        if not mask.any():
            break
    return mask
