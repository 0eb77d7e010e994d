"""
Brute-Force Totally-Isotropic Subspace Oracle

Grassmannian 전수 열거로 전등방 부분공간을 세는 oracle.

c_i(S) = |{U ≤ F_q^n : dim U = i, U 전등방}|
TI(S, x) = Σ c_i x_q^i

구현:
1. 열거 비용 Σ_i [n choose i]_q 를 guard 한도와 비교 (초과 시 TooLarge)
2. pivot 패턴별 RREF 배치를 isotropic_mask로 걸러 개수 집계
3. 전등방 공간의 부분공간도 전등방이므로 c_i = 0 이 나오면 중단
4. workers > 1 이면 pivot 패턴 단위로 ProcessPoolExecutor에 분배
   (합산은 교환적이므로 결과는 스케줄과 무관)

사용 예시:
    oracle = IsotropicSubspaceOracle(guard_limit=10**6)
    S = graphical_space(path_graph(3), field_make(2))
    oracle.counts(S)          # (1, 7, 1)
    oracle.polynomial(S)      # 1 + 7*xq^1 + xq^2  (q_value=2)
"""

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Set, Tuple
import logging
import time

import numpy as np

from .models import AltSpace, PQLabel, SubspaceBasis
from .space import isotropic_mask
from ..errors import BadDimension, FieldMismatch, RankDeficient, TooLarge
from ..field.gfq import FieldSpec, field_make
from ..field.grassmannian import (
    enumeration_cost,
    pivot_patterns,
    subspace_batches,
)
from ..field.matrix import EchelonForm, FqMatrix, batch_rank, mat_transpose, rref
from ..poly.bivariate import BivarPoly
from ..poly.gaussian import structure_constant
from ..settings import settings

logger = logging.getLogger(__name__)


def _count_pattern(args: Tuple[int, int, int, np.ndarray, Tuple[int, ...]]) -> int:
    """한 pivot 패턴의 전등방 부분공간 수 (프로세스 풀 작업 단위)."""
    n, i, q, gens, pivots = args
    field = field_make(q)
    total = 0
    for batch in subspace_batches(n, i, field, pivots):
        total += int(isotropic_mask(field, gens, batch).sum())
    return total


def _pq_keys(batch: np.ndarray, pivots: Tuple[int, ...]) -> List[PQLabel]:
    """RREF 배치의 (P, Q) label. 행 공간 RREF는 T^T의 RREF와 같습니다."""
    n = batch.shape[2]
    nonzero_cols = np.any(batch != 0, axis=1)
    P = tuple(p + 1 for p in pivots)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]
    labels = []
    for row in nonzero_cols:
        Q = tuple(c + 1 for c in free_cols if row[c])
        labels.append(PQLabel(P, Q))
    return labels


class IsotropicSubspaceOracle:
    """
    전수 열거 oracle.

    Args:
        guard_limit: 허용하는 최대 열거 비용 (None이면 settings.guard_limit)
        workers: 병렬 프로세스 수 (None이면 settings.workers)
        rank_locus_limit: rank_locus_counts의 q^n 한도
    """

    def __init__(
        self,
        guard_limit: Optional[int] = None,
        workers: Optional[int] = None,
        rank_locus_limit: Optional[int] = None,
    ):
        self.guard_limit = guard_limit if guard_limit is not None else settings.guard_limit
        self.workers = workers if workers is not None else settings.workers
        self.rank_locus_limit = (
            rank_locus_limit if rank_locus_limit is not None else settings.rank_locus_limit
        )

    # ----- guard -----
    def check_guard(self, n: int, q: int) -> int:
        """
        Raises:
            TooLarge: Σ_i [n choose i]_q > guard_limit
        """
        cost = enumeration_cost(n, q)
        if cost > self.guard_limit:
            raise TooLarge(f"subspace enumeration of F_{q}^{n}", cost, self.guard_limit)
        if cost > self.guard_limit // 2:
            logger.warning(
                f"enumeration cost {cost} is close to the guard limit {self.guard_limit}"
            )
        return cost

    # ----- 개수 -----
    def count_dimension(self, S: AltSpace, i: int) -> int:
        """dimension-i 전등방 부분공간 수 (guard 검사 없음)."""
        if i == 0:
            return 1
        gens = S.stacked()
        jobs = [(S.n, i, S.field.q, gens, pivots) for pivots in pivot_patterns(S.n, i)]
        if self.workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                partials = list(pool.map(_count_pattern, jobs))
        else:
            partials = [_count_pattern(job) for job in jobs]
        logger.debug(f"i={i}: per-pivot counts {partials}")
        return sum(partials)

    def counts(self, S: AltSpace) -> Tuple[int, ...]:
        """
        (c_0, ..., c_α).

        Raises:
            TooLarge: 열거 비용이 guard 한도 초과
        """
        cost = self.check_guard(S.n, S.field.q)
        start = time.time()
        logger.info(f"brute TI count: n={S.n}, q={S.field.q}, dim={S.dim}, cost={cost}")
        counts = [1]
        for i in range(1, S.n + 1):
            c = self.count_dimension(S, i)
            if c == 0:
                break
            counts.append(c)
        logger.info(f"brute TI counts {counts} in {time.time() - start:.2f}s")
        return tuple(counts)

    def polynomial(self, S: AltSpace) -> BivarPoly:
        """TI(S, x) = Σ c_i x_q^i, q 고정."""
        return BivarPoly.xq(enumerate(self.counts(S)), q_value=S.field.q)

    def alpha(self, S: AltSpace) -> int:
        return len(self.counts(S)) - 1

    # ----- 열거 / stratum -----
    def enumerate_isotropic(self, S: AltSpace, i: int) -> Iterator[EchelonForm]:
        """dimension-i 전등방 부분공간의 canonical RREF, subspace_iter 순서."""
        if not 0 <= i <= S.n:
            raise BadDimension(f"need 0 <= i <= {S.n}, got {i}")
        self.check_guard(S.n, S.field.q)
        gens = S.stacked()
        for pivots in pivot_patterns(S.n, i):
            for batch in subspace_batches(S.n, i, S.field, pivots):
                keep = isotropic_mask(S.field, gens, batch)
                for mat in batch[keep]:
                    yield EchelonForm(FqMatrix(S.field, mat), pivots, i)

    def stratum_counts(self, S: AltSpace, i: int) -> Dict[PQLabel, int]:
        """dimension-i 전등방 부분공간을 (P, Q)로 묶은 개수."""
        if not 0 <= i <= S.n:
            raise BadDimension(f"need 0 <= i <= {S.n}, got {i}")
        self.check_guard(S.n, S.field.q)
        gens = S.stacked()
        result: Dict[PQLabel, int] = {}
        for pivots in pivot_patterns(S.n, i):
            for batch in subspace_batches(S.n, i, S.field, pivots):
                kept = batch[isotropic_mask(S.field, gens, batch)]
                for label in _pq_keys(kept, pivots):
                    result[label] = result.get(label, 0) + 1
        return result

    # ----- rank locus -----
    def rank_locus_counts(self, S: AltSpace) -> Tuple[int, ...]:
        """
        e별 |{v ∈ F_q^n : dim span{Bv : B ∈ gens} = e}|, e = 0..dim.

        Raises:
            TooLarge: q^n > rank_locus_limit
        """
        field = S.field
        total = field.q**S.n
        if total > self.rank_locus_limit:
            raise TooLarge(f"vector enumeration of F_{field.q}^{S.n}", total, self.rank_locus_limit)
        counts = np.zeros(S.dim + 1, dtype=np.int64)
        if S.dim == 0:
            counts[0] = total
            return tuple(int(c) for c in counts)

        gens = S.stacked()
        weights = field.q ** np.arange(S.n - 1, -1, -1, dtype=np.int64)
        chunk = 1 << 15
        for start in range(0, total, chunk):
            idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
            vecs = (idx[:, None] // weights[None, :]) % field.q
            # images[b, m, :] = gens[m] @ vecs[b]
            if field.is_prime_field:
                images = np.einsum("mnk,bk->bmn", gens, vecs) % field.p
            else:
                images = np.zeros((idx.size, S.dim, S.n), dtype=np.int64)
                for t in range(S.n):
                    images = field.add_table[
                        images, field.mul_table[gens[None, :, :, t], vecs[:, None, None, t]]
                    ]
            ranks = batch_rank(field, images)
            counts += np.bincount(ranks, minlength=S.dim + 1)[: S.dim + 1]
        return tuple(int(c) for c in counts)

    # ----- projection lift -----
    def projection_lift_counts(
        self, n1: int, n2: int, U: SubspaceBasis, V: SubspaceBasis
    ) -> Dict[int, int]:
        """
        W ≤ F_q^{n1+n2} 중 π1(W) = U, π2(W) = V 인 것을 dim W = d + e - s 별로 셈.

        W ⊆ U ⊕ V 이므로 U ⊕ V ≅ F_q^{d+e} 안에서 두 사영이 전사인 부분공간을 셉니다.

        Returns:
            {s: 개수}, s = 0..min(d, e)
        """
        if U.n != n1 or V.n != n2:
            raise BadDimension(f"expected U in F^{n1} and V in F^{n2}, got F^{U.n} and F^{V.n}")
        if U.field != V.field:
            raise FieldMismatch(f"F_{U.field.q} vs F_{V.field.q}")
        field = U.field
        d, e = U.i, V.i
        self.check_guard(d + e, field.q)
        result = {s: 0 for s in range(min(d, e) + 1)}
        for s in result:
            k = d + e - s
            for pivots in pivot_patterns(d + e, k):
                for batch in subspace_batches(d + e, k, field, pivots):
                    left = batch_rank(field, batch[:, :, :d]) == d
                    right = batch_rank(field, batch[:, :, d:]) == e
                    result[s] += int(np.count_nonzero(left & right))
        return result


# ========== 모듈 수준 편의 함수 ==========

def ti_counts_brute(S: AltSpace, guard_limit: Optional[int] = None) -> Tuple[int, ...]:
    return IsotropicSubspaceOracle(guard_limit=guard_limit).counts(S)


def ti_polynomial_brute(S: AltSpace, guard_limit: Optional[int] = None) -> BivarPoly:
    return IsotropicSubspaceOracle(guard_limit=guard_limit).polynomial(S)


def alpha(S: AltSpace, guard_limit: Optional[int] = None) -> int:
    return IsotropicSubspaceOracle(guard_limit=guard_limit).alpha(S)


def enumerate_isotropic(S: AltSpace, i: int) -> Iterator[EchelonForm]:
    return IsotropicSubspaceOracle().enumerate_isotropic(S, i)


def stratum_counts(S: AltSpace, i: int) -> Dict[PQLabel, int]:
    return IsotropicSubspaceOracle().stratum_counts(S, i)


def rank_locus_counts(S: AltSpace, limit: Optional[int] = None) -> Tuple[int, ...]:
    return IsotropicSubspaceOracle(rank_locus_limit=limit).rank_locus_counts(S)


def projection_lift_counts(
    n1: int, n2: int, U: SubspaceBasis, V: SubspaceBasis
) -> Dict[int, int]:
    return IsotropicSubspaceOracle().projection_lift_counts(n1, n2, U, V)


def _echelon_of(U: SubspaceBasis) -> EchelonForm:
    ech = rref(mat_transpose(U.T))
    if ech.rank < U.i:
        raise RankDeficient(f"basis has rank {ech.rank} < {U.i}")
    return ech


def classify_PQ(U: SubspaceBasis) -> PQLabel:
    """
    (P, Q) 분류.

    P = rref(T^T)의 pivot 열 (사전순 최초 비영 Plücker 좌표),
    Q = pivot이 아닌 비영 행 (열 연산만으로 정규화한 T 기준).

    Raises:
        RankDeficient: T가 full column rank가 아님
    """
    ech = _echelon_of(U)
    return _pq_keys(ech.matrix.array[None, : U.i, :], ech.pivots)[0]


def plucker_support(U: SubspaceBasis) -> Set[Tuple[int, ...]]:
    """
    det(T[R]) != 0 인 i-부분집합 R (1-based) 전체.

    Raises:
        RankDeficient: T가 full column rank가 아님
    """
    _echelon_of(U)
    T = U.T.array
    subsets = list(combinations(range(U.n), U.i))
    if U.i == 0:
        return {()}
    minors = np.stack([T[list(R), :] for R in subsets])
    full = batch_rank(U.field, minors) == U.i
    return {tuple(r + 1 for r in R) for R, ok in zip(subsets, full) if ok}


def direct_sum_lift_expected(field: FieldSpec, d: int, e: int) -> Dict[int, int]:
    """C_{d,e,s} at q, s = 0..min(d, e) (projection_lift_counts 기대값)."""
    hi, lo = (d, e) if d >= e else (e, d)
    return {s: structure_constant(hi, lo, s).evaluate(field.q) for s in range(lo + 1)}
