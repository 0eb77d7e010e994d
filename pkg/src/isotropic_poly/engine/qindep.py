"""
q-Independence Polynomial Engine

그래프 G에 대해 I(G, x, q) ∈ Z[q][x] 를 x_q basis로 계산합니다.

c_i(q) = Σ_{|P| = i, P 독립} Σ_{Q 유효} weight(P, Q)

Q의 유효 조건 (G[P ∪ Q]의 연결성분 기준):
1. 각 성분은 P 정점을 많아야 하나 포함
2. P 정점 u를 포함한 성분의 모든 정점 v는 v >= u
3. P 정점이 없는 성분 D는 min(D) > min(P)  (P = ∅ 이면 min(P) = +∞)

weight(P, Q):
- P 정점을 포함한 성분 C: (q-1)^{|C|-1}
- P 정점이 없는 성분 D: (q^d - 1)·(q-1)^{|D|-1},  d = |{u ∈ P : u < min(D)}|

Q 열거 전략:
- "sweep": {1..n} \\ P 의 모든 부분집합을 검사
- "pruned": 정점 오름차순 DFS, 유효성이 깨지면 가지를 버림
  (정점을 추가하면 성분은 합쳐지기만 하므로 무효는 상위 집합에서도 무효)

사용 예시:
    engine = QIndependenceEngine()
    poly = engine.polynomial(path_graph(3))
    [str(c) for c in poly.coefficients]     # ['1', 'q^2 + q + 1', '1']
"""

from collections import Counter
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Optional, Tuple
import logging
import time

from .models import QIndepPoly, StratumWeight
from ..altspace.models import PQLabel
from ..errors import BadArgs, InvalidStratum, TooLarge
from ..graph.graph import (
    Graph,
    component_masks,
    independent_sets,
    independence_number,
    mask_of,
    popcount,
    vertices_of,
)
from ..poly.intpoly import IntPolyQ
from ..settings import settings

logger = logging.getLogger(__name__)

# (|Q|, 정렬된 d 목록) → weight 다항식 키
WeightKey = Tuple[int, Tuple[int, ...]]


def _check_pq(G: Graph, P: Iterable[int], Q: Iterable[int]) -> Tuple[int, int]:
    P = tuple(P)
    Q = tuple(Q)
    for v in P + Q:
        if not 1 <= v <= G.n:
            raise BadArgs(f"vertex {v} outside 1..{G.n}")
    p_mask, q_mask = mask_of(P), mask_of(Q)
    if p_mask & q_mask:
        raise BadArgs(f"P and Q overlap: P={sorted(P)}, Q={sorted(Q)}")
    if not G.is_independent(P):
        raise BadArgs(f"P={sorted(P)} is not independent")
    return p_mask, q_mask


def _weight_key(G: Graph, p_mask: int, q_mask: int) -> Optional[WeightKey]:
    """유효하면 weight 키, 아니면 None."""
    low_p = p_mask & -p_mask
    ds = []
    for comp in component_masks(G, p_mask | q_mask):
        in_p = comp & p_mask
        low = comp & -comp
        if in_p:
            # 조건 1, 2: P 정점이 하나뿐이며 성분의 최소 정점
            if in_p != low:
                return None
        else:
            # 조건 3
            if not low_p or low < low_p:
                return None
            ds.append(popcount(p_mask & (low - 1)))
    return popcount(q_mask), tuple(sorted(ds))


@lru_cache(maxsize=None)
def _weight_poly(key: WeightKey) -> IntPolyQ:
    size_q, ds = key
    result = (IntPolyQ.q() - 1) ** (size_q - len(ds))
    for d in ds:
        result = result * IntPolyQ.q_power_minus_one(d)
    return result


def q_valid(G: Graph, P: Iterable[int], Q: Iterable[int]) -> bool:
    """
    (P, Q)가 비어있지 않은 stratum을 주는지.

    Raises:
        BadArgs: P가 독립집합이 아니거나 P, Q가 겹침
    """
    p_mask, q_mask = _check_pq(G, P, Q)
    return _weight_key(G, p_mask, q_mask) is not None


def pq_weight(G: Graph, P: Iterable[int], Q: Iterable[int]) -> IntPolyQ:
    """
    Stratum 크기 다항식.

    Raises:
        InvalidStratum: q_valid 실패
    """
    P, Q = tuple(P), tuple(Q)
    p_mask, q_mask = _check_pq(G, P, Q)
    key = _weight_key(G, p_mask, q_mask)
    if key is None:
        raise InvalidStratum(f"P={sorted(P)}, Q={sorted(Q)} is not a valid stratum")
    return _weight_poly(key)


class QIndependenceEngine:
    """
    I(G, x, q) 계산 엔진.

    Args:
        q_enumeration: "pruned" 또는 "sweep" (None이면 settings.q_enumeration)
        max_vertices: 허용 정점 수 상한 (None이면 settings.max_graph_vertices)
    """

    def __init__(self, q_enumeration: Optional[str] = None, max_vertices: Optional[int] = None):
        self.q_enumeration = q_enumeration or settings.q_enumeration
        if self.q_enumeration not in ("pruned", "sweep"):
            raise BadArgs(f"unknown Q enumeration strategy {self.q_enumeration!r}")
        self.max_vertices = (
            max_vertices if max_vertices is not None else settings.max_graph_vertices
        )

    # ----- Q 열거 -----
    def _sweep(self, G: Graph, p_mask: int) -> Iterator[Tuple[int, WeightKey]]:
        free = vertices_of(G.full_mask & ~p_mask)
        for bits in range(1 << len(free)):
            q_mask = 0
            for j, v in enumerate(free):
                if bits >> j & 1:
                    q_mask |= 1 << (v - 1)
            key = _weight_key(G, p_mask, q_mask)
            if key is not None:
                yield q_mask, key

    def _pruned(self, G: Graph, p_mask: int) -> Iterator[Tuple[int, WeightKey]]:
        free = vertices_of(G.full_mask & ~p_mask)
        yield 0, _weight_key(G, p_mask, 0)

        def extend(q_mask: int, start: int) -> Iterator[Tuple[int, WeightKey]]:
            for j in range(start, len(free)):
                nxt = q_mask | 1 << (free[j] - 1)
                key = _weight_key(G, p_mask, nxt)
                if key is None:
                    continue
                yield nxt, key
                yield from extend(nxt, j + 1)

        yield from extend(0, 0)

    def valid_q_sets(
        self, G: Graph, P: Iterable[int]
    ) -> Iterator[Tuple[Tuple[int, ...], IntPolyQ]]:
        """독립집합 P에 대한 유효 Q와 weight."""
        p_mask, _ = _check_pq(G, P, ())
        walk = self._pruned if self.q_enumeration == "pruned" else self._sweep
        for q_mask, key in walk(G, p_mask):
            yield vertices_of(q_mask), _weight_poly(key)

    def _p_keys(self, G: Graph, p_mask: int) -> Counter:
        walk = self._pruned if self.q_enumeration == "pruned" else self._sweep
        return Counter(key for _, key in walk(G, p_mask))

    @staticmethod
    def _combine(keys: Counter) -> IntPolyQ:
        total = IntPolyQ.zero()
        for key, mult in sorted(keys.items()):
            total = total + _weight_poly(key) * mult
        return total

    # ----- 집계 -----
    def p_stratum_total(self, G: Graph, P: Iterable[int]) -> IntPolyQ:
        """Σ_Q weight(P, Q): pivot 집합이 P인 전등방 부분공간 수."""
        p_mask, _ = _check_pq(G, P, ())
        return self._combine(self._p_keys(G, p_mask))

    def strata(self, G: Graph, i: int) -> Iterator[StratumWeight]:
        """크기 i 독립집합 P와 유효 Q 전체의 stratum weight."""
        for P in independent_sets(G, i):
            for Q, weight in self.valid_q_sets(G, P):
                yield StratumWeight(PQLabel(P, Q), weight)

    def symbolic_coefficient(self, G: Graph, i: int) -> IntPolyQ:
        """
        c_i(q).

        Raises:
            BadArgs: i < 0
        """
        if i < 0:
            raise BadArgs(f"negative dimension {i}")
        if i == 0:
            return IntPolyQ.one()
        keys: Counter = Counter()
        n_sets = 0
        for P in independent_sets(G, i):
            partial = self._p_keys(G, mask_of(P))
            logger.debug(f"P={P}: {sum(partial.values())} valid Q")
            keys.update(partial)
            n_sets += 1
        logger.debug(f"i={i}: {n_sets} independent sets, {sum(keys.values())} strata")
        return self._combine(keys)

    def polynomial(self, G: Graph) -> QIndepPoly:
        """
        I(G, x, q).

        Raises:
            TooLarge: 정점 수가 max_vertices 초과
        """
        if G.n > self.max_vertices:
            raise TooLarge(f"graph on {G.n} vertices", G.n, self.max_vertices)
        start = time.time()
        alpha = independence_number(G)
        coeffs = tuple(self.symbolic_coefficient(G, i) for i in range(alpha + 1))
        logger.info(
            f"q-independence polynomial: n={G.n}, |E|={len(G.edges)}, alpha={alpha}, "
            f"{time.time() - start:.2f}s"
        )
        return QIndepPoly(coeffs)


# ========== 모듈 수준 편의 함수 ==========

def strata(G: Graph, i: int) -> Iterator[StratumWeight]:
    return QIndependenceEngine().strata(G, i)


def p_stratum_total(G: Graph, P: Iterable[int]) -> IntPolyQ:
    return QIndependenceEngine().p_stratum_total(G, P)


def symbolic_coefficient(G: Graph, i: int) -> IntPolyQ:
    return QIndependenceEngine().symbolic_coefficient(G, i)


def q_independence_polynomial(G: Graph, q_enumeration: Optional[str] = None) -> QIndepPoly:
    return QIndependenceEngine(q_enumeration=q_enumeration).polynomial(G)


def strata_by_label(G: Graph, i: int, q0: int) -> Dict[PQLabel, int]:
    """strata(G, i)를 q = q0 에서 평가한 {label: 크기}."""
    return {s.label: s.weight.evaluate(q0) for s in strata(G, i)}
