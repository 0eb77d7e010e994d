"""
q-Independence Engine Tests.

테스트 실행:
    pytest src/isotropic_poly/tests/test_qindep.py -v
"""

import networkx as nx
import numpy as np
import pytest

from isotropic_poly import (
    QIndependenceEngine,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    gaussian_binomial,
    independence_polynomial,
    path_graph,
    pq_weight,
    q_independence_polynomial,
    q_valid,
    specialize_q,
    star_graph,
    xq_mul,
)
from isotropic_poly.altspace import PQLabel
from isotropic_poly.engine import p_stratum_total, strata_by_label, symbolic_coefficient
from isotropic_poly.errors import BadArgs, InvalidStratum, TooLarge
from isotropic_poly.graph import from_networkx, graph_make, independence_number, relabel
from isotropic_poly.poly import IntPolyQ

Q = IntPolyQ.q()


def _random_graphs(count, max_n, seed):
    rng = np.random.default_rng(seed)
    return [
        from_networkx(nx.gnp_random_graph(int(rng.integers(1, max_n + 1)), 0.5, seed=seed + k))
        for k in range(count)
    ]


@pytest.fixture
def engine():
    """기본 엔진 fixture."""
    return QIndependenceEngine()


@pytest.fixture
def small_graphs():
    """n <= 8 무작위 그래프 fixture."""
    return _random_graphs(20, 8, seed=11)


class TestStratumConditions:
    """q_valid / pq_weight 테스트."""

    def test_valid_single_component(self):
        """P_3, P={1}, Q={2,3}: 성분 {1,2,3}, 최소 정점이 P."""
        assert q_valid(path_graph(3), [1], [2, 3])

    def test_component_below_p_vertex(self):
        """P_3, P={2}, Q={1}: 성분 {1,2} 에 v=1 < u=2."""
        assert not q_valid(path_graph(3), [2], [1])

    def test_p_free_component_below_min_p(self):
        """P_3, P={3}, Q={1}: P 없는 성분 {1}, 1 < min P."""
        assert not q_valid(path_graph(3), [3], [1])

    def test_two_p_vertices_in_component(self):
        """P_3, P={1,3}, Q={2}: 한 성분에 P 정점 둘."""
        assert not q_valid(path_graph(3), [1, 3], [2])

    def test_empty_p_with_nonempty_q(self):
        """P = ∅ 이면 비어있지 않은 Q 는 무효."""
        assert not q_valid(path_graph(3), [], [2])
        assert q_valid(path_graph(3), [], [])

    def test_argument_errors(self):
        """P 가 독립이 아니거나 P, Q 가 겹치면 BadArgs."""
        with pytest.raises(BadArgs):
            q_valid(path_graph(3), [1, 2], [])
        with pytest.raises(BadArgs):
            q_valid(path_graph(3), [1], [1])
        with pytest.raises(BadArgs):
            q_valid(path_graph(3), [4], [])

    def test_weight_empty_q(self):
        """Q = ∅ 이면 weight 1."""
        for P in ([1], [2], [3], [1, 3]):
            assert pq_weight(path_graph(3), P, []) == 1

    def test_weight_p3(self):
        """P_3, P={1}, Q={2,3}: (q-1)^2."""
        assert pq_weight(path_graph(3), [1], [2, 3]) == (Q - 1) ** 2

    def test_weight_p_free_component(self):
        """empty_2, P={1}, Q={2}: d = 1 → q - 1."""
        assert pq_weight(empty_graph(2), [1], [2]) == Q - 1

    def test_weight_mixed(self):
        """empty_3, P={1,2}, Q={3}: d = 2 → q^2 - 1."""
        assert pq_weight(empty_graph(3), [1, 2], [3]) == Q**2 - 1

    def test_weight_invalid(self):
        """무효 stratum 의 weight 는 InvalidStratum."""
        with pytest.raises(InvalidStratum):
            pq_weight(path_graph(3), [2], [1])


class TestSymbolicCoefficient:
    """c_i(q) 예제 테스트."""

    def test_k2(self):
        """K_2: c_1 = q + 1."""
        assert symbolic_coefficient(complete_graph(2), 1) == Q + 1

    def test_empty_2(self):
        """empty_2: c_1 = q + 1, c_2 = 1."""
        G = empty_graph(2)
        assert symbolic_coefficient(G, 1) == Q + 1
        assert symbolic_coefficient(G, 2) == 1

    def test_p3(self):
        """P_3: c_1 = q^2 + q + 1, c_2 = 1."""
        G = path_graph(3)
        assert symbolic_coefficient(G, 1) == Q**2 + Q + 1
        assert symbolic_coefficient(G, 2) == 1

    def test_dimension_zero_and_beyond_alpha(self):
        """c_0 = 1, i > α 이면 0."""
        G = complete_graph(3)
        assert symbolic_coefficient(G, 0) == 1
        assert symbolic_coefficient(G, 2).is_zero()
        with pytest.raises(BadArgs):
            symbolic_coefficient(G, -1)

    def test_p_stratum_total(self):
        """K_2: P={1} 합 q, P={2} 합 1."""
        G = complete_graph(2)
        assert p_stratum_total(G, [1]) == Q
        assert p_stratum_total(G, [2]) == 1

    def test_strata_by_label(self):
        """P_3, i=1, q=2 stratum 크기 합 = 7."""
        sizes = strata_by_label(path_graph(3), 1, 2)
        assert sizes[PQLabel((1,), (2, 3))] == 1
        assert sizes[PQLabel((1,), (2,))] == 1
        assert sum(sizes.values()) == 7

    def test_empty_graph_is_gaussian(self):
        """간선 없는 그래프: c_i = [n choose i]_q."""
        for n in range(6):
            poly = q_independence_polynomial(empty_graph(n))
            assert poly.coefficients == tuple(gaussian_binomial(n, i) for i in range(n + 1))

    def test_lines_always_counted(self, small_graphs):
        """모든 직선은 전등방: c_1 = [n choose 1]_q."""
        for G in small_graphs:
            assert symbolic_coefficient(G, 1) == gaussian_binomial(G.n, 1)


class TestQIndependencePolynomial:
    """I(G, x, q) 테스트."""

    def test_worked_values(self):
        """K_2, empty_2, P_3, 단일 정점."""
        assert str(q_independence_polynomial(complete_graph(2))) == "1 + (q + 1)*xq^1"
        assert str(q_independence_polynomial(empty_graph(2))) == "1 + (q + 1)*xq^1 + xq^2"
        assert str(q_independence_polynomial(path_graph(3))) == "1 + (q^2 + q + 1)*xq^1 + xq^2"
        assert str(q_independence_polynomial(empty_graph(1))) == "1 + xq^1"

    def test_evaluate_counts(self):
        """P_3 at q = 2, 3."""
        poly = q_independence_polynomial(path_graph(3))
        assert poly.evaluate_counts(2) == (1, 7, 1)
        assert poly.evaluate_counts(3) == (1, 13, 1)
        assert poly.to_dict() == {"coefficients": ["1", "q^2 + q + 1", "1"]}

    def test_degree_is_alpha(self, small_graphs):
        """x_q 차수 = α(G)."""
        for G in small_graphs:
            assert q_independence_polynomial(G).degree == independence_number(G)

    def test_sweep_equals_pruned(self, small_graphs):
        """두 Q 열거 전략의 결과가 같음."""
        sweep = QIndependenceEngine(q_enumeration="sweep")
        pruned = QIndependenceEngine(q_enumeration="pruned")
        for G in small_graphs:
            assert sweep.polynomial(G) == pruned.polynomial(G)

    def test_valid_q_sets_match(self, small_graphs):
        """전략별 유효 Q 집합이 같음."""
        sweep = QIndependenceEngine(q_enumeration="sweep")
        pruned = QIndependenceEngine(q_enumeration="pruned")
        G = small_graphs[0]
        for P in ([1], [G.n]):
            assert sorted(sweep.valid_q_sets(G, P)) == sorted(pruned.valid_q_sets(G, P))

    def test_relabel_invariance(self):
        """정점 재표기는 다항식을 바꾸지 않음."""
        rng = np.random.default_rng(3)
        for G in _random_graphs(10, 7, seed=5):
            perm = [int(v) + 1 for v in rng.permutation(G.n)]
            assert q_independence_polynomial(relabel(G, perm)) == q_independence_polynomial(G)

    def test_product_law(self):
        """I(G ⊔ H) = I(G) · I(H) (x_q basis, Z[q] 계수)."""
        pairs = [
            (complete_graph(2), complete_graph(2)),
            (path_graph(3), empty_graph(1)),
            (cycle_graph(4), star_graph(3)),
            (graph_make(4, [(1, 3), (2, 4)]), path_graph(2)),
        ]
        for G, H in pairs:
            joint = q_independence_polynomial(disjoint_union(G, H)).to_xq_poly()
            product = xq_mul(
                q_independence_polynomial(G).to_xq_poly(),
                q_independence_polynomial(H).to_xq_poly(),
            )
            assert joint == product

    def test_specialize_at_one(self):
        """q = 1 특수화 == I(G, x)."""
        for G in _random_graphs(20, 10, seed=17):
            poly = q_independence_polynomial(G)
            assert specialize_q(poly.to_xq_poly(), 1) == independence_polynomial(G)
            assert poly.specialize(1) == independence_polynomial(G)

    @pytest.mark.slow
    def test_specialize_at_one_large(self):
        """n <= 18 무작위 그래프 100개의 q = 1 특수화."""
        for G in _random_graphs(100, 18, seed=2024):
            poly = q_independence_polynomial(G)
            assert specialize_q(poly.to_xq_poly(), 1) == independence_polynomial(G)

    def test_vertex_limit(self):
        """정점 수 상한 초과 시 TooLarge."""
        with pytest.raises(TooLarge):
            QIndependenceEngine(max_vertices=3).polynomial(path_graph(4))

    def test_unknown_strategy(self):
        """알 수 없는 Q 열거 전략 거부."""
        with pytest.raises(BadArgs):
            QIndependenceEngine(q_enumeration="dp")
