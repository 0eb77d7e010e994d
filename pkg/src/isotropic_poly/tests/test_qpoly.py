"""
Z[q] / Z[q][x] Polynomial Tests.

테스트 실행:
    pytest src/isotropic_poly/tests/test_qpoly.py -v
"""

from math import comb

import pytest
import sympy
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

from isotropic_poly.errors import BadArgs
from isotropic_poly.poly import (
    Basis,
    BivarPoly,
    IntPolyQ,
    evaluate,
    from_monomial,
    gaussian_binomial,
    general_linear_count,
    specialize_q,
    structure_constant,
    to_monomial,
    xq_expand,
    xq_mul,
)

Q = IntPolyQ.q()

# x 차수 <= 3, q 차수 <= 2 인 x_q basis 다항식
xq_polys = st.dictionaries(
    st.integers(min_value=0, max_value=3),
    st.lists(st.integers(min_value=-3, max_value=3), max_size=3),
    max_size=4,
).map(lambda raw: BivarPoly.xq({d: IntPolyQ(tuple(c)) for d, c in raw.items()}))


@pytest.fixture
def k2_poly():
    """1 + (q + 1)·x_q fixture (K2 의 q-independence 다항식)."""
    return BivarPoly.xq({0: 1, 1: Q + 1})


class TestIntPolyQ:
    """Z[q] 다항식 테스트."""

    def test_square(self):
        """(q + 1)^2 = q^2 + 2q + 1."""
        p = (Q + 1) ** 2
        assert p.coeffs == (1, 2, 1)
        assert p.evaluate(3) == 16
        assert str(p) == "q^2 + 2*q + 1"

    def test_canonical_zero(self):
        """trailing zero 제거, 영다항식은 빈 tuple."""
        assert IntPolyQ((0, 0, 0)).coeffs == ()
        assert IntPolyQ((1, 2, 0)).degree == 1
        assert (Q - Q).is_zero()
        assert str(IntPolyQ.zero()) == "0"

    def test_int_equality(self):
        """상수 다항식은 정수와 비교 가능."""
        assert IntPolyQ.constant(5) == 5
        assert IntPolyQ.zero() == 0
        assert Q != 1

    def test_negative_rendering(self):
        """음수 계수 표기."""
        assert str(IntPolyQ((1, -1))) == "-q + 1"
        assert str(IntPolyQ((-1, -1, 1, 1))) == "q^3 + q^2 - q - 1"

    def test_latex(self):
        """LaTeX 지수는 중괄호."""
        assert (Q**2 + 1).to_latex() == "q^{2} + 1"

    def test_sympy_round_trip(self):
        """sympy 식과 상호 변환."""
        p = IntPolyQ((3, 0, -2, 1))
        assert IntPolyQ.from_sympy(p.to_sympy()) == p

    def test_constant_value(self):
        """비상수 다항식의 constant_value 는 오류."""
        with pytest.raises(ValueError):
            Q.constant_value()


class TestGaussianBinomial:
    """Gaussian binomial 테스트."""

    def test_4_choose_2(self):
        """[4 choose 2]_q = q^4 + q^3 + 2q^2 + q + 1."""
        assert gaussian_binomial(4, 2).coeffs == (1, 1, 2, 1, 1)

    def test_edges(self):
        """[n choose 0] = [n choose n] = 1."""
        for n in range(6):
            assert gaussian_binomial(n, 0) == 1
            assert gaussian_binomial(n, n) == 1

    def test_bad_args(self):
        """k > n 거부."""
        with pytest.raises(BadArgs):
            gaussian_binomial(2, 3)
        with pytest.raises(BadArgs):
            gaussian_binomial(-1, 0)

    def test_identities(self):
        """대칭성, 두 번째 q-Pascal 항등식, q = 1 특수화 (n <= 10)."""
        for n in range(1, 11):
            for k in range(n + 1):
                g = gaussian_binomial(n, k)
                assert g == gaussian_binomial(n, n - k)
                assert g.evaluate(1) == comb(n, k)
                if 0 < k < n:
                    other = IntPolyQ.q_power(n - k) * gaussian_binomial(
                        n - 1, k - 1
                    ) + gaussian_binomial(n - 1, k)
                    assert g == other

    def test_absorption(self):
        """[d, i+1]·(q^{i+1} - 1) = [d, i]·(q^{d-i} - 1), d <= 8."""
        for d in range(1, 9):
            for i in range(d):
                lhs = gaussian_binomial(d, i + 1) * IntPolyQ.q_power_minus_one(i + 1)
                rhs = gaussian_binomial(d, i) * IntPolyQ.q_power_minus_one(d - i)
                assert lhs == rhs

    def test_product_formula_oracle(self):
        """sympy 로 계산한 곱 공식과 일치."""
        q = sympy.Symbol("q")
        for n in range(7):
            for k in range(n + 1):
                num = sympy.prod([1 - q ** (n - j) for j in range(k)])
                den = sympy.prod([1 - q ** (j + 1) for j in range(k)])
                expected = sympy.expand(sympy.cancel(num / den))
                assert sympy.expand(gaussian_binomial(n, k).to_sympy(q) - expected) == 0

    def test_general_linear_count(self):
        """|GL(2, q)| = (q^2 - 1)(q^2 - q)."""
        assert general_linear_count(0) == 1
        assert general_linear_count(2).coeffs == (0, 1, -1, -1, 1)
        assert general_linear_count(2).evaluate(2) == 6


class TestStructureConstant:
    """structure constant 테스트."""

    def test_2_2_1(self):
        """C_{2,2,1} = (q + 1)^2 (q - 1) = q^3 + q^2 - q - 1."""
        assert structure_constant(2, 2, 1).coeffs == (-1, -1, 1, 1)

    def test_s_zero_is_one(self):
        """C_{d,e,0} = 1."""
        assert structure_constant(3, 2, 0) == 1

    def test_order_required(self):
        """e > d 또는 s > e 거부."""
        with pytest.raises(BadArgs):
            structure_constant(1, 2, 0)
        with pytest.raises(BadArgs):
            structure_constant(2, 1, 2)


class TestBivarPoly:
    """BivarPoly 생성/산술/표기 테스트."""

    def test_merge_and_drop_zero(self):
        """중복 차수 병합, 영계수 제거."""
        p = BivarPoly.monomial([(1, 2), (1, -2), (0, 3)])
        assert p.terms == ((0, IntPolyQ.constant(3)),)
        assert p.degree == 0

    def test_negative_degree(self):
        """음수 차수 거부."""
        with pytest.raises(BadArgs):
            BivarPoly.monomial({-1: 1})

    def test_monomial_drops_q_value(self):
        """MONOMIAL basis 의 q_value 는 None."""
        assert BivarPoly(Basis.MONOMIAL, {0: 1}, 3).q_value is None

    def test_fixed_q_evaluates_coefficients(self):
        """q_value 가 있으면 계수는 정수로 평가."""
        p = BivarPoly.xq({1: Q + 1}, q_value=2)
        assert p.coefficient(1) == 3

    def test_to_text(self, k2_poly):
        """오름차순 텍스트."""
        assert k2_poly.to_text() == "1 + (q + 1)*xq^1"
        assert str(BivarPoly.monomial({0: 1, 1: 2, 2: 1})) == "1 + 2*x + x^2"
        assert str(BivarPoly.monomial({0: 1, 1: -3})) == "1 - 3*x"
        assert str(BivarPoly.monomial({})) == "0"

    def test_to_latex(self, k2_poly):
        """LaTeX 표기."""
        assert k2_poly.to_latex() == "1 + \\left(q + 1\\right) x_q^{1}"

    def test_incompatible_add(self, k2_poly):
        """basis 또는 q_value 가 다르면 거부."""
        with pytest.raises(BadArgs):
            k2_poly + BivarPoly.monomial({0: 1})
        with pytest.raises(BadArgs):
            BivarPoly.xq({0: 1}, 2) + BivarPoly.xq({0: 1}, 3)

    def test_add_sub_scale(self, k2_poly):
        """덧셈, 뺄셈, 스칼라배."""
        assert (k2_poly - k2_poly).is_zero()
        assert k2_poly + k2_poly == k2_poly.scale(2)

    def test_monomial_product(self):
        """(1 + x)^2 = 1 + 2x + x^2."""
        p = BivarPoly.monomial({0: 1, 1: 1})
        assert p * p == BivarPoly.monomial({0: 1, 1: 2, 2: 1})


class TestBasisConversion:
    """basis 변환 테스트."""

    def test_xq_expand_2(self):
        """x_q^2 = x^2 - (q - 1) x."""
        assert xq_expand(2).term_dict() == {1: IntPolyQ((1, -1)), 2: IntPolyQ.one()}
        assert xq_expand(0) == BivarPoly.monomial({0: 1})

    def test_from_monomial_x_squared(self):
        """x^2 = x_q^2 + (q - 1) x_q."""
        p = from_monomial(BivarPoly.x_power(2))
        assert p.term_dict() == {1: Q - 1, 2: IntPolyQ.one()}

    def test_specialized_expansion(self):
        """q = 2 에서 x_q^3 = x(x - 1)(x - 3)."""
        p = to_monomial(specialize_q(BivarPoly.xq_power(3), 2))
        assert p == BivarPoly.monomial({1: 3, 2: -4, 3: 1})

    def test_from_monomial_with_fixed_q(self):
        """q_value 를 준 변환은 x_{q0} basis."""
        m = BivarPoly.monomial({1: 3, 2: -4, 3: 1})
        assert from_monomial(m, q_value=2) == BivarPoly.xq_power(3, q_value=2)

    def test_conversion_is_identity_on_same_basis(self, k2_poly):
        """이미 해당 basis 면 그대로."""
        assert from_monomial(k2_poly) is k2_poly
        m = BivarPoly.x_power(1)
        assert to_monomial(m) is m

    @hyp_settings(max_examples=60, deadline=None)
    @given(
        st.dictionaries(
            st.integers(min_value=0, max_value=8),
            st.lists(st.integers(min_value=-5, max_value=5), max_size=7),
            max_size=5,
        )
    )
    def test_round_trip(self, raw):
        """from_monomial(to_monomial(P)) == P."""
        p = BivarPoly.xq({d: IntPolyQ(tuple(c)) for d, c in raw.items()})
        assert from_monomial(to_monomial(p)) == p


class TestXqMultiplication:
    """x_q basis 곱셈 테스트."""

    def test_square_of_xq(self):
        """x_q · x_q = x_q^2 + (q - 1) x_q."""
        x = BivarPoly.xq_power(1)
        assert xq_mul(x, x).term_dict() == {1: Q - 1, 2: IntPolyQ.one()}

    def test_matches_monomial_product(self):
        """0 <= e <= d <= 6 에서 x_q 곱 규칙 == monomial 곱."""
        for d in range(7):
            for e in range(d + 1):
                lhs = to_monomial(xq_mul(BivarPoly.xq_power(d), BivarPoly.xq_power(e)))
                rhs = xq_expand(d) * xq_expand(e)
                assert lhs == rhs, (d, e)

    def test_square_of_xq_squared(self):
        """x_q^2 · x_q^2 = x_q^4 + C_{2,2,1} x_q^3 + C_{2,2,2} x_q^2."""
        x2 = BivarPoly.xq_power(2)
        assert xq_mul(x2, x2).term_dict() == {
            4: IntPolyQ.one(),
            3: structure_constant(2, 2, 1),
            2: structure_constant(2, 2, 2),
        }

    def test_unit(self, k2_poly):
        """A · 1 = A."""
        assert xq_mul(k2_poly, BivarPoly.one()) == k2_poly

    def test_argument_order(self):
        """d < e 인 인자 순서도 허용 (내부 정렬)."""
        a, b = BivarPoly.xq_power(1), BivarPoly.xq_power(3)
        assert xq_mul(a, b) == xq_mul(b, a)

    @hyp_settings(max_examples=30, deadline=None)
    @given(xq_polys, xq_polys, xq_polys)
    def test_commutative_and_associative(self, a, b, c):
        """무작위 세 다항식: 교환, 결합, monomial 곱과 일치."""
        ab = xq_mul(a, b)
        assert ab == xq_mul(b, a)
        assert xq_mul(ab, c) == xq_mul(a, xq_mul(b, c))
        assert to_monomial(ab) == to_monomial(a) * to_monomial(b)

    def test_fixed_q_product(self, k2_poly):
        """q 고정 곱 == 기호 곱의 특수화."""
        symbolic = specialize_q(k2_poly * k2_poly, 3)
        fixed = specialize_q(k2_poly, 3) * specialize_q(k2_poly, 3)
        assert symbolic == fixed

    def test_rejects_monomial(self):
        """monomial 인자 거부."""
        with pytest.raises(BadArgs):
            xq_mul(BivarPoly.x_power(1), BivarPoly.xq_power(1))


class TestEvaluateSpecialize:
    """평가와 특수화 테스트."""

    def test_evaluate_xq_square(self):
        """x_q^2 at q = 3, x = 13: 13·(13 - 2) = 143."""
        assert evaluate(BivarPoly.xq_power(2), 3, 13) == 143

    def test_evaluate_requires_q(self, k2_poly):
        """Z[q] 계수를 q 없이 평가하면 오류."""
        with pytest.raises(BadArgs):
            evaluate(k2_poly, None, 2)
        with pytest.raises(BadArgs):
            evaluate(BivarPoly.xq_power(2), None, 5)

    def test_evaluate_without_q_when_not_needed(self):
        """정수 계수 monomial 은 q 없이 평가."""
        assert evaluate(BivarPoly.monomial({0: 1, 2: 1}), None, 3) == 10

    def test_evaluate_fixed_q_conflict(self):
        """고정된 q 와 다른 q0 거부."""
        p = BivarPoly.xq_power(2, q_value=2)
        assert evaluate(p, None, 4) == 4 * 3
        with pytest.raises(BadArgs):
            evaluate(p, 3, 4)

    def test_evaluate_consistent_with_monomial(self, k2_poly):
        """basis 변환 후 평가 값 동일."""
        p = k2_poly * k2_poly
        for q0 in (1, 2, 3, 5):
            for x0 in range(-3, 8):
                assert evaluate(p, q0, x0) == evaluate(to_monomial(p), q0, x0)

    def test_specialize_at_one(self, k2_poly):
        """q = 1 이면 monomial basis: 1 + 2x."""
        p = specialize_q(k2_poly, 1)
        assert p.basis is Basis.MONOMIAL
        assert str(p) == "1 + 2*x"

    def test_specialize_at_prime_power(self, k2_poly):
        """q = 2 이면 x_2 basis 정수 계수."""
        p = specialize_q(k2_poly, 2)
        assert p.basis is Basis.XQ
        assert p.q_value == 2
        assert p.coefficient(1) == 3
