"""
Gaussian binomials and structure constants in Z[q].

- gaussian_binomial(n, k) = [n choose k]_q  (q-Pascal 재귀)
- general_linear_count(s) = (q^s - 1)(q^s - q)...(q^s - q^{s-1})
- structure_constant(d, e, s) = [d choose s]_q · [e choose s]_q · general_linear_count(s)

structure_constant는 x_q^d · x_q^e 전개 규칙의 계수입니다 (bivariate.xq_mul).
"""

from functools import lru_cache

from .intpoly import IntPolyQ
from ..errors import BadArgs


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> IntPolyQ:
    """
    [n choose k]_q.

    q-Pascal: [n, k] = [n-1, k-1] + q^k · [n-1, k]

    Raises:
        BadArgs: k > n 또는 음수 인자
    """
    if n < 0 or k < 0 or k > n:
        raise BadArgs(f"gaussian_binomial needs 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return IntPolyQ.one()
    return gaussian_binomial(n - 1, k - 1) + IntPolyQ.q_power(k) * gaussian_binomial(n - 1, k)


@lru_cache(maxsize=None)
def general_linear_count(s: int) -> IntPolyQ:
    """|GL(s, q)| = Π_{j<s} (q^s - q^j). s = 0이면 1."""
    if s < 0:
        raise BadArgs(f"negative size {s}")
    result = IntPolyQ.one()
    qs = IntPolyQ.q_power(s)
    for j in range(s):
        result = result * (qs - IntPolyQ.q_power(j))
    return result


@lru_cache(maxsize=None)
def structure_constant(d: int, e: int, s: int) -> IntPolyQ:
    """
    C_{d,e,s} (s <= e <= d).

    Raises:
        BadArgs: 순서 조건 위반 (호출자가 d >= e 로 정렬해야 함)
    """
    if not 0 <= s <= e <= d:
        raise BadArgs(f"structure_constant needs 0 <= s <= e <= d, got d={d}, e={e}, s={s}")
    return gaussian_binomial(d, s) * gaussian_binomial(e, s) * general_linear_count(s)
