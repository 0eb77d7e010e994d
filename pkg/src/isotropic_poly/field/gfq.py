"""
Finite Field Arithmetic for small prime powers.

작은 소수 거듭제곱 q에 대한 유한체 F_q 산술.

원소 인코딩:
- k = 1: 잉여(residue) 자체
- k > 1: 다항식 대표원의 base-p digit 인코딩 (x^j 계수 = digit j)

구현:
1. q = p^k 분해 (sympy.factorint)
2. 고정된 기약 다항식(modulus) 표를 전수 검사로 검증
3. 원시원(primitive element) 탐색 후 log/antilog 표 구성
4. 덧셈/곱셈/역원 표를 numpy 배열로 준비 (행렬 커널에서 fancy indexing으로 사용)

사용 예시:
    F = field_make(4)
    F.mul(2, 3)          # 표 조회
    a = F.element(2)
    (a * a.inverse()).value  # 1
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple
import logging

import numpy as np
from sympy import factorint

from ..errors import NotAPrimePower

logger = logging.getLogger(__name__)


SUPPORTED_ORDERS: Tuple[int, ...] = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27)

# monic 기약 다항식, little-endian 계수 (index j = x^j 계수)
IRREDUCIBLE_MODULI: Dict[int, Tuple[int, ...]] = {
    4: (1, 1, 1),         # x^2 + x + 1 over F_2
    8: (1, 1, 0, 1),      # x^3 + x + 1 over F_2
    9: (1, 0, 1),         # x^2 + 1 over F_3
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1 over F_2
    25: (2, 1, 1),        # x^2 + x + 2 over F_5
    27: (1, 2, 0, 1),     # x^3 + 2x + 1 over F_3
}


# ========== F_p[x] helpers (little-endian lists) ==========

def _poly_trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    """a mod m over F_p (m은 monic)."""
    r = [c % p for c in a]
    _poly_trim(r)
    dm = len(m) - 1
    while len(r) - 1 >= dm and r:
        shift = len(r) - 1 - dm
        factor = r[-1]
        for j, c in enumerate(m):
            r[shift + j] = (r[shift + j] - factor * c) % p
        _poly_trim(r)
    return r


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """
    전수 검사로 기약성 확인.

    차수 1..k//2 의 모든 monic 다항식으로 나누어 떨어지는지 검사합니다.
    지원하는 차수(k <= 4)에서는 즉시 끝납니다.
    """
    k = len(modulus) - 1
    if k < 1 or modulus[-1] % p != 1:
        return False
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not _poly_mod(modulus, divisor, p):
                return False
    return True


def _decode(a: int, p: int, k: int) -> List[int]:
    return [(a // p**j) % p for j in range(k)]


def _encode(digits: Sequence[int], p: int) -> int:
    return sum(int(d) * p**j for j, d in enumerate(digits))


# ========== FieldSpec ==========

@dataclass(frozen=True)
class FieldSpec:
    """
    유한체 F_q 명세.

    Attributes:
        q: field order (= p^k)
        p: characteristic
        k: extension degree
        modulus: monic 기약 다항식 계수 (k = 1이면 빈 tuple)
        add_table, mul_table, neg_table, inv_table: (q x q) / (q,) 산술 표
        exp_table, log_table: 원시원 기준 antilog/log 표 (log_table[0]은 -1)
    """
    q: int
    p: int
    k: int
    modulus: Tuple[int, ...] = ()
    add_table: np.ndarray = field(default=None, compare=False, repr=False)
    mul_table: np.ndarray = field(default=None, compare=False, repr=False)
    neg_table: np.ndarray = field(default=None, compare=False, repr=False)
    inv_table: np.ndarray = field(default=None, compare=False, repr=False)
    exp_table: np.ndarray = field(default=None, compare=False, repr=False)
    log_table: np.ndarray = field(default=None, compare=False, repr=False)

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    @property
    def zero(self) -> "FqElement":
        return FqElement(0, self)

    @property
    def one(self) -> "FqElement":
        return FqElement(1, self)

    def element(self, value: int) -> "FqElement":
        return FqElement(int(value), self)

    def elements(self) -> Iterator["FqElement"]:
        for v in range(self.q):
            yield FqElement(v, self)

    def from_int(self, n: int) -> int:
        """정수 n을 n·1 (prime subfield 원소) 코드로."""
        return n % self.p

    def digits(self, a: int) -> List[int]:
        return _decode(a, self.p, self.k)

    # 스칼라 코드 연산
    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.q}")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))


@dataclass(frozen=True)
class FqElement:
    """F_q 원소 (정수 코드 + 소속 field)."""
    value: int
    field: FieldSpec

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"element code {self.value} outside [0, {self.field.q})")

    def _coerce(self, other) -> int:
        if isinstance(other, FqElement):
            if other.field != self.field:
                raise ValueError("Field mismatch")
            return other.value
        return self.field.from_int(int(other))

    def __add__(self, other) -> "FqElement":
        return FqElement(self.field.add(self.value, self._coerce(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other) -> "FqElement":
        return FqElement(self.field.sub(self.value, self._coerce(other)), self.field)

    def __rsub__(self, other) -> "FqElement":
        return FqElement(self.field.sub(self._coerce(other), self.value), self.field)

    def __mul__(self, other) -> "FqElement":
        return FqElement(self.field.mul(self.value, self._coerce(other)), self.field)

    __rmul__ = __mul__

    def __neg__(self) -> "FqElement":
        return FqElement(self.field.neg(self.value), self.field)

    def __truediv__(self, other) -> "FqElement":
        return FqElement(self.field.div(self.value, self._coerce(other)), self.field)

    def __pow__(self, e: int) -> "FqElement":
        if self.value == 0:
            return FqElement(0 if e else 1, self.field)
        order = self.field.q - 1
        log = int(self.field.log_table[self.value])
        return FqElement(int(self.field.exp_table[(log * e) % order]), self.field)

    def inverse(self) -> "FqElement":
        return FqElement(self.field.inv(self.value), self.field)

    def is_zero(self) -> bool:
        return self.value == 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"F{self.field.q}({self.value})"


# ========== 구성 ==========

def _factor_prime_power(q: int) -> Tuple[int, int]:
    if not isinstance(q, (int, np.integer)) or q < 2:
        raise NotAPrimePower(int(q) if isinstance(q, (int, np.integer)) else -1, "q must be >= 2")
    factors = factorint(int(q))
    if len(factors) != 1:
        raise NotAPrimePower(q, f"has distinct prime factors {sorted(factors)}")
    ((p, k),) = factors.items()
    return int(p), int(k)


def _build_tables(p: int, k: int, modulus: Tuple[int, ...]) -> Dict[str, np.ndarray]:
    q = p**k
    digits = np.array([_decode(a, p, k) for a in range(q)], dtype=np.int64)
    powers = p ** np.arange(k, dtype=np.int64)

    add_table = ((digits[:, None, :] + digits[None, :, :]) % p) @ powers
    neg_table = ((-digits) % p) @ powers

    def mul_codes(a: int, b: int) -> int:
        if k == 1:
            return (a * b) % p
        prod = _poly_mul(_decode(a, p, k), _decode(b, p, k), p)
        return _encode(_poly_mod(prod, modulus, p), p)

    # 원시원 탐색 → antilog 표
    exp_list: List[int] = []
    for g in range(1, q):
        powers_of_g = [1]
        x = mul_codes(1, g)
        while x != 1:
            powers_of_g.append(x)
            x = mul_codes(x, g)
        if len(powers_of_g) == q - 1:
            exp_list = powers_of_g
            break
    exp_table = np.array(exp_list, dtype=np.int64)
    log_table = np.full(q, -1, dtype=np.int64)
    log_table[exp_table] = np.arange(q - 1, dtype=np.int64)

    logs = log_table[1:]
    mul_table = np.zeros((q, q), dtype=np.int64)
    mul_table[1:, 1:] = exp_table[(logs[:, None] + logs[None, :]) % (q - 1)]
    inv_table = np.zeros(q, dtype=np.int64)
    inv_table[1:] = exp_table[(-logs) % (q - 1)]

    return {
        "add_table": add_table,
        "mul_table": mul_table,
        "neg_table": neg_table,
        "inv_table": inv_table,
        "exp_table": exp_table,
        "log_table": log_table,
    }


@lru_cache(maxsize=None)
def field_make(q: int) -> FieldSpec:
    """
    F_q 생성.

    Args:
        q: field order

    Returns:
        산술 표가 준비된 FieldSpec (q별로 캐시)

    Raises:
        NotAPrimePower: q가 소수 거듭제곱이 아니거나 지원 목록 밖
    """
    p, k = _factor_prime_power(q)
    if q not in SUPPORTED_ORDERS:
        raise NotAPrimePower(q, f"outside the supported set {list(SUPPORTED_ORDERS)}")

    modulus: Tuple[int, ...] = ()
    if k > 1:
        modulus = IRREDUCIBLE_MODULI[q]
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")

    tables = _build_tables(p, k, modulus)
    for arr in tables.values():
        arr.setflags(write=False)

    logger.debug(f"Field F_{q} ready (p={p}, k={k}, modulus={modulus})")
    return FieldSpec(q=q, p=p, k=k, modulus=modulus, **tables)
