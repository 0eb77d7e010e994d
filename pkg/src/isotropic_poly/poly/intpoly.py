"""
IntPolyQ: dense univariate polynomials in q over Z.

Z[q]의 원소. 계수는 Python 임의 정밀도 정수이며 index j = q^j 계수입니다.
canonical form: trailing zero 제거, 영다항식 = 빈 tuple.

사용 예시:
    q = IntPolyQ.q()
    p = (q + 1) ** 2          # q^2 + 2q + 1
    p.evaluate(3)             # 16
    str(p)                    # "q^2 + 2*q + 1"
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

import sympy

IntLike = Union[int, "IntPolyQ"]


def _strip(coeffs: Iterable[int]) -> Tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolyQ:
    """
    Z[q] 다항식.

    Attributes:
        coeffs: (c_0, c_1, ...), c_j 는 q^j 계수
    """
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    # ----- 생성자 -----
    @classmethod
    def zero(cls) -> "IntPolyQ":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolyQ":
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> "IntPolyQ":
        return cls((c,))

    @classmethod
    def q(cls) -> "IntPolyQ":
        return cls((0, 1))

    @classmethod
    def q_power(cls, e: int) -> "IntPolyQ":
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        return cls((0,) * e + (1,))

    @classmethod
    def q_power_minus_one(cls, e: int) -> "IntPolyQ":
        """q^e - 1."""
        return cls.q_power(e) - 1

    @classmethod
    def coerce(cls, value: IntLike) -> "IntPolyQ":
        if isinstance(value, IntPolyQ):
            return value
        return cls((int(value),))

    # ----- 속성 -----
    @property
    def degree(self) -> int:
        """차수 (영다항식은 -1)."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else 0

    def coefficient(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    # ----- 산술 -----
    def __add__(self, other: IntLike) -> "IntPolyQ":
        o = IntPolyQ.coerce(other).coeffs
        n = max(len(self.coeffs), len(o))
        return IntPolyQ(
            tuple(
                (self.coeffs[j] if j < len(self.coeffs) else 0) + (o[j] if j < len(o) else 0)
                for j in range(n)
            )
        )

    __radd__ = __add__

    def __neg__(self) -> "IntPolyQ":
        return IntPolyQ(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntLike) -> "IntPolyQ":
        return self + (-IntPolyQ.coerce(other))

    def __rsub__(self, other: IntLike) -> "IntPolyQ":
        return IntPolyQ.coerce(other) - self

    def __mul__(self, other: IntLike) -> "IntPolyQ":
        o = IntPolyQ.coerce(other).coeffs
        if not self.coeffs or not o:
            return IntPolyQ.zero()
        out = [0] * (len(self.coeffs) + len(o) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o):
                out[i + j] += a * b
        return IntPolyQ(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolyQ":
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        result = IntPolyQ.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        if isinstance(other, IntPolyQ):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def evaluate(self, q0: int) -> int:
        """정확한 정수 평가 (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    # ----- 표현 -----
    def _terms_desc(self, var: str, power: str) -> Sequence[Tuple[int, str]]:
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            if j == 0:
                mono = ""
            elif j == 1:
                mono = var
            else:
                mono = power.format(var=var, j=j)
            terms.append((c, mono))
        return terms

    def _render(self, var: str, power: str, times: str) -> str:
        terms = self._terms_desc(var, power)
        if not terms:
            return "0"
        parts = []
        for idx, (c, mono) in enumerate(terms):
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}{times}{mono}"
            else:
                body = str(mag)
            if idx == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __str__(self) -> str:
        """내림차순 텍스트: "q^2 + q + 1"."""
        return self._render("q", "{var}^{j}", "*")

    def to_latex(self) -> str:
        return self._render("q", "{var}^{{{j}}}", " ")

    def to_sympy(self, symbol: "sympy.Symbol" = None) -> "sympy.Expr":
        symbol = symbol if symbol is not None else sympy.Symbol("q")
        return sum((c * symbol**j for j, c in enumerate(self.coeffs)), sympy.Integer(0))

    @classmethod
    def from_sympy(cls, expr: "sympy.Expr", symbol: "sympy.Symbol" = None) -> "IntPolyQ":
        symbol = symbol if symbol is not None else sympy.Symbol("q")
        poly = sympy.Poly(sympy.expand(expr), symbol)
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))
