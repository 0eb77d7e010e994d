"""
Polynomials in Z[q][x] under two bases.

x에 대한 다항식을 두 가지 basis로 표현합니다.

- MONOMIAL: {x^d}
- XQ (q-falling): {x_q^d},  x_q^0 = 1,  x_q^d = x·(x-(q-1))·...·(x-(q^{d-1}-1))

x_q^d의 x^d 계수는 1이므로 basis 변환은 unitriangular 합니다.
x_q^d · x_q^e (d >= e) = Σ_{s=0}^{e} C_{d,e,s} · x_q^{d+e-s}

q_value:
    None이면 계수는 Z[q] 원소 (q는 기호).
    정수이면 q가 그 값으로 고정된 XQ 다항식 (x_{q0}^d basis, 정수 계수).
    MONOMIAL basis에서는 basis 자체가 q와 무관하므로 항상 None으로 정규화합니다.

사용 예시:
    P = BivarPoly.xq({0: 1, 1: IntPolyQ.q() + 1})     # 1 + (q+1)·x_q
    to_monomial(P)                                   # 1 + (q+1)·x
    specialize_q(P, 1)                               # 1 + 2x (monomial)
    xq_mul(P, P)
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union
import logging

from .gaussian import structure_constant
from .intpoly import IntLike, IntPolyQ
from ..errors import BadArgs

logger = logging.getLogger(__name__)


class Basis(str, Enum):
    """x 방향 basis."""

    MONOMIAL = "monomial"
    XQ = "xq"


TermsLike = Union[Mapping[int, IntLike], Iterable[Tuple[int, IntLike]]]


@dataclass(frozen=True)
class BivarPoly:
    """
    Z[q][x] 원소 (sparse x-terms).

    Attributes:
        basis: MONOMIAL 또는 XQ
        terms: (x-degree, IntPolyQ 계수) 쌍, degree 오름차순, 영계수 없음
        q_value: 고정된 q 값 (XQ basis 전용, 없으면 None)
    """
    basis: Basis
    terms: Tuple[Tuple[int, IntPolyQ], ...] = ()
    q_value: Optional[int] = None

    def __post_init__(self):
        basis = Basis(self.basis)
        q_value = self.q_value if basis is Basis.XQ else None
        raw = self.terms.items() if isinstance(self.terms, Mapping) else self.terms

        merged: Dict[int, IntPolyQ] = {}
        for d, c in raw:
            d = int(d)
            if d < 0:
                raise BadArgs(f"negative x-degree {d}")
            coeff = IntPolyQ.coerce(c)
            if q_value is not None and not coeff.is_constant():
                coeff = IntPolyQ.constant(coeff.evaluate(q_value))
            merged[d] = merged.get(d, IntPolyQ.zero()) + coeff

        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "q_value", q_value)
        object.__setattr__(
            self,
            "terms",
            tuple((d, c) for d, c in sorted(merged.items()) if not c.is_zero()),
        )

    # ----- 생성자 -----
    @classmethod
    def monomial(cls, terms: TermsLike) -> "BivarPoly":
        return cls(Basis.MONOMIAL, terms)

    @classmethod
    def xq(cls, terms: TermsLike, q_value: Optional[int] = None) -> "BivarPoly":
        return cls(Basis.XQ, terms, q_value)

    @classmethod
    def one(cls, basis: Basis = Basis.XQ, q_value: Optional[int] = None) -> "BivarPoly":
        return cls(basis, {0: 1}, q_value)

    @classmethod
    def x_power(cls, d: int) -> "BivarPoly":
        return cls(Basis.MONOMIAL, {d: 1})

    @classmethod
    def xq_power(cls, d: int, q_value: Optional[int] = None) -> "BivarPoly":
        return cls(Basis.XQ, {d: 1}, q_value)

    # ----- 조회 -----
    def term_dict(self) -> Dict[int, IntPolyQ]:
        return dict(self.terms)

    def coefficient(self, d: int) -> IntPolyQ:
        for deg, c in self.terms:
            if deg == d:
                return c
        return IntPolyQ.zero()

    @property
    def degree(self) -> int:
        """x-degree (영다항식은 -1)."""
        return self.terms[-1][0] if self.terms else -1

    def is_zero(self) -> bool:
        return not self.terms

    # ----- 산술 -----
    def _check_compatible(self, other: "BivarPoly") -> None:
        if self.basis is not other.basis or self.q_value != other.q_value:
            raise BadArgs(
                f"incompatible operands: {self.basis.value}/q={self.q_value} "
                f"vs {other.basis.value}/q={other.q_value}"
            )

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        self._check_compatible(other)
        return BivarPoly(self.basis, self.terms + other.terms, self.q_value)

    def __neg__(self) -> "BivarPoly":
        return BivarPoly(self.basis, tuple((d, -c) for d, c in self.terms), self.q_value)

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        return self + (-other)

    def scale(self, c: IntLike) -> "BivarPoly":
        c = IntPolyQ.coerce(c)
        return BivarPoly(self.basis, tuple((d, c * v) for d, v in self.terms), self.q_value)

    def __mul__(self, other: "BivarPoly") -> "BivarPoly":
        self._check_compatible(other)
        if self.basis is Basis.XQ:
            return xq_mul(self, other)
        products = [
            (d + e, a * b) for d, a in self.terms for e, b in other.terms
        ]
        return BivarPoly(Basis.MONOMIAL, products)

    # ----- 표현 -----
    def _mono_text(self, d: int) -> str:
        if d == 0:
            return ""
        if self.basis is Basis.XQ:
            return f"xq^{d}"
        return "x" if d == 1 else f"x^{d}"

    def _mono_latex(self, d: int) -> str:
        if d == 0:
            return ""
        if self.basis is Basis.XQ:
            return f"x_q^{{{d}}}"
        return "x" if d == 1 else f"x^{{{d}}}"

    def _render(self, latex: bool) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, (d, c) in enumerate(self.terms):
            mono = self._mono_latex(d) if latex else self._mono_text(d)
            negative = False
            if c.is_constant():
                value = c.constant_value()
                negative = value < 0
                mag = abs(value)
                if not mono:
                    body = str(mag)
                elif mag == 1:
                    body = mono
                else:
                    body = f"{mag} {mono}" if latex else f"{mag}*{mono}"
            else:
                inner = c.to_latex() if latex else str(c)
                wrapped = f"\\left({inner}\\right)" if latex else f"({inner})"
                if not mono:
                    body = wrapped
                else:
                    body = f"{wrapped} {mono}" if latex else f"{wrapped}*{mono}"
            if idx == 0:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts)

    def to_text(self) -> str:
        """오름차순 텍스트: "1 + (q + 1)*xq^1", "1 + 2*x + x^2"."""
        return self._render(latex=False)

    def to_latex(self) -> str:
        return self._render(latex=True)

    def __str__(self) -> str:
        return self.to_text()


# x_q^d 는 x-basis 와 q 값 모두에 대해 동일하므로 d 단위로 캐시
@lru_cache(maxsize=None)
def xq_expand(d: int) -> BivarPoly:
    """
    x_q^d 를 monomial basis로 전개.

    x_q^d = Π_{j<d} (x - (q^j - 1))
    """
    if d < 0:
        raise BadArgs(f"negative degree {d}")
    coeffs: Dict[int, IntPolyQ] = {0: IntPolyQ.one()}
    for j in range(d):
        root = IntPolyQ.q_power_minus_one(j)
        nxt: Dict[int, IntPolyQ] = {}
        for deg, c in coeffs.items():
            nxt[deg + 1] = nxt.get(deg + 1, IntPolyQ.zero()) + c
            nxt[deg] = nxt.get(deg, IntPolyQ.zero()) - c * root
        coeffs = nxt
    return BivarPoly.monomial(coeffs)


def _expand_coeffs(d: int, q_value: Optional[int]) -> Dict[int, IntPolyQ]:
    terms = xq_expand(d).term_dict()
    if q_value is None:
        return terms
    return {k: IntPolyQ.constant(v.evaluate(q_value)) for k, v in terms.items()}


def to_monomial(p: BivarPoly) -> BivarPoly:
    """XQ → MONOMIAL (정확한 선형 basis 변환)."""
    if p.basis is Basis.MONOMIAL:
        return p
    pieces = []
    for d, c in p.terms:
        for k, v in _expand_coeffs(d, p.q_value).items():
            pieces.append((k, c * v))
    return BivarPoly.monomial(pieces)


def from_monomial(m: BivarPoly, q_value: Optional[int] = None) -> BivarPoly:
    """
    MONOMIAL → XQ.

    최고차 항부터 계수 c를 취하고 c·x_q^D 의 전개를 빼며 내려갑니다.

    Args:
        m: monomial basis 다항식
        q_value: 고정할 q 값 (None이면 기호 q)
    """
    if m.basis is Basis.XQ:
        return m
    remaining = m.term_dict()
    if q_value is not None:
        remaining = {d: IntPolyQ.constant(c.evaluate(q_value)) for d, c in remaining.items()}
    result: Dict[int, IntPolyQ] = {}
    while remaining:
        top = max(remaining)
        c = remaining.pop(top)
        if c.is_zero():
            continue
        result[top] = c
        for k, v in _expand_coeffs(top, q_value).items():
            if k == top:
                continue
            remaining[k] = remaining.get(k, IntPolyQ.zero()) - c * v
            if remaining[k].is_zero():
                del remaining[k]
    return BivarPoly.xq(result, q_value)


def _structure_constant_at(d: int, e: int, s: int, q_value: Optional[int]) -> IntPolyQ:
    c = structure_constant(d, e, s)
    return c if q_value is None else IntPolyQ.constant(c.evaluate(q_value))


def xq_mul(a: BivarPoly, b: BivarPoly) -> BivarPoly:
    """
    XQ basis 곱셈.

    x_q^d · x_q^e 규칙은 d >= e 에 대해서만 주어지므로 두 차수를 정렬한 뒤 적용합니다.
    """
    if a.basis is not Basis.XQ or b.basis is not Basis.XQ:
        raise BadArgs("xq_mul expects both operands in the xq basis")
    if a.q_value != b.q_value:
        raise BadArgs(f"q mismatch: {a.q_value} vs {b.q_value}")
    q_value = a.q_value
    pieces = []
    for d, ca in a.terms:
        for e, cb in b.terms:
            hi, lo = (d, e) if d >= e else (e, d)
            prod = ca * cb
            for s in range(lo + 1):
                pieces.append((hi + lo - s, prod * _structure_constant_at(hi, lo, s, q_value)))
    return BivarPoly.xq(pieces, q_value)


def _resolve_q(p: BivarPoly, q0: Optional[int]) -> Optional[int]:
    if p.q_value is not None:
        if q0 is not None and q0 != p.q_value:
            raise BadArgs(f"polynomial is fixed at q={p.q_value}, cannot evaluate at q={q0}")
        return p.q_value
    return q0


def evaluate(p: BivarPoly, q0: Optional[int], x0: int) -> int:
    """
    정확한 정수 평가 P(q0, x0).

    Raises:
        BadArgs: q가 필요한데 주어지지 않았거나 고정값과 다름
    """
    qv = _resolve_q(p, q0)
    total = 0
    for d, c in p.terms:
        if qv is None and not c.is_constant():
            raise BadArgs("q0 is required to evaluate a polynomial with Z[q] coefficients")
        coeff = c.evaluate(qv) if qv is not None else c.constant_value()
        if p.basis is Basis.MONOMIAL:
            mono = x0**d
        else:
            if qv is None and d > 1:
                raise BadArgs("q0 is required to evaluate the xq basis")
            mono = 1
            for j in range(d):
                mono *= x0 - ((qv**j if qv is not None else 1) - 1)
        total += coeff * mono
    return total


def specialize_q(p: BivarPoly, q0: int) -> BivarPoly:
    """
    q를 q0로 고정.

    XQ basis는 x_{q0}^d basis (q_value=q0)로 남고,
    q0 = 1이면 x_1^d = x^d 이므로 MONOMIAL basis로 돌려줍니다.
    """
    qv = _resolve_q(p, q0)
    constants = tuple((d, IntPolyQ.constant(c.evaluate(qv))) for d, c in p.terms)
    if p.basis is Basis.MONOMIAL or qv == 1:
        return BivarPoly.monomial(constants)
    return BivarPoly.xq(constants, qv)
