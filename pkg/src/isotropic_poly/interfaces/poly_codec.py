"""
Polynomial Serialization.

BivarPoly ↔ JSON / text / LaTeX.

JSON 형식 (계수는 10진 문자열, 큰 정수 안전):
    {"basis": "xq", "terms": {"1": ["1", "1"]}, "q": 2}

- terms: x-degree → q 오름차순 계수 문자열 리스트
- q: 특수화된 q 값 (기호 q이면 생략)

출력은 degree 오름차순으로 고정되어 바이트 단위로 결정적입니다.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from ..poly.bivariate import Basis, BivarPoly
from ..poly.intpoly import IntPolyQ


class PolynomialDocument(BaseModel):
    """다항식 JSON 문서."""
    basis: Basis = Field(..., description="x-basis: monomial | xq")
    terms: Dict[str, List[str]] = Field(
        default_factory=dict, description="x-degree → q 오름차순 계수 (10진 문자열)"
    )
    q: Optional[int] = Field(None, description="특수화된 q 값")

    @field_validator("terms")
    @classmethod
    def _check_terms(cls, terms: Dict[str, List[str]]) -> Dict[str, List[str]]:
        for key, coeffs in terms.items():
            if not key.isdigit():
                raise ValueError(f"x-degree must be a non-negative decimal integer, got {key!r}")
            for c in coeffs:
                try:
                    int(c)
                except ValueError:
                    raise ValueError(f"coefficient {c!r} is not a decimal integer") from None
        return terms

    def to_poly(self) -> BivarPoly:
        terms = {int(d): IntPolyQ(tuple(int(c) for c in cs)) for d, cs in self.terms.items()}
        return BivarPoly(self.basis, terms, self.q)

    @classmethod
    def from_poly(cls, poly: BivarPoly) -> "PolynomialDocument":
        return cls(
            basis=poly.basis,
            terms={str(d): [str(c) for c in coeff.coeffs] for d, coeff in poly.terms},
            q=poly.q_value,
        )


def dumps_json(poly: BivarPoly) -> str:
    return PolynomialDocument.from_poly(poly).model_dump_json(exclude_none=True)


def loads_json(text: str) -> BivarPoly:
    """
    Raises:
        pydantic.ValidationError: 형식 오류
    """
    return PolynomialDocument.model_validate_json(text).to_poly()


def render_text(poly: BivarPoly) -> str:
    return poly.to_text()


def render_latex(poly: BivarPoly) -> str:
    return poly.to_latex()


def render(poly: BivarPoly, fmt: str) -> str:
    """fmt: text | json | latex"""
    if fmt == "json":
        return dumps_json(poly)
    if fmt == "latex":
        return render_latex(poly)
    return render_text(poly)
