"""
Alternating matrix space data models.

교대 행렬 공간과 부분공간 basis, (P, Q) stratum label.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from ..errors import BadArgs, RankDeficient, ShapeMismatch
from ..field.gfq import FieldSpec
from ..field.matrix import EchelonForm, FqMatrix, mat_transpose, rank


@dataclass(frozen=True)
class AltSpace:
    """
    F_q 위 n x n 교대 행렬들의 선형 span.

    altspace_make로 생성하면 generator가 교대 조건을 만족하고
    n^2 길이 벡터로서 선형독립임이 보장됩니다.

    Attributes:
        n: ambient dimension
        field: 유한체
        gens: generator 행렬 (선형독립)
    """
    n: int
    field: FieldSpec
    gens: Tuple[FqMatrix, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.gens)

    def stacked(self) -> np.ndarray:
        """(dim, n, n) 원소 코드 배열."""
        if not self.gens:
            return np.zeros((0, self.n, self.n), dtype=np.int64)
        return np.stack([g.array for g in self.gens])

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "q": self.field.q,
            "gens": [g.to_lists() for g in self.gens],
        }

    def __repr__(self) -> str:
        return f"AltSpace(n={self.n}, q={self.field.q}, dim={self.dim})"


@dataclass(frozen=True)
class SubspaceBasis:
    """
    F_q^n 의 dimension-i 부분공간을 열(column)로 span하는 n x i 행렬 T.

    Attributes:
        n: ambient dimension
        i: 부분공간 dimension
        T: full column rank n x i 행렬
    """
    n: int
    i: int
    T: FqMatrix

    def __post_init__(self):
        if self.T.shape != (self.n, self.i):
            raise ShapeMismatch(f"basis matrix must be {self.n}x{self.i}, got {self.T.shape}")
        if rank(self.T) != self.i:
            raise RankDeficient(f"basis columns are dependent (rank {rank(self.T)} < {self.i})")

    @property
    def field(self) -> FieldSpec:
        return self.T.field

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: List[List[int]], n: int) -> "SubspaceBasis":
        """열 벡터 목록으로 생성 (각 열은 길이 n)."""
        rows = FqMatrix.from_rows(field, columns, cols=n)
        return cls(n, len(columns), mat_transpose(rows))

    @classmethod
    def from_echelon(cls, ech: EchelonForm) -> "SubspaceBasis":
        """RREF 행 basis를 전치하여 생성."""
        basis = ech.basis()
        return cls(basis.cols, basis.rows, mat_transpose(basis))


@dataclass(frozen=True)
class PQLabel:
    """
    (P, Q) stratum label.

    Attributes:
        P: 사전순 최초 비영 Plücker 좌표의 행 집합 (1-based, 오름차순)
        Q: pivot이 아닌 비영 행 집합 (1-based, 오름차순)
    """
    P: Tuple[int, ...]
    Q: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "P", tuple(sorted(self.P)))
        object.__setattr__(self, "Q", tuple(sorted(self.Q)))
        if set(self.P) & set(self.Q):
            raise BadArgs(f"P and Q overlap: P={self.P}, Q={self.Q}")

    def __str__(self) -> str:
        return f"P={{{','.join(map(str, self.P))}}} Q={{{','.join(map(str, self.Q))}}}"
