"""
Named Graph Catalog.

이름으로 조회하는 그래프 목록과 회귀 검증용 기대값.

지원 형식:
- YAML 파일 로드
- 딕셔너리 리스트 직접 초기화
- 기본 그래프 내장 (K2, K3, K5, P3, P4, C4, C5, empty2, empty3, star4, single)

expected 는 I(G, x, q)의 계수 c_i(q) 목록이며,
각 계수는 q 오름차순 정수 리스트입니다 ([1, 1] = 1 + q).

사용 예시:
    catalog = GraphCatalog.from_yaml("graphs.yaml")
    G = catalog.get("P3")
    catalog.expected("P3")     # (1, q^2 + q + 1, 1)
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple
import logging

try:
    import yaml
    HAS_YAML = True
except ImportError:
    HAS_YAML = False

from ..errors import BadArgs
from ..graph.graph import Graph, graph_make
from ..poly.intpoly import IntPolyQ

logger = logging.getLogger(__name__)


# 기본 그래프 (1-based 간선)
DEFAULT_GRAPHS: List[Dict] = [
    # 완전 그래프
    {"name": "K2", "n": 2, "edges": [[1, 2]], "expected": [[1], [1, 1]]},
    {"name": "K3", "n": 3, "edges": [[1, 2], [1, 3], [2, 3]]},
    {
        "name": "K5",
        "n": 5,
        "edges": [[u, v] for u in range(1, 6) for v in range(u + 1, 6)],
    },

    # 경로 / 사이클
    {"name": "P3", "n": 3, "edges": [[1, 2], [2, 3]], "expected": [[1], [1, 1, 1], [1]]},
    {"name": "P4", "n": 4, "edges": [[1, 2], [2, 3], [3, 4]]},
    {"name": "C4", "n": 4, "edges": [[1, 2], [2, 3], [3, 4], [1, 4]]},
    {"name": "C5", "n": 5, "edges": [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]]},

    # 간선 없는 그래프
    {"name": "empty2", "n": 2, "edges": [], "expected": [[1], [1, 1], [1]]},
    {"name": "empty3", "n": 3, "edges": []},
    {"name": "single", "n": 1, "edges": [], "expected": [[1], [1]]},

    # 별 그래프 (중심 1)
    {"name": "star4", "n": 4, "edges": [[1, 2], [1, 3], [1, 4]]},
]


@dataclass(frozen=True)
class CatalogEntry:
    """
    카탈로그 항목.

    Attributes:
        name: 그래프 이름
        graph: 그래프
        expected: 고정된 c_i(q) 기대값 (없으면 None)
    """
    name: str
    graph: Graph
    expected: Optional[Tuple[IntPolyQ, ...]] = None

    def to_dict(self) -> Dict:
        data = {
            "name": self.name,
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.sorted_edges()],
        }
        if self.expected is not None:
            data["expected"] = [list(c.coeffs) for c in self.expected]
        return data


class GraphCatalog:
    """
    이름 → 그래프 카탈로그.

    Attributes:
        _entries: {name: CatalogEntry}
    """

    def __init__(self, entries: Optional[List[Dict]] = None):
        """
        Args:
            entries: 그래프 정의 리스트. None이면 기본 그래프 사용.

        Raises:
            BadArgs: 이름 중복 또는 필수 키 누락
        """
        self._entries: Dict[str, CatalogEntry] = {}

        if entries is None:
            entries = DEFAULT_GRAPHS

        for e in entries:
            if "name" not in e or "n" not in e:
                raise BadArgs(f"catalog entry needs 'name' and 'n': {e}")
            name = str(e["name"])
            if name in self._entries:
                raise BadArgs(f"duplicate catalog entry {name!r}")
            expected = e.get("expected")
            self._entries[name] = CatalogEntry(
                name=name,
                graph=graph_make(int(e["n"]), [tuple(pair) for pair in e.get("edges", [])]),
                expected=tuple(IntPolyQ(tuple(c)) for c in expected) if expected else None,
            )

        logger.info(f"GraphCatalog initialized with {len(self._entries)} graphs")

    @classmethod
    def from_yaml(cls, yaml_path: str) -> "GraphCatalog":
        """
        YAML 파일에서 카탈로그 생성.

        Args:
            yaml_path: YAML 파일 경로 ("graphs" 키 또는 최상위 리스트)

        Raises:
            ImportError: PyYAML이 설치되지 않음
            FileNotFoundError: 파일 없음
            BadArgs: 형식 오류
        """
        if not HAS_YAML:
            raise ImportError("PyYAML is required to load YAML files. Install with: pip install pyyaml")

        with open(yaml_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)

        if isinstance(data, dict) and "graphs" in data:
            entries = data["graphs"]
        elif isinstance(data, list):
            entries = data
        else:
            raise BadArgs(f"Invalid YAML format: expected 'graphs' key or list, got {type(data)}")

        return cls(entries)

    def get(self, name: str) -> Graph:
        """
        Raises:
            KeyError: 등록되지 않은 이름
        """
        if name not in self._entries:
            raise KeyError(f"unknown graph {name!r}; known: {', '.join(self.names)}")
        return self._entries[name].graph

    def get_entry(self, name: str) -> Optional[CatalogEntry]:
        return self._entries.get(name)

    def expected(self, name: str) -> Optional[Tuple[IntPolyQ, ...]]:
        entry = self._entries.get(name)
        return entry.expected if entry else None

    @property
    def names(self) -> List[str]:
        return sorted(self._entries)

    @property
    def graph_count(self) -> int:
        return len(self._entries)

    def __contains__(self, name: str) -> bool:
        return name in self._entries
