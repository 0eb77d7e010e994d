"""
Graph Catalog Tests.

테스트 실행:
    pytest src/isotropic_poly/tests/test_catalog.py -v
"""

import pytest

from isotropic_poly import GraphCatalog, q_independence_polynomial, ti_counts_brute
from isotropic_poly.altspace import graphical_space
from isotropic_poly.errors import BadArgs
from isotropic_poly.field import field_make
from isotropic_poly.graph import complete_graph, path_graph
from isotropic_poly.poly import IntPolyQ


@pytest.fixture
def catalog():
    """기본 카탈로그 fixture."""
    return GraphCatalog()


class TestGraphCatalog:
    """카탈로그 조회 테스트."""

    def test_defaults(self, catalog):
        """기본 그래프 목록."""
        assert catalog.graph_count == 11
        assert "P3" in catalog
        assert "P7" not in catalog
        assert catalog.names == sorted(catalog.names)

    def test_get(self, catalog):
        """이름으로 그래프 조회."""
        assert catalog.get("P3") == path_graph(3)
        assert catalog.get("K5") == complete_graph(5)
        assert catalog.get_entry("nope") is None

    def test_unknown_name(self, catalog):
        """없는 이름은 KeyError."""
        with pytest.raises(KeyError):
            catalog.get("P7")

    def test_expected_values_match_engine(self, catalog):
        """고정 기대값 == 기호 엔진 결과."""
        for name in catalog.names:
            expected = catalog.expected(name)
            if expected is None:
                continue
            assert q_independence_polynomial(catalog.get(name)).coefficients == expected

    @pytest.mark.parametrize("q", [2, 3])
    def test_expected_values_match_oracle(self, catalog, q):
        """고정 기대값을 q 에서 평가 == brute-force 계수."""
        for name in catalog.names:
            expected = catalog.expected(name)
            if expected is None:
                continue
            S = graphical_space(catalog.get(name), field_make(q))
            assert ti_counts_brute(S) == tuple(c.evaluate(q) for c in expected)

    def test_to_dict(self, catalog):
        """항목 직렬화."""
        assert catalog.get_entry("K2").to_dict() == {
            "name": "K2",
            "n": 2,
            "edges": [[1, 2]],
            "expected": [[1], [1, 1]],
        }
        assert "expected" not in catalog.get_entry("C5").to_dict()

    def test_custom_entries(self):
        """딕셔너리 리스트로 생성."""
        catalog = GraphCatalog([{"name": "tri", "n": 3, "edges": [[1, 2], [2, 3], [1, 3]]}])
        assert catalog.graph_count == 1
        assert catalog.get("tri") == complete_graph(3)

    def test_duplicate_name(self):
        """이름 중복 거부."""
        with pytest.raises(BadArgs):
            GraphCatalog([{"name": "a", "n": 1}, {"name": "a", "n": 2}])

    def test_missing_key(self):
        """필수 키 누락 거부."""
        with pytest.raises(BadArgs):
            GraphCatalog([{"name": "a"}])

    def test_from_yaml(self, tmp_path):
        """YAML 파일 로드 ("graphs" 키)."""
        pytest.importorskip("yaml")
        path = tmp_path / "graphs.yaml"
        path.write_text(
            "graphs:\n"
            "  - name: K2\n"
            "    n: 2\n"
            "    edges: [[1, 2]]\n"
            "    expected: [[1], [1, 1]]\n"
            "  - name: lonely\n"
            "    n: 1\n",
            encoding="utf-8",
        )
        catalog = GraphCatalog.from_yaml(str(path))
        assert catalog.names == ["K2", "lonely"]
        assert catalog.expected("K2") == (IntPolyQ.one(), IntPolyQ((1, 1)))

    def test_from_yaml_top_level_list(self, tmp_path):
        """최상위 리스트 YAML."""
        pytest.importorskip("yaml")
        path = tmp_path / "graphs.yaml"
        path.write_text("- name: P2\n  n: 2\n  edges: [[1, 2]]\n", encoding="utf-8")
        assert GraphCatalog.from_yaml(str(path)).get("P2") == complete_graph(2)

    def test_from_yaml_bad_format(self, tmp_path):
        """형식 오류 거부."""
        pytest.importorskip("yaml")
        path = tmp_path / "graphs.yaml"
        path.write_text("just a string\n", encoding="utf-8")
        with pytest.raises(BadArgs):
            GraphCatalog.from_yaml(str(path))
