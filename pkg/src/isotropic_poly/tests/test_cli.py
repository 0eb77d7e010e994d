"""
Command Line Tests.

테스트 실행:
    pytest src/isotropic_poly/tests/test_cli.py -v
"""

import json

import pytest

from isotropic_poly.altspace.oracle import IsotropicSubspaceOracle
from isotropic_poly.interfaces import (
    RunConfig,
    format_altspace,
    loads_json,
    parse_altspace,
    parse_graph,
    read_altspace,
    read_graph,
    write_altspace,
    write_graph,
)
from isotropic_poly.errors import NotAlternating, ParseError
from isotropic_poly.main import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_TOO_LARGE,
    main,
)


@pytest.fixture
def write_file(tmp_path):
    """tmp_path 에 파일을 쓰고 경로 문자열을 돌려주는 fixture."""

    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def k2_file(write_file):
    return write_file("k2.graph", "2 1\n1 2\n")


@pytest.fixture
def p3_file(write_file):
    return write_file("p3.graph", "# path\n3 2\n1 2\n\n2 3\n")


@pytest.fixture
def empty2_file(write_file):
    return write_file("empty2.graph", "2 0\n")


class TestGraphFormat:
    """그래프 파일 파싱 테스트."""

    def test_parse(self):
        """주석과 빈 줄 무시."""
        G = parse_graph("# c\n3 2\n\n1 2\n3 2\n")
        assert G.sorted_edges() == [(1, 2), (2, 3)]

    def test_edge_count_mismatch(self):
        """header 간선 수 불일치."""
        with pytest.raises(ParseError):
            parse_graph("3 2\n1 2\n")

    def test_invalid_edge_reports_line(self):
        """잘못된 간선은 줄 번호와 함께 보고."""
        with pytest.raises(ParseError) as exc:
            parse_graph("3 2\n1 2\n1 1\n", "g.txt")
        assert exc.value.line == 3
        assert str(exc.value).startswith("g.txt:3:")

    def test_duplicate_edge(self):
        """역순 중복 간선 거부."""
        with pytest.raises(ParseError) as exc:
            parse_graph("3 2\n1 2\n2 1\n")
        assert exc.value.line == 3

    def test_non_integer(self):
        """정수가 아닌 토큰 거부."""
        with pytest.raises(ParseError):
            parse_graph("3 x\n")

    def test_write_and_read(self, tmp_path):
        """파일 쓰기 후 읽기."""
        G = parse_graph("4 3\n1 2\n2 3\n3 4\n")
        path = tmp_path / "p4.graph"
        write_graph(G, path)
        assert path.read_text() == "4 3\n1 2\n2 3\n3 4\n"
        assert read_graph(path) == G


class TestAltspaceFormat:
    """행렬 공간 파일 테스트."""

    def test_parse_and_format(self):
        """블록 파싱 후 같은 텍스트로 출력."""
        text = "3 3 2\n\n0 1 0\n2 0 0\n0 0 0\n\n0 0 0\n0 0 1\n0 2 0\n"
        S = parse_altspace(text)
        assert (S.n, S.field.q, S.dim) == (3, 3, 2)
        assert format_altspace(S) == text

    def test_unsupported_q(self):
        """미지원 q 는 ParseError."""
        with pytest.raises(ParseError):
            parse_altspace("2 6 0\n")

    def test_block_count(self):
        """header 행렬 수 불일치."""
        with pytest.raises(ParseError):
            parse_altspace("2 2 2\n\n0 1\n1 0\n")

    def test_entry_range(self):
        """원소 코드 범위 검사."""
        with pytest.raises(ParseError):
            parse_altspace("2 2 1\n\n0 2\n2 0\n")

    def test_not_alternating(self):
        """교대 조건 위반은 NotAlternating."""
        with pytest.raises(NotAlternating):
            parse_altspace("2 3 1\n\n0 1\n1 0\n")

    def test_write_and_read(self, tmp_path):
        """파일 쓰기 후 읽기."""
        text = "3 3 1\n\n0 1 0\n2 0 0\n0 0 0\n"
        path = tmp_path / "s.alt"
        write_altspace(parse_altspace(text), path)
        assert path.read_text() == text
        assert format_altspace(read_altspace(path)) == text

    def test_zero_dimensional_ambient(self):
        """n = 0 공간."""
        assert parse_altspace("0 2 0\n").n == 0


class TestRunConfig:
    """RunConfig 검증 테스트."""

    def test_ti_brute_requires_q(self):
        """ti-brute 는 --q 필수."""
        with pytest.raises(ValueError):
            RunConfig(command="ti-brute", inputs=["a.alt"])

    def test_unsupported_q(self):
        """지원하지 않는 q 거부."""
        with pytest.raises(ValueError):
            RunConfig(command="verify", inputs=["a.graph"], q=6)

    def test_expand_q_is_specialization(self):
        """expand 의 --q 는 임의 정수."""
        config = RunConfig(command="expand", inputs=["p.json"], q=1)
        assert config.q == 1

    def test_exactly_one_source(self):
        """파일과 --named 를 동시에 주면 거부."""
        with pytest.raises(ValueError):
            RunConfig(command="qindep", inputs=["a.graph"], named="P3")

    def test_with_only_for_verify(self):
        """--with 는 verify 전용."""
        with pytest.raises(ValueError):
            RunConfig(command="qindep", inputs=["a.graph"], with_graph="b.graph")

    def test_uses_graph(self):
        """그래프 입력 판정."""
        assert RunConfig(command="ti-brute", named="P3", q=2).uses_graph
        assert not RunConfig(command="rank-loci", inputs=["a.alt"]).uses_graph


class TestMain:
    """CLI 명령 테스트."""

    def test_qindep(self, k2_file, capsys):
        """K_2 → "1 + (q + 1)*xq^1"."""
        assert main(["qindep", k2_file]) == EXIT_OK
        assert capsys.readouterr().out == "1 + (q + 1)*xq^1\n"

    def test_indep(self, empty2_file, capsys):
        """empty_2 → "1 + 2*x + x^2"."""
        assert main(["indep", empty2_file]) == EXIT_OK
        assert capsys.readouterr().out == "1 + 2*x + x^2\n"

    def test_latex(self, k2_file, capsys):
        """LaTeX 출력."""
        assert main(["qindep", "--format", "latex", k2_file]) == EXIT_OK
        assert capsys.readouterr().out == "1 + \\left(q + 1\\right) x_q^{1}\n"

    def test_verify(self, p3_file, capsys):
        """verify --q 2 on P_3: 종료 코드 0."""
        assert main(["verify", "--q", "2", p3_file]) == EXIT_OK
        out = capsys.readouterr().out
        assert "p3 q=2: c = (1, 7, 1) symbolic == brute" in out
        assert out.splitlines()[-1] == "PASS"

    def test_verify_named_json(self, capsys):
        """카탈로그 그래프 verify, JSON 출력."""
        assert main(["verify", "--q", "3", "--named", "P3", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["passed"] is True
        assert data["reports"][0]["label"] == "P3"
        assert data["reports"][0]["brute"] == ["1", "13", "1"]

    def test_verify_with_second_graph(self, p3_file, k2_file, capsys):
        """--with 로 곱 검사 상대 지정."""
        assert main(["verify", "--q", "2", "--with", k2_file, p3_file]) == EXIT_OK
        assert "TI(p3 + k2)" in capsys.readouterr().out

    def test_ti_brute_graphical(self, p3_file, capsys):
        """graph 파일을 B_G 로: q=3 에서 1 + 13 x_q + x_q^2."""
        assert main(["ti-brute", "--graphical", "--q", "3", p3_file]) == EXIT_OK
        assert capsys.readouterr().out == "1 + 13*xq^1 + xq^2\n"

    def test_ti_brute_space_file(self, write_file, capsys):
        """행렬 공간 파일 입력."""
        path = write_file("k2.alt", "2 2 1\n\n0 1\n1 0\n")
        assert main(["ti-brute", "--q", "2", path]) == EXIT_OK
        assert capsys.readouterr().out == "1 + 3*xq^1\n"

    def test_ti_brute_q_conflict(self, write_file):
        """파일의 q 와 --q 가 다르면 입력 오류."""
        path = write_file("k2.alt", "2 2 1\n\n0 1\n1 0\n")
        assert main(["ti-brute", "--q", "3", path]) == EXIT_INPUT_ERROR

    def test_guard_exit_code(self, p3_file, capsys):
        """guard 초과 시 종료 코드 3."""
        code = main(["ti-brute", "--graphical", "--q", "3", "--guard-limit", "10", p3_file])
        assert code == EXIT_TOO_LARGE
        assert "error:" in capsys.readouterr().err

    def test_missing_q(self, p3_file):
        """ti-brute 에 --q 가 없으면 종료 코드 2."""
        assert main(["ti-brute", "--graphical", p3_file]) == EXIT_INPUT_ERROR

    def test_bad_graph_file(self, write_file, capsys):
        """파싱 오류는 종료 코드 2."""
        path = write_file("bad.graph", "2 1\n1 1\n")
        assert main(["qindep", path]) == EXIT_INPUT_ERROR
        assert "bad.graph:2:" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        """없는 파일은 종료 코드 2."""
        assert main(["qindep", str(tmp_path / "nope.graph")]) == EXIT_INPUT_ERROR

    def test_unknown_named(self):
        """카탈로그에 없는 이름은 종료 코드 2."""
        assert main(["qindep", "--named", "P99"]) == EXIT_INPUT_ERROR

    def test_json_then_expand(self, p3_file, tmp_path, capsys):
        """qindep JSON → expand --to monomial --q 1 = I(P_3, x)."""
        poly_path = tmp_path / "p3.json"
        assert main(["qindep", "--format", "json", "--out", str(poly_path), p3_file]) == EXIT_OK
        assert str(loads_json(poly_path.read_text())) == "1 + (q^2 + q + 1)*xq^1 + xq^2"

        assert main(["expand", "--to", "monomial", "--q", "1", str(poly_path)]) == EXIT_OK
        assert capsys.readouterr().out == "1 + 3*x + x^2\n"

        assert main(["expand", "--to", "monomial", str(poly_path)]) == EXIT_OK
        assert capsys.readouterr().out == "1 + (q^2 + 2)*x + x^2\n"

    def test_expand_specialize_only(self, k2_file, tmp_path, capsys):
        """--q 만 주면 x_{q0} basis 유지."""
        poly_path = tmp_path / "k2.json"
        main(["qindep", "--format", "json", "--out", str(poly_path), k2_file])
        assert main(["expand", "--q", "2", "--format", "json", str(poly_path)]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data == {"basis": "xq", "terms": {"0": ["1"], "1": ["3"]}, "q": 2}

    def test_direct_sum(self, write_file, capsys):
        """두 행렬 공간의 direct sum 출력."""
        a = write_file("a.alt", "2 3 1\n\n0 1\n2 0\n")
        b = write_file("b.alt", "1 3 0\n")
        assert main(["direct-sum", a, b]) == EXIT_OK
        S = parse_altspace(capsys.readouterr().out)
        assert (S.n, S.dim) == (3, 1)
        assert S.gens[0].to_lists() == [[0, 1, 0], [2, 0, 0], [0, 0, 0]]

    def test_direct_sum_out(self, write_file, tmp_path, capsys):
        """--out 이면 행렬 공간 파일로 기록, stdout 은 비어 있음."""
        a = write_file("a.alt", "2 3 1\n\n0 1\n2 0\n")
        b = write_file("b.alt", "1 3 0\n")
        out = tmp_path / "sum.alt"
        assert main(["direct-sum", "--out", str(out), a, b]) == EXIT_OK
        assert capsys.readouterr().out == ""
        S = read_altspace(out)
        assert (S.n, S.field.q, S.dim) == (3, 3, 1)
        assert out.read_text() == format_altspace(S)

    def test_verify_passes_workers(self, p3_file, monkeypatch):
        """verify --workers 값이 oracle 까지 전달됨."""
        seen = []

        class _RecordingOracle(IsotropicSubspaceOracle):
            def __init__(self, *args, **kwargs):
                super().__init__(*args, **kwargs)
                seen.append(self.workers)

        monkeypatch.setattr(
            "isotropic_poly.engine.validator.IsotropicSubspaceOracle", _RecordingOracle
        )
        assert main(["verify", "--q", "2", "--workers", "2", p3_file]) == EXIT_OK
        assert seen == [2, 2]

    def test_catalog_without_yaml(self, write_file, monkeypatch, capsys):
        """PyYAML 이 없으면 --catalog 는 종료 코드 2."""
        monkeypatch.setattr("isotropic_poly.catalog.graph_catalog.HAS_YAML", False)
        path = write_file("graphs.yaml", "- name: P2\n  n: 2\n  edges: [[1, 2]]\n")
        assert main(["qindep", "--named", "P2", "--catalog", path]) == EXIT_INPUT_ERROR
        assert "PyYAML" in capsys.readouterr().err

    def test_rank_loci(self, k2_file, capsys):
        """graphical K_2, q=2: e=0 하나, e=1 셋."""
        assert main(["rank-loci", "--graphical", "--q", "2", k2_file]) == EXIT_OK
        assert capsys.readouterr().out == "0 1\n1 3\n"

    def test_version(self, capsys):
        """--version."""
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert "isotropic-poly 1.0.0" in capsys.readouterr().out
