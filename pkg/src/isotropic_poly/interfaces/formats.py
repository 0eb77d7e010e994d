"""
Graph and Matrix-Space File Formats.

그래프 파일:
    line 1: "n m"
    이후 m 줄: "u v" (1-based, u < v)
    빈 줄과 '#'로 시작하는 줄은 무시

교대 행렬 공간 파일:
    line 1: "n q k"
    이후 빈 줄로 구분된 k 개 블록, 각 블록은 n 개 정수 n 줄 (원소 코드, [0, q))
    '#' 줄은 무시

사용 예시:
    G = read_graph("p3.graph")
    S = read_altspace("space.alt")
    write_altspace(direct_sum(S, S), "double.alt")
"""

from pathlib import Path
from typing import List, Tuple, Union
import logging

from ..altspace.models import AltSpace
from ..altspace.space import altspace_make
from ..errors import IsotropicPolyError, NotAPrimePower, ParseError
from ..field.gfq import field_make
from ..graph.graph import Graph, graph_make

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

# (1-based 줄 번호, 내용)
NumberedLine = Tuple[int, str]


def _is_comment(line: str) -> bool:
    return line.strip().startswith("#")


def _ints(path: str, lineno: int, text: str, count: int) -> List[int]:
    tokens = text.split()
    if len(tokens) != count:
        raise ParseError(path, lineno, f"expected {count} integers, got {len(tokens)}")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(path, lineno, f"non-integer token in {text.strip()!r}") from None


# ========== 그래프 ==========

def parse_graph(text: str, path: str = "<string>") -> Graph:
    """
    그래프 파일 내용 파싱.

    Raises:
        ParseError: 형식 오류 (간선 검증 오류 포함, 줄 번호 보고)
    """
    lines: List[NumberedLine] = [
        (no, line)
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not _is_comment(line)
    ]
    if not lines:
        raise ParseError(path, None, "empty graph file")
    header_no, header = lines[0]
    n, m = _ints(path, header_no, header, 2)
    if n < 0 or m < 0:
        raise ParseError(path, header_no, "n and m must be non-negative")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else None
        raise ParseError(path, where, f"header declares {m} edges, found {len(body)}")

    edges: List[Tuple[int, int]] = []
    seen = set()
    for no, line in body:
        u, v = _ints(path, no, line, 2)
        try:
            graph_make(n, [(u, v)])
        except IsotropicPolyError as e:
            raise ParseError(path, no, str(e)) from e
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(path, no, f"edge {key} listed twice")
        seen.add(key)
        edges.append((u, v))
    logger.debug(f"parsed graph {path}: n={n}, m={m}")
    return graph_make(n, edges)


def format_graph(G: Graph) -> str:
    lines = [f"{G.n} {len(G.edges)}"]
    lines.extend(f"{u} {v}" for u, v in G.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path: PathLike) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"), str(path))


def write_graph(G: Graph, path: PathLike) -> None:
    Path(path).write_text(format_graph(G), encoding="utf-8")


# ========== 교대 행렬 공간 ==========

def parse_altspace(text: str, path: str = "<string>") -> AltSpace:
    """
    교대 행렬 공간 파일 내용 파싱.

    1. header "n q k" 읽기 (q는 지원 field order)
    2. 빈 줄 기준으로 블록 분리
    3. 블록별 n x n 정수 행렬 검증
    4. altspace_make 로 교대 조건 검사

    Raises:
        ParseError: 형식 오류
        NotAlternating: 교대 조건 위반
    """
    raw = [
        (no, line)
        for no, line in enumerate(text.splitlines(), start=1)
        if not _is_comment(line)
    ]
    content = [(no, line) for no, line in raw if line.strip()]
    if not content:
        raise ParseError(path, None, "empty matrix-space file")
    header_no, header = content[0]
    n, q, k = _ints(path, header_no, header, 3)
    if n < 0 or k < 0:
        raise ParseError(path, header_no, "n and k must be non-negative")
    try:
        field = field_make(q)
    except NotAPrimePower as e:
        raise ParseError(path, header_no, str(e)) from e

    # 블록 분리
    blocks: List[List[NumberedLine]] = []
    current: List[NumberedLine] = []
    for no, line in raw:
        if no <= header_no:
            continue
        if line.strip():
            current.append((no, line))
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)

    # n = 0 이면 블록은 비어 있음
    if n == 0:
        blocks = [[] for _ in range(k)]
    if len(blocks) != k:
        raise ParseError(path, header_no, f"header declares {k} matrices, found {len(blocks)}")

    matrices = []
    for block in blocks:
        if len(block) != n:
            where = block[0][0] if block else header_no
            raise ParseError(path, where, f"matrix block has {len(block)} rows, expected {n}")
        rows = []
        for no, line in block:
            row = _ints(path, no, line, n)
            if any(not 0 <= v < q for v in row):
                raise ParseError(path, no, f"entries must lie in [0, {q})")
            rows.append(row)
        matrices.append(rows)

    logger.debug(f"parsed matrix space {path}: n={n}, q={q}, k={k}")
    return altspace_make(n, field, matrices)


def format_altspace(S: AltSpace) -> str:
    lines = [f"{S.n} {S.field.q} {S.dim}"]
    for g in S.gens:
        lines.append("")
        lines.extend(" ".join(str(v) for v in row) for row in g.to_lists())
    return "\n".join(lines) + "\n"


def read_altspace(path: PathLike) -> AltSpace:
    return parse_altspace(Path(path).read_text(encoding="utf-8"), str(path))


def write_altspace(S: AltSpace, path: PathLike) -> None:
    Path(path).write_text(format_altspace(S), encoding="utf-8")
