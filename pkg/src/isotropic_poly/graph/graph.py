"""
Finite simple graphs on {1..n}.

정점 1..n 위의 단순 그래프와 독립집합 열거.

표현:
- edges: (u, v), u < v 쌍의 frozenset (1-based)
- adjacency: 정점별 이웃 bitmask (정점 v ↔ bit v-1)

독립집합 열거는 branch-and-prune 재귀입니다.
가장 작은 후보 정점을 먼저 포함(include)한 뒤 제외(exclude)하며,
남은 후보 수가 필요한 크기에 못 미치면 가지를 버립니다.
포함을 먼저 시도하므로 출력은 사전순입니다.

사용 예시:
    G = graph_make(3, [(1, 2), (2, 3)])      # P_3
    independence_counts(G)                     # (1, 3, 1)
    list(independent_sets(G, 2))               # [(1, 3)]
    str(independence_polynomial(G))            # "1 + 3*x + x^2"
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple
import logging

import networkx as nx

from ..errors import BadArgs, DuplicateEdge, LoopEdge, VertexOutOfRange
from ..poly.bivariate import BivarPoly

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    """1-based 정점 집합 → bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> Tuple[int, ...]:
    """bitmask → 오름차순 1-based 정점 tuple."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """
    단순 무향 그래프 (불변).

    graph_make로 생성하세요. 생성자는 edges가 이미 검증되었다고 가정합니다.

    Attributes:
        n: 정점 수
        edges: (u, v), 1 <= u < v <= n
        adjacency: 정점 v의 이웃 bitmask가 index v-1에 저장
    """
    n: int
    edges: FrozenSet[Edge] = frozenset()
    adjacency: Tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        object.__setattr__(self, "edges", frozenset(self.edges))
        object.__setattr__(self, "adjacency", tuple(adj))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return vertices_of(self.adjacency[v - 1])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u - 1] >> (v - 1) & 1)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        return all(not (self.adjacency[v - 1] & m) for v in vertices_of(m))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def graph_make(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    검증된 그래프 생성.

    역순 쌍 (v, u)는 (u, v)로 정규화합니다.

    Raises:
        LoopEdge: u == v
        DuplicateEdge: 같은 간선이 두 번 이상
        VertexOutOfRange: 1..n 밖의 정점
    """
    if n < 0:
        raise BadArgs(f"vertex count must be >= 0, got {n}")
    seen = set()
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        for w in (u, v):
            if not 1 <= w <= n:
                raise VertexOutOfRange(f"vertex {w} outside 1..{n}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise DuplicateEdge(f"edge {e} listed twice")
        seen.add(e)
    return Graph(n, frozenset(seen))


def _check_vertices(G: Graph, vertices: Iterable[int]) -> Tuple[int, ...]:
    out = tuple(sorted(set(int(v) for v in vertices)))
    for v in out:
        if not 1 <= v <= G.n:
            raise VertexOutOfRange(f"vertex {v} outside 1..{G.n}")
    return out


# ========== 독립집합 ==========

def _extend(G: Graph, chosen: List[int], candidates: int, need: int) -> Iterator[Tuple[int, ...]]:
    if need == 0:
        yield tuple(chosen)
        return
    while candidates and popcount(candidates) >= need:
        low = candidates & -candidates
        v = low.bit_length()
        candidates ^= low
        chosen.append(v)
        yield from _extend(G, chosen, candidates & ~G.adjacency[v - 1], need - 1)
        chosen.pop()


def independent_sets(G: Graph, i: int) -> Iterator[Tuple[int, ...]]:
    """
    크기 i 독립집합을 사전순으로 생성.

    Args:
        G: 그래프
        i: 집합 크기

    Yields:
        오름차순 1-based 정점 tuple
    """
    if i < 0:
        return
    yield from _extend(G, [], G.full_mask, i)


def _count_all(G: Graph, candidates: int, size: int, counts: List[int]) -> None:
    while candidates:
        low = candidates & -candidates
        v = low.bit_length()
        candidates ^= low
        if len(counts) == size + 1:
            counts.append(0)
        counts[size + 1] += 1
        _count_all(G, candidates & ~G.adjacency[v - 1], size + 1, counts)


def independence_counts(G: Graph) -> Tuple[int, ...]:
    """(c_0, c_1, ..., c_α), c_0 = 1."""
    counts = [1]
    _count_all(G, G.full_mask, 0, counts)
    logger.debug(f"independence counts n={G.n}: {counts}")
    return tuple(counts)


def independence_number(G: Graph) -> int:
    return len(independence_counts(G)) - 1


def independence_polynomial(G: Graph) -> BivarPoly:
    """I(G, x) = Σ c_i x^i (monomial basis)."""
    return BivarPoly.monomial(enumerate(independence_counts(G)))


# ========== 부분그래프 / 연결성분 ==========

def induced_subgraph(G: Graph, S: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """
    G[S].

    Returns:
        (부분그래프, label_map) - 새 정점 j의 원래 label은 label_map[j-1]

    Raises:
        VertexOutOfRange: S에 1..n 밖의 정점
    """
    labels = _check_vertices(G, S)
    position = {v: j + 1 for j, v in enumerate(labels)}
    edges = [
        (position[u], position[v])
        for u, v in G.edges
        if u in position and v in position
    ]
    return graph_make(len(labels), edges), labels


def component_masks(G: Graph, mask: int) -> List[int]:
    """G[mask]의 연결성분 bitmask 목록, 최소 정점 순."""
    comps = []
    remaining = mask
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= G.adjacency[low.bit_length() - 1]
                f ^= low
            frontier = reach & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def connected_components(G: Graph) -> List[Tuple[int, ...]]:
    """정점 분할. 각 성분은 오름차순, 성분 목록은 최소 정점 순."""
    return [vertices_of(m) for m in component_masks(G, G.full_mask)]


# ========== 구성 ==========

def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    """G1 ⊔ G2. G2의 정점은 n1만큼 이동합니다."""
    shift = G1.n
    edges = list(G1.edges) + [(u + shift, v + shift) for u, v in G2.edges]
    return Graph(G1.n + G2.n, frozenset(edges))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """
    정점 v를 perm[v-1]로 옮긴 그래프.

    Raises:
        BadArgs: perm이 1..n의 순열이 아님
    """
    if sorted(perm) != list(G.vertices):
        raise BadArgs(f"not a permutation of 1..{G.n}: {list(perm)}")
    return graph_make(G.n, [(perm[u - 1], perm[v - 1]) for u, v in G.edges])


def complete_graph(n: int) -> Graph:
    return graph_make(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def path_graph(n: int) -> Graph:
    return graph_make(n, [(v, v + 1) for v in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadArgs(f"cycle needs n >= 3, got {n}")
    return graph_make(n, [(v, v + 1) for v in range(1, n)] + [(1, n)])


def empty_graph(n: int) -> Graph:
    return graph_make(n, [])


def star_graph(n: int) -> Graph:
    """정점 1이 중심, 나머지 n-1개가 잎."""
    return graph_make(n, [(1, v) for v in range(2, n + 1)])


def to_networkx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(G.vertices)
    g.add_edges_from(G.sorted_edges())
    return g


def from_networkx(g: nx.Graph) -> Graph:
    """노드를 정렬 순서대로 1..n에 대응시켜 변환."""
    nodes = sorted(g.nodes())
    index = {node: j + 1 for j, node in enumerate(nodes)}
    return graph_make(len(nodes), [(index[u], index[v]) for u, v in g.edges()])
