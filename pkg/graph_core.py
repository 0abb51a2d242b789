"""
Đồ thị đơn vô hướng dùng chung cho toàn bộ thư viện.

Đỉnh đánh số liên tục 0..n-1. Mỗi cạnh có id ổn định: xóa cạnh chỉ đánh dấu
"tombstone" (ô None), không bao giờ đánh số lại, nên các cấu hình đã phát hiện
vẫn tham chiếu đúng cạnh sau khi đồ thị bị rút gọn.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from errors import DuplicateEdge, Loop, MalformedLine, UnknownEdgeId

Edge = Tuple[int, int]


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Đồ thị bất biến sau khi tạo; mọi thao tác sửa trả về đồ thị mới"""

    __slots__ = ("n", "_edges", "_adj", "_index", "_incident", "_live")

    def __init__(self, n: int, edges: Sequence[Optional[Edge]]):
        self.n = n
        self._edges: Tuple[Optional[Edge], ...] = tuple(edges)
        adj: List[List[int]] = [[] for _ in range(n)]
        incident: List[List[int]] = [[] for _ in range(n)]
        index: Dict[Edge, int] = {}
        for eid, pair in enumerate(self._edges):
            if pair is None:
                continue
            u, v = pair
            adj[u].append(v)
            adj[v].append(u)
            incident[u].append(eid)
            incident[v].append(eid)
            index[pair] = eid
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._incident = tuple(tuple(sorted(i, key=lambda e: self._other(e, x)))
                               for x, i in enumerate(incident))
        self._index = index
        self._live = len(index)

    def _other(self, eid: int, x: int) -> int:
        u, v = self._edges[eid]
        return v if u == x else u

    # --- Xây dựng ---

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Edge]) -> "Graph":
        """Tạo đồ thị từ danh sách cặp đỉnh, kiểm tra khuyên và cạnh lặp"""
        edges: List[Edge] = []
        seen = set()
        for u, v in pairs:
            if u == v:
                raise Loop(f"Khuyên tại đỉnh {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedLine(f"Cạnh {u}-{v} nằm ngoài 0..{n - 1}")
            key = _canon(u, v)
            if key in seen:
                raise DuplicateEdge(f"Cạnh lặp {key[0]}-{key[1]}")
            seen.add(key)
            edges.append(key)
        return cls(n, edges)

    # --- Truy vấn ---

    @property
    def num_edges(self) -> int:
        return self._live

    @property
    def edge_capacity(self) -> int:
        """Tổng số id cạnh từng cấp, tính cả tombstone"""
        return len(self._edges)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adj[v]

    def incident_edges(self, v: int) -> Tuple[int, ...]:
        """Id các cạnh sống tại v, theo thứ tự đỉnh kề tăng dần"""
        return self._incident[v]

    def edge_id(self, u: int, v: int) -> Optional[int]:
        return self._index.get(_canon(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self._index

    def is_live(self, eid: int) -> bool:
        return 0 <= eid < len(self._edges) and self._edges[eid] is not None

    def endpoints(self, eid: int) -> Edge:
        if not self.is_live(eid):
            raise UnknownEdgeId(f"Không có cạnh sống id={eid}")
        return self._edges[eid]

    def other_end(self, eid: int, x: int) -> int:
        return self._other(eid, x)

    def edges(self) -> Iterator[Tuple[int, Edge]]:
        """Duyệt (id, (u, v)) của các cạnh sống theo id tăng dần"""
        for eid, pair in enumerate(self._edges):
            if pair is not None:
                yield eid, pair

    def edge_ids(self) -> List[int]:
        return [eid for eid, _ in self.edges()]

    def vertices(self) -> range:
        return range(self.n)

    def neighbors_of_degree(self, v: int, *degrees: int) -> List[int]:
        return [u for u in self._adj[v] if len(self._adj[u]) in degrees]

    # --- Thao tác trả về đồ thị mới ---

    def delete_edges(self, es: Iterable[int]) -> "Graph":
        edges = list(self._edges)
        for eid in set(es):
            if not self.is_live(eid):
                raise UnknownEdgeId(f"Cạnh id={eid} không tồn tại hoặc đã bị xóa")
            edges[eid] = None
        return Graph(self.n, edges)

    def add_edges(self, pairs: Iterable[Edge]) -> "Graph":
        """Thêm cạnh mới với id nối tiếp phía sau"""
        edges = list(self._edges)
        for u, v in pairs:
            if u == v:
                raise Loop(f"Khuyên tại đỉnh {u}")
            key = _canon(u, v)
            if key in self._index or key in edges:
                raise DuplicateEdge(f"Cạnh lặp {key[0]}-{key[1]}")
            edges.append(key)
        return Graph(self.n, edges)

    def components(self) -> List[List[int]]:
        """Các thành phần liên thông, mỗi thành phần là danh sách đỉnh tăng dần"""
        seen = [False] * self.n
        result = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            result.append(sorted(comp))
        return result

    def edges_within(self, vertices: Iterable[int]) -> List[int]:
        vs = set(vertices)
        return [eid for eid, (u, v) in self.edges() if u in vs and v in vs]

    def induced(self, vertices: Sequence[int]) -> Tuple["Graph", List[int]]:
        """Đồ thị con cảm sinh đánh số lại 0..k-1, kèm bảng đỉnh gốc"""
        order = sorted(set(vertices))
        local = {v: i for i, v in enumerate(order)}
        pairs = [(local[u], local[v]) for _, (u, v) in self.edges() if u in local and v in local]
        return Graph.from_edges(len(order), pairs), order

    def compact(self) -> "Graph":
        """Bỏ tombstone, đánh số lại id cạnh liên tục"""
        return Graph(self.n, [pair for _, pair in self.edges()])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._live})"


# --- Phân loại đỉnh ---

GAMMA_NONE = "none"
GAMMA_4 = "γ4"
GAMMA_3A = "γ3a"
GAMMA_3B = "γ3b"


@dataclass(frozen=True)
class VertexClass:
    degree: int
    is_alpha: bool
    is_beta12: bool
    is_beta123: bool
    is_beta_prime: bool
    gamma_kind: str = GAMMA_NONE

    @property
    def is_gamma(self) -> bool:
        return self.gamma_kind != GAMMA_NONE


def is_alpha(g: Graph, v: int) -> bool:
    return g.degree(v) == 2 and any(g.degree(u) == 2 for u in g.neighbors(v))


def is_beta12(g: Graph, v: int) -> bool:
    if g.degree(v) != 3:
        return False
    degs = [g.degree(u) for u in g.neighbors(v)]
    return degs.count(2) == 1 and 1 not in degs


def is_beta123(g: Graph, v: int) -> bool:
    return g.degree(v) == 3 and any(g.degree(u) == 2 for u in g.neighbors(v))


def is_beta_prime(g: Graph, v: int) -> bool:
    d = g.degree(v)
    if d < 4 or d % 2:
        return False
    degs = [g.degree(u) for u in g.neighbors(v)]
    return degs.count(1) == d // 2 - 1 and 2 not in degs


def gamma_kind(g: Graph, v: int) -> str:
    d = g.degree(v)
    if d == 4 and any(g.degree(u) == 1 for u in g.neighbors(v)):
        return GAMMA_4
    if d == 3:
        # γ3a thắng khi đỉnh thuộc cả hai loại
        if any(is_alpha(g, u) for u in g.neighbors(v)):
            return GAMMA_3A
        if len(g.neighbors_of_degree(v, 2)) >= 2:
            return GAMMA_3B
    return GAMMA_NONE


def is_gamma(g: Graph, v: int) -> bool:
    return gamma_kind(g, v) != GAMMA_NONE


def classify(g: Graph, v: int) -> VertexClass:
    return VertexClass(
        degree=g.degree(v),
        is_alpha=is_alpha(g, v),
        is_beta12=is_beta12(g, v),
        is_beta123=is_beta123(g, v),
        is_beta_prime=is_beta_prime(g, v),
        gamma_kind=gamma_kind(g, v),
    )


def delete_edges(g: Graph, es: Iterable[int]) -> Graph:
    return g.delete_edges(es)


# --- Định dạng edge-list ---

def parse_graph(text: str) -> Graph:
    """Đọc định dạng edge-list: dòng '#' là chú thích, 'v <id>' khai báo đỉnh, 'e <u> <v>' khai báo cạnh"""
    pairs: List[Edge] = []
    seen: Dict[Edge, int] = {}
    max_id = -1
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            ids = [int(p) for p in parts[1:]]
        except ValueError:
            raise MalformedLine(f"id không phải số nguyên: {line!r}", line_no) from None
        if any(i < 0 for i in ids):
            raise MalformedLine(f"id âm: {line!r}", line_no)
        if parts[0] == "v" and len(ids) == 1:
            max_id = max(max_id, ids[0])
        elif parts[0] == "e" and len(ids) == 2:
            u, v = ids
            if u == v:
                raise Loop(f"khuyên tại đỉnh {u}", line_no)
            key = _canon(u, v)
            if key in seen:
                raise DuplicateEdge(f"cạnh {u}-{v} đã khai báo ở dòng {seen[key]}", line_no)
            seen[key] = line_no
            pairs.append(key)
            max_id = max(max_id, u, v)
        else:
            raise MalformedLine(f"không nhận dạng được: {line!r}", line_no)
    return Graph.from_edges(max_id + 1, pairs)


def format_graph(g: Graph) -> str:
    lines = [f"# n={g.n} m={g.num_edges}"]
    lines += [f"v {v}" for v in g.vertices() if g.degree(v) == 0]
    lines += [f"e {u} {v}" for _, (u, v) in g.edges()]
    return "\n".join(lines) + "\n"


