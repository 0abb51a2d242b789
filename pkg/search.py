"""
Tìm kiếm quay lui trên trọng số cạnh/đỉnh, dùng chung cho reducer và oracle.

Biến là cạnh hoặc đỉnh chưa cố định trọng số. Ràng buộc là các cạnh cần được thỏa
(φ hai đầu khác nhau). Mỗi đỉnh giữ tổng phần đã biết và số biến còn lại; một cạnh
bị loại ngay khi hai đầu đã xác định và trùng φ, và một đỉnh bị loại khi mọi giá
trị φ còn đạt được đều đã bị hàng xóm xác định chiếm.
"""
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from errors import BudgetExceeded, PartialAtVertex
from graph_core import Graph
from weighting import Mode, Weighting

EDGE = "e"
VERTEX = "v"
Item = Tuple[str, int]


class WeightSearch:
    def __init__(self, g: Graph, mode: Mode, base: Weighting, edge_vars: Iterable[int],
                 vertex_vars: Iterable[int], constrained: Iterable[int],
                 max_nodes: Optional[int] = None,
                 order_key: Optional[Callable[[Item], tuple]] = None):
        self.g = g
        self.mode = mode
        self.base = base
        self.max_nodes = max_nodes
        self.nodes = 0
        vertex_vars = sorted(set(vertex_vars)) if mode.has_vertex_weights else []
        self.items: List[Item] = [(EDGE, e) for e in sorted(set(edge_vars))]
        self.items += [(VERTEX, v) for v in vertex_vars]
        self.constrained = sorted(set(constrained))

        # Các đỉnh cần theo dõi: đầu mút của cạnh ràng buộc
        self.cn: Dict[int, List[int]] = {}
        for eid in self.constrained:
            u, v = g.endpoints(eid)
            self.cn.setdefault(u, []).append(v)
            self.cn.setdefault(v, []).append(u)

        var_edges = {e for kind, e in self.items if kind == EDGE}
        var_vertices = set(vertex_vars)
        self.fixed: Dict[int, int] = {}
        self.acc: Dict[int, int] = {}
        self.rem: Dict[int, int] = {}
        self.maxrem: Dict[int, int] = {}
        for x in self.cn:
            total, count = 0, 0
            for eid in g.incident_edges(x):
                if eid in var_edges:
                    count += 1
                elif eid in base.edge_weights:
                    total += base.edge_weights[eid]
                else:
                    raise PartialAtVertex(f"Cạnh id={eid} tại đỉnh {x} chưa có trọng số")
            vertex_count = 0
            if mode.has_vertex_weights:
                if x in var_vertices:
                    vertex_count = 1
                elif x in base.vertex_weights:
                    total += base.vertex_weights[x]
                else:
                    raise PartialAtVertex(f"Đỉnh {x} chưa có trọng số")
            self.fixed[x] = total
            self.acc[x] = 0
            self.rem[x] = count + vertex_count
            self.maxrem[x] = count * mode.max_weight + vertex_count * 2

        self.touch: List[Tuple[int, ...]] = []
        for kind, ref in self.items:
            ends = g.endpoints(ref) if kind == EDGE else (ref,)
            self.touch.append(tuple(x for x in ends if x in self.cn))

        self.infeasible = any(self.rem[u] == 0 and self.rem[v] == 0 and self.fixed[u] == self.fixed[v]
                              for u, v in (g.endpoints(e) for e in self.constrained))
        self.order = self._plan(order_key)

    def _domain(self, i: int) -> range:
        return self.mode.weights if self.items[i][0] == EDGE else range(1, 3)

    def _plan(self, order_key) -> List[int]:
        """Thứ tự biến tĩnh: theo order_key nếu có, không thì ưu tiên biến đóng được nhiều đỉnh nhất"""
        if order_key:
            return sorted(range(len(self.items)), key=lambda i: (order_key(self.items[i]), i))
        remaining = dict(self.rem)
        unplaced = set(range(len(self.items)))
        order = []

        def score(i):
            touched = self.touch[i]
            closes = sum(1 for x in touched if remaining[x] == 1)
            nearest = min((remaining[x] for x in touched), default=99)
            return (closes, -nearest, -i)

        while unplaced:
            best = max(unplaced, key=score)
            unplaced.remove(best)
            order.append(best)
            for x in self.touch[best]:
                remaining[x] -= 1
        return order

    def _phi(self, x: int) -> int:
        return self.fixed[x] + self.acc[x]

    def _blocked(self, x: int) -> bool:
        """Mọi giá trị φ còn đạt được tại x đều trùng với hàng xóm đã xác định"""
        lo = self._phi(x) + self.rem[x]
        hi = self._phi(x) + self.maxrem[x]
        if hi - lo + 1 > len(self.cn[x]):
            return False
        taken: Set[int] = {self._phi(y) for y in self.cn[x] if self.rem[y] == 0}
        return all(value in taken for value in range(lo, hi + 1))

    def _consistent(self, i: int) -> bool:
        touched = self.touch[i]
        for x in touched:
            if self.rem[x] == 0:
                px = self._phi(x)
                if any(self.rem[y] == 0 and self._phi(y) == px for y in self.cn[x]):
                    return False
        for x in touched:
            if self.rem[x] and self._blocked(x):
                return False
            for y in self.cn[x]:
                if self.rem[y] and self._blocked(y):
                    return False
        return True

    def _apply(self, i: int, value: int, sign: int):
        top = self.mode.max_weight if self.items[i][0] == EDGE else 2
        for x in self.touch[i]:
            self.acc[x] += sign * value
            self.rem[x] -= sign
            self.maxrem[x] -= sign * top

    def _walk(self, k: int, values: List[int]) -> Iterator[List[int]]:
        if k == len(self.order):
            yield values
            return
        i = self.order[k]
        for value in self._domain(i):
            self.nodes += 1
            if self.max_nodes is not None and self.nodes > self.max_nodes:
                raise BudgetExceeded(f"Vượt ngân sách {self.max_nodes} nút tìm kiếm")
            self._apply(i, value, +1)
            if self._consistent(i):
                values[i] = value
                yield from self._walk(k + 1, values)
            self._apply(i, value, -1)

    def assignments(self) -> Iterator[List[int]]:
        """Các bộ giá trị thỏa mãn, theo thứ tự từ điển trên thứ tự biến"""
        if self.infeasible:
            return
        yield from self._walk(0, [0] * len(self.items))

    def to_weighting(self, values: Sequence[int]) -> Weighting:
        w = self.base.copy()
        for (kind, ref), value in zip(self.items, values):
            if kind == EDGE:
                w.set_edge(ref, value)
            else:
                w.set_vertex(ref, value)
        return w

    def solutions(self) -> Iterator[Weighting]:
        for values in self.assignments():
            yield self.to_weighting(values)

    def first(self) -> Optional[Weighting]:
        return next(self.solutions(), None)

    def count(self) -> int:
        return sum(1 for _ in self.assignments())
