"""
Oracle vét cạn cho đồ thị nhỏ: tồn tại / liệt kê trọng số đúng, đếm số cách mở rộng.
Luôn dừng bằng BudgetExceeded thay vì cắt bớt kết quả trong im lặng.
"""
from dataclasses import dataclass
from typing import List, Optional

from errors import BudgetExceeded
from graph_core import Graph
from reducer import MutableSet, affected_edges
from search import EDGE, WeightSearch
from weighting import Mode, Weighting


@dataclass(frozen=True)
class OracleBudget:
    max_assignments: int = 100_000_000
    max_edges: int = 16

    @classmethod
    def from_config(cls, config_manager) -> "OracleBudget":
        section = config_manager.get_oracle_budget()
        return cls(int(section["max_assignments"]), int(section["max_edges"]))


def min_degree_descending(g: Graph):
    """Cạnh có bậc đầu mút nhỏ nhất càng lớn thì xét càng sớm; biến đỉnh xếp theo bậc của đỉnh"""
    def key(item):
        kind, ref = item
        if kind == EDGE:
            return (-min(g.degree(x) for x in g.endpoints(ref)),)
        return (-g.degree(ref),)
    return key


def _full_search(g: Graph, mode: Mode, budget: OracleBudget) -> WeightSearch:
    vertices = list(g.vertices()) if mode.has_vertex_weights else []
    return WeightSearch(g, mode, Weighting(mode), g.edge_ids(), vertices, g.edge_ids(),
                        max_nodes=budget.max_assignments, order_key=min_degree_descending(g))


def exists_proper(g: Graph, mode: Mode, budget: Optional[OracleBudget] = None) -> bool:
    return _full_search(g, mode, budget or OracleBudget()).first() is not None


def enumerate_proper(g: Graph, mode: Mode, limit: int,
                     budget: Optional[OracleBudget] = None) -> List[Weighting]:
    result: List[Weighting] = []
    if limit <= 0:
        return result
    for w in _full_search(g, mode, budget or OracleBudget()).solutions():
        result.append(w)
        if len(result) >= limit:
            break
    return result


def count_extensions(g: Graph, base: Weighting, ms: MutableSet, mode: Mode,
                     budget: Optional[OracleBudget] = None) -> int:
    """Số cách gán trọng số trên ms để g trở thành đúng; phần ngoài ms lấy từ base"""
    budget = budget or OracleBudget()
    free = len(ms.edges) + (len(ms.vertices) if mode.has_vertex_weights else 0)
    if free > budget.max_edges:
        raise BudgetExceeded(f"{free} biến tự do vượt giới hạn {budget.max_edges}")
    touched = affected_edges(g, ms)
    # Cạnh ngoài vùng ảnh hưởng không đổi trạng thái, kiểm tra một lần trên base
    outside = [eid for eid in g.edge_ids() if eid not in touched]
    if outside and WeightSearch(g, mode, base, (), (), outside).infeasible:
        return 0
    search = WeightSearch(g, mode, base, ms.edges, ms.vertices, touched,
                          max_nodes=budget.max_assignments)
    return search.count()


def count_proper(g: Graph, mode: Mode, budget: Optional[OracleBudget] = None) -> int:
    """Số trọng số đúng đầy đủ của g (đếm chính xác)"""
    budget = budget or OracleBudget()
    free = g.num_edges + (g.n if mode.has_vertex_weights else 0)
    if free > budget.max_edges:
        raise BudgetExceeded(f"{free} biến tự do vượt giới hạn {budget.max_edges}")
    return _full_search(g, mode, budget).count()
