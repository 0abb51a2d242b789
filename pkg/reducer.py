"""
Mở rộng trọng số của đồ thị dẫn xuất G' = G - core thành trọng số đúng của G.

Tìm kiếm quay lui trên tập biến được phép (MutableSet). Nếu một cấu hình trong danh
mục không mở rộng được, ta nới tập biến thêm một lớp cạnh rồi thử lại; vẫn thất bại
nghĩa là có lỗi lập trình.
"""
from dataclasses import dataclass
from itertools import product
from typing import Optional, Set

from configs import Catalog, ConfigurationInstance
from errors import BudgetExceeded, ExtensionImpossible, Incomplete, InternalInconsistency
from graph_core import Graph
from search import WeightSearch
from weighting import Mode, Weighting, is_proper


@dataclass(frozen=True)
class MutableSet:
    edges: frozenset
    vertices: frozenset = frozenset()

    def endpoints(self, g: Graph) -> Set[int]:
        return {x for e in self.edges for x in g.endpoints(e)}


def deleted_edges(inst: ConfigurationInstance, mode: Mode) -> frozenset:
    """Các cạnh bị xóa khi rút gọn; dọn cạnh cô lập chỉ áp dụng cho chế độ 123"""
    if mode is Mode.EDGE3:
        return inst.core | inst.extra_deletions
    return inst.core


def derived_graph(g: Graph, inst: ConfigurationInstance, mode: Mode) -> Graph:
    return g.delete_edges(deleted_edges(inst, mode))


def mutable_set(inst: ConfigurationInstance, g: Graph, mode: Mode) -> MutableSet:
    edges = deleted_edges(inst, mode)
    if not mode.has_vertex_weights:
        return MutableSet(frozenset(edges))
    edges = edges | inst.extra_edges
    vertices = {x for e in inst.core for x in g.endpoints(e)} | inst.extra_vertices
    return MutableSet(frozenset(edges), frozenset(vertices))


def affected_edges(g: Graph, ms: MutableSet) -> frozenset:
    touched = ms.endpoints(g) | set(ms.vertices)
    return frozenset(e for x in touched for e in g.incident_edges(x))


def widen(g: Graph, ms: MutableSet, mode: Mode) -> MutableSet:
    """Thêm một lớp: mọi cạnh bị ảnh hưởng trở thành biến"""
    edges = affected_edges(g, ms)
    if not mode.has_vertex_weights:
        return MutableSet(edges)
    vertices = {x for e in edges for x in g.endpoints(e)}
    return MutableSet(edges, frozenset(vertices) | ms.vertices)


def choosable_sums(k: int, j: int) -> Set[int]:
    """Các tổng đạt được khi chọn k trọng số trong {1..j}"""
    return {sum(combo) for combo in product(range(1, j + 1), repeat=k)} if k else {0}


def is_catalog_listed(inst: ConfigurationInstance) -> bool:
    return inst.kind.catalog is not Catalog.NONRED


class Reducer:
    """Mở rộng trọng số theo cấu hình, với ngân sách và lối thoát lấy từ config"""

    def __init__(self, config: Optional[dict] = None, logger=None):
        config = config or {}
        self.escape_shells = int(config.get("escape_shells", 1))
        self.max_search_nodes = config.get("max_search_nodes", 5_000_000)
        self.verify_locality = bool(config.get("verify_locality", False))
        self.logger = logger

    def _search(self, g: Graph, inst: ConfigurationInstance, base: Weighting, ms: MutableSet,
                mode: Mode) -> Optional[Weighting]:
        search = WeightSearch(g, mode, base, ms.edges, ms.vertices, affected_edges(g, ms),
                              max_nodes=self.max_search_nodes)
        try:
            result = search.first()
        except BudgetExceeded:
            if self.logger:
                self.logger.warning(f"{inst.kind}: vượt ngân sách tìm kiếm", "REDUCE")
            result = None
        if self.logger:
            self.logger.log_extension(str(inst.kind), search.nodes, result is not None)
        return result

    def extend(self, g: Graph, inst: ConfigurationInstance, w_prime: Weighting, mode: Mode) -> Weighting:
        derived = derived_graph(g, inst, mode)
        if not w_prime.is_complete(derived):
            raise Incomplete(f"Trọng số của đồ thị dẫn xuất chưa đầy đủ ({inst.kind})")
        base = w_prime.restrict_to(derived)
        ms = mutable_set(inst, g, mode)
        result = self._search(g, inst, base, ms, mode)
        if result is None and not is_catalog_listed(inst):
            raise ExtensionImpossible(f"{inst.kind}: không có mở rộng đúng")
        shells = 0
        while result is None and shells < self.escape_shells:
            shells += 1
            ms = widen(g, ms, mode)
            if self.logger:
                self.logger.warning(f"{inst.kind}: nới tập biến lớp {shells} ({len(ms.edges)} cạnh)", "REDUCE")
            result = self._search(g, inst, base, ms, mode)
        if result is None:
            raise InternalInconsistency(f"{inst.kind} tại {dict(inst.roles)} không mở rộng được")
        if self.verify_locality and not is_proper(g, result):
            raise InternalInconsistency(f"{inst.kind}: kết quả mở rộng vi phạm ngoài vùng ảnh hưởng")
        return result


def extend(g: Graph, inst: ConfigurationInstance, w_prime: Weighting, mode: Mode,
           config: Optional[dict] = None, logger=None) -> Weighting:
    return Reducer(config, logger).extend(g, inst, w_prime, mode)
