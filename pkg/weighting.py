"""
Trọng số (weighting), hàm màu φ, độ lệch ρ và các vị từ "đúng" (proper).

Hai chế độ:
  EDGE3  - trọng số cạnh trong {1,2,3}, không có trọng số đỉnh
  TOTAL2 - trọng số cạnh và đỉnh trong {1,2}
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

from errors import (Incomplete, NotAnEdge, PartialAtVertex, WeightOutOfRange,
                    WeightingFormatError)
from graph_core import Graph


class Mode(Enum):
    EDGE3 = "123"
    TOTAL2 = "12"

    @property
    def max_weight(self) -> int:
        return 3 if self is Mode.EDGE3 else 2

    @property
    def weights(self) -> range:
        return range(1, self.max_weight + 1)

    @property
    def has_vertex_weights(self) -> bool:
        return self is Mode.TOTAL2

    @classmethod
    def parse(cls, text: str) -> "Mode":
        try:
            return cls(str(text))
        except ValueError:
            raise WeightingFormatError(f"Chế độ không hợp lệ: {text!r} (dùng 123 hoặc 12)") from None


class Weighting:
    """Trọng số có thể chưa đầy đủ; kiểm tra khoảng giá trị ngay khi gán"""

    __slots__ = ("mode", "edge_weights", "vertex_weights")

    def __init__(self, mode: Mode, edge_weights: Optional[Dict[int, int]] = None,
                 vertex_weights: Optional[Dict[int, int]] = None):
        self.mode = mode
        self.edge_weights: Dict[int, int] = {}
        self.vertex_weights: Dict[int, int] = {}
        for eid, w in (edge_weights or {}).items():
            self.set_edge(eid, w)
        for v, w in (vertex_weights or {}).items():
            self.set_vertex(v, w)

    def set_edge(self, eid: int, w: int):
        if not 1 <= w <= self.mode.max_weight:
            raise WeightOutOfRange(f"Trọng số cạnh {w} ngoài 1..{self.mode.max_weight}")
        self.edge_weights[eid] = w

    def set_vertex(self, v: int, w: int):
        if not self.mode.has_vertex_weights:
            raise WeightOutOfRange("Chế độ 123 không có trọng số đỉnh")
        if not 1 <= w <= 2:
            raise WeightOutOfRange(f"Trọng số đỉnh {w} ngoài 1..2")
        self.vertex_weights[v] = w

    def copy(self) -> "Weighting":
        clone = Weighting(self.mode)
        clone.edge_weights = dict(self.edge_weights)
        clone.vertex_weights = dict(self.vertex_weights)
        return clone

    def restrict_to(self, g: Graph) -> "Weighting":
        """Bỏ trọng số của các cạnh không còn sống trong g"""
        clone = self.copy()
        clone.edge_weights = {e: w for e, w in self.edge_weights.items() if g.is_live(e)}
        return clone

    def is_complete(self, g: Graph) -> bool:
        if any(eid not in self.edge_weights for eid in g.edge_ids()):
            return False
        if self.mode.has_vertex_weights:
            return all(v in self.vertex_weights for v in g.vertices())
        return True

    def __eq__(self, other) -> bool:
        return (isinstance(other, Weighting) and self.mode is other.mode
                and self.edge_weights == other.edge_weights
                and self.vertex_weights == other.vertex_weights)

    def __repr__(self) -> str:
        return (f"Weighting({self.mode.name}, edges={len(self.edge_weights)}, "
                f"vertices={len(self.vertex_weights)})")


@dataclass(frozen=True)
class Violation:
    edge: int
    phi_u: int
    phi_v: int


def phi(g: Graph, w: Weighting, v: int) -> int:
    total = 0
    for eid in g.incident_edges(v):
        weight = w.edge_weights.get(eid)
        if weight is None:
            raise PartialAtVertex(f"Cạnh id={eid} tại đỉnh {v} chưa có trọng số")
        total += weight
    if w.mode.has_vertex_weights:
        own = w.vertex_weights.get(v)
        if own is None:
            raise PartialAtVertex(f"Đỉnh {v} chưa có trọng số")
        total += own
    return total


def rho(g: Graph, w: Weighting, x: int, y: int) -> int:
    eid = g.edge_id(x, y)
    if eid is None:
        raise NotAnEdge(f"{x}-{y} không phải cạnh")
    if eid not in w.edge_weights:
        raise PartialAtVertex(f"Cạnh {x}-{y} chưa có trọng số")
    return phi(g, w, x) - w.edge_weights[eid]


def violations(g: Graph, w: Weighting) -> List[Violation]:
    if not w.is_complete(g):
        raise Incomplete("Trọng số chưa gán đủ cạnh/đỉnh")
    colors = [phi(g, w, v) for v in g.vertices()]
    return [Violation(eid, colors[u], colors[v])
            for eid, (u, v) in g.edges() if colors[u] == colors[v]]


def is_proper(g: Graph, w: Weighting) -> bool:
    return w.is_complete(g) and not violations(g, w)


# --- Định dạng văn bản ---

def parse_weighting(text: str, g: Graph, mode: Mode) -> Weighting:
    """Đọc các dòng 'edge <u> <v> <w>' và 'vertex <v> <w>', thứ tự tùy ý"""
    w = Weighting(mode)
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts[1:]]
        except ValueError:
            raise WeightingFormatError(f"Dòng {line_no}: giá trị không phải số: {line!r}") from None
        if parts[0] == "edge" and len(nums) == 3:
            u, v, weight = nums
            eid = g.edge_id(u, v)
            if eid is None:
                raise NotAnEdge(f"Dòng {line_no}: {u}-{v} không phải cạnh")
            w.set_edge(eid, weight)
        elif parts[0] == "vertex" and len(nums) == 2:
            v, weight = nums
            if not 0 <= v < g.n:
                raise WeightingFormatError(f"Dòng {line_no}: đỉnh {v} ngoài đồ thị")
            w.set_vertex(v, weight)
        else:
            raise WeightingFormatError(f"Dòng {line_no}: không nhận dạng được {line!r}")
    return w


def format_weighting(w: Weighting, g: Graph) -> str:
    lines = []
    for eid, (u, v) in g.edges():
        if eid in w.edge_weights:
            lines.append(f"edge {u} {v} {w.edge_weights[eid]}")
    for v in sorted(w.vertex_weights):
        lines.append(f"vertex {v} {w.vertex_weights[v]}")
    return "\n".join(lines) + "\n"
