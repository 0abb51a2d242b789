"""
Bộ giải quy nạp: tìm cấu hình, xóa lõi, giải đồ thị dẫn xuất, rồi mở rộng ngược lại.

Các bước rút gọn được đẩy vào ngăn xếp và tháo theo thứ tự ngược nên độ sâu không
phụ thuộc giới hạn đệ quy của Python.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from configs import Catalog, ConfigurationInstance, detect_first, structural_to_reducible
from errors import InternalInconsistency, InvalidParams, NoConfigurationFound
from graph_core import Graph
from mad import mad_less_than
from reducer import Reducer, derived_graph
from weighting import Mode, Weighting, violations

LEVEL_BOUNDS: Dict[int, Fraction] = {52: Fraction(5, 2), 83: Fraction(8, 3)}


class SolveStatus(Enum):
    SOLVED = "Solved"
    NOT_APPLICABLE = "NotApplicable"
    INPUT_REJECTED = "InputRejected"


@dataclass
class TraceStep:
    kind: str
    roles: Dict[str, int] = field(default_factory=dict)

    def __str__(self) -> str:
        binding = " ".join(f"{k}={v}" for k, v in self.roles.items())
        return f"{self.kind} {binding}".rstrip()


@dataclass
class SolveOutcome:
    status: SolveStatus
    weighting: Optional[Weighting] = None
    trace: List[TraceStep] = field(default_factory=list)
    reason: str = ""

    @property
    def solved(self) -> bool:
        return self.status is SolveStatus.SOLVED


def level_bound(level: int) -> Fraction:
    if level not in LEVEL_BOUNDS:
        raise InvalidParams(f"Mức không hợp lệ: {level} (dùng 52 hoặc 83)")
    return LEVEL_BOUNDS[level]


def structural_catalog(mode: Mode, level: int) -> Catalog:
    level_bound(level)
    if level == 52:
        return Catalog.S52
    return Catalog.S83_12 if mode is Mode.TOTAL2 else Catalog.S83_123


def isolated_edges(g: Graph) -> List[int]:
    return [eid for eid, (u, v) in g.edges() if g.degree(u) == 1 and g.degree(v) == 1]


# Trọng số cố định cho các thành phần cơ sở
def _c3_weights(g: Graph, comp: List[int], mode: Mode) -> Tuple[Dict[int, int], Dict[int, int]]:
    a, b, c = comp
    ab, bc, ca = g.edge_id(a, b), g.edge_id(b, c), g.edge_id(c, a)
    if mode is Mode.EDGE3:
        # φ = 4, 3, 5
        return {ab: 1, bc: 2, ca: 3}, {}
    # φ = 4, 5, 6
    return {ab: 1, bc: 2, ca: 2}, {a: 1, b: 2, c: 2}


def _k2_weights(g: Graph, comp: List[int]) -> Tuple[Dict[int, int], Dict[int, int]]:
    u, v = comp
    return {g.edge_id(u, v): 1}, {u: 1, v: 2}


@dataclass
class _BaseStep:
    kind: str
    roles: Dict[str, int]
    edge_weights: Dict[int, int]
    vertex_weights: Dict[int, int]


class Solver:
    def __init__(self, reducer_config: Optional[dict] = None, solver_config: Optional[dict] = None,
                 logger=None):
        self.reducer_config = reducer_config or {}
        self.reducer = Reducer(self.reducer_config, logger)
        self.workers = int((solver_config or {}).get("workers", 1))
        self.logger = logger

    def _info(self, message: str):
        if self.logger:
            self.logger.info(message, "SOLVE")

    def _precheck(self, g: Graph, mode: Mode, level: int, force: bool) -> Optional[SolveOutcome]:
        bound = level_bound(level)
        if mode is Mode.EDGE3 and isolated_edges(g):
            u, v = g.endpoints(isolated_edges(g)[0])
            return SolveOutcome(SolveStatus.INPUT_REJECTED,
                                reason=f"Chế độ 123 không nhận cạnh cô lập ({u}-{v})")
        if not force and not mad_less_than(g, bound):
            return SolveOutcome(SolveStatus.NOT_APPLICABLE, reason=f"Mad(G) >= {bound}")
        return None

    def _strip_bases(self, g: Graph, mode: Mode) -> Tuple[Graph, List[_BaseStep]]:
        steps = []
        doomed: List[int] = []
        for comp in g.components():
            inside = g.edges_within(comp)
            if len(comp) == 3 and len(inside) == 3:
                edges, verts = _c3_weights(g, comp, mode)
                steps.append(_BaseStep("BASE.C3", dict(zip("abc", comp)), edges, verts))
            elif mode is Mode.TOTAL2 and len(comp) == 2 and len(inside) == 1:
                edges, verts = _k2_weights(g, comp)
                steps.append(_BaseStep("BASE.K2", dict(zip("uv", comp)), edges, verts))
            else:
                continue
            doomed += inside
        return (g.delete_edges(doomed) if doomed else g), steps

    def _detect(self, g: Graph, mode: Mode, level: int) -> Optional[ConfigurationInstance]:
        inst = detect_first(g, structural_catalog(mode, level))
        if inst is None:
            return None
        return structural_to_reducible(inst, g, total=mode.has_vertex_weights)

    def _run(self, g: Graph, mode: Mode, level: int) -> Tuple[Weighting, List[TraceStep]]:
        stack: list = []
        trace: List[TraceStep] = []
        current = g
        while True:
            current, bases = self._strip_bases(current, mode)
            for base in bases:
                stack.append(base)
                trace.append(TraceStep(base.kind, base.roles))
            if current.num_edges == 0:
                break
            inst = self._detect(current, mode, level)
            if inst is None:
                raise NoConfigurationFound(f"Không tìm thấy cấu hình khi còn {current.num_edges} cạnh")
            stack.append((current, inst))
            trace.append(TraceStep(str(inst.kind), dict(inst.roles)))
            current = derived_graph(current, inst, mode)
            if self.logger:
                self.logger.log_reduction(str(inst.kind), inst.roles, current.num_edges)
        trace.append(TraceStep("BASE.EMPTY"))

        w = Weighting(mode)
        if mode.has_vertex_weights:
            for v in g.vertices():
                w.set_vertex(v, 1)
        while stack:
            step = stack.pop()
            if isinstance(step, _BaseStep):
                for eid, value in step.edge_weights.items():
                    w.set_edge(eid, value)
                for v, value in step.vertex_weights.items():
                    w.set_vertex(v, value)
            else:
                graph, inst = step
                w = self.reducer.extend(graph, inst, w, mode)
        return w, trace

    def solve(self, g: Graph, mode: Mode, level: int, force: bool = False) -> SolveOutcome:
        rejected = self._precheck(g, mode, level, force)
        if rejected:
            self._info(f"Không giải: {rejected.reason}")
            return rejected
        self._info(f"Bắt đầu giải n={g.n} m={g.num_edges} chế độ {mode.value} mức {level}")
        try:
            w, trace = self._run(g, mode, level)
        except NoConfigurationFound as e:
            return SolveOutcome(SolveStatus.NOT_APPLICABLE, reason=str(e))
        bad = violations(g, w)
        if bad:
            raise InternalInconsistency(f"Kết quả cuối có {len(bad)} cạnh vi phạm")
        self._info(f"Giải xong sau {len(trace)} bước")
        return SolveOutcome(SolveStatus.SOLVED, w, trace)

    def solve_components(self, g: Graph, mode: Mode, level: int, force: bool = False) -> SolveOutcome:
        rejected = self._precheck(g, mode, level, force)
        if rejected:
            return rejected
        pieces = [g.induced(comp) for comp in g.components() if len(comp) > 1]
        jobs = [(sub, mode, level, self.reducer_config) for sub, _ in pieces]
        if self.workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                outcomes = list(pool.map(_solve_piece, jobs))
        else:
            outcomes = [_solve_piece(job) for job in jobs]

        merged = Weighting(mode)
        trace: List[TraceStep] = []
        for (sub, order), outcome in zip(pieces, outcomes):
            if not outcome.solved:
                return outcome
            for eid, (a, b) in sub.edges():
                merged.set_edge(g.edge_id(order[a], order[b]), outcome.weighting.edge_weights[eid])
            for v, value in outcome.weighting.vertex_weights.items():
                merged.set_vertex(order[v], value)
            trace += [TraceStep(step.kind, {k: order[x] for k, x in step.roles.items()})
                      for step in outcome.trace]
        if mode.has_vertex_weights:
            for v in g.vertices():
                if g.degree(v) == 0:
                    merged.set_vertex(v, 1)
        bad = violations(g, merged)
        if bad:
            raise InternalInconsistency(f"Ghép thành phần cho {len(bad)} cạnh vi phạm")
        return SolveOutcome(SolveStatus.SOLVED, merged, trace)


def _solve_piece(job) -> SolveOutcome:
    # Chạy trong tiến trình con, không có logger
    sub, mode, level, reducer_config = job
    return Solver(reducer_config).solve(sub, mode, level, force=True)


def solve(g: Graph, mode: Mode, level: int, force: bool = False, logger=None) -> SolveOutcome:
    return Solver(logger=logger).solve(g, mode, level, force)


def solve_components(g: Graph, mode: Mode, level: int, force: bool = False, logger=None) -> SolveOutcome:
    return Solver(logger=logger).solve_components(g, mode, level, force)
