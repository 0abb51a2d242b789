"""
Phóng điện (discharging) với số hữu tỉ chính xác.

Mỗi đỉnh nhận điện tích ban đầu bằng bậc, các luật cục bộ chuyển điện tích giữa
hai đỉnh kề nhau, sau đó so điện tích cuối với cận của bộ luật.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional

import pandas as pd

from configs import EDGE3_CATALOGS, Catalog, detect_all
from errors import InvalidParams
from graph_core import Graph, gamma_kind, is_alpha, is_beta123, is_beta_prime, GAMMA_NONE
from solver import isolated_edges


class RuleSetId(Enum):
    R52 = "r52"
    R83_12 = "r83-12"
    R83_123 = "r83-123"


@dataclass(frozen=True)
class RuleSet:
    id: RuleSetId
    bound: Fraction
    catalog: Catalog

    @classmethod
    def parse(cls, text: str) -> "RuleSet":
        try:
            return RULESETS[RuleSetId(text)]
        except ValueError:
            raise InvalidParams(f"Bộ luật không hợp lệ: {text!r}") from None


RULESETS: Dict[RuleSetId, RuleSet] = {
    RuleSetId.R52: RuleSet(RuleSetId.R52, Fraction(5, 2), Catalog.S52),
    RuleSetId.R83_12: RuleSet(RuleSetId.R83_12, Fraction(8, 3), Catalog.S83_12),
    RuleSetId.R83_123: RuleSet(RuleSetId.R83_123, Fraction(8, 3), Catalog.S83_123),
}


@dataclass(frozen=True)
class Transfer:
    giver: int
    receiver: int
    amount: Fraction
    rule: str


@dataclass
class DischargeReport:
    rules: RuleSet
    initial: Dict[int, Fraction]
    transfers: List[Transfer] = field(default_factory=list)
    final: Dict[int, Fraction] = field(default_factory=dict)

    @property
    def min_final(self) -> Optional[Fraction]:
        return min(self.final.values()) if self.final else None

    def min_final_nonisolated(self, g: Graph) -> Optional[Fraction]:
        values = [self.final[v] for v in g.vertices() if g.degree(v) > 0]
        return min(values) if values else None


class Verdict(Enum):
    CONFIG_FREE_AND_CHARGED = "CONFIG_FREE_AND_CHARGED"
    CONFIG_PRESENT = "CONFIG_PRESENT"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"


def _rules_52(g: Graph) -> List[Transfer]:
    out = []
    for v in g.vertices():
        d = g.degree(v)
        if d >= 4:
            for u in g.neighbors_of_degree(v, 1):
                out.append(Transfer(v, u, Fraction(3, 2), "R52.1"))
            for u in g.neighbors_of_degree(v, 2):
                out.append(Transfer(v, u, Fraction(1, 2), "R52.1"))
        elif d == 3:
            twos = g.neighbors_of_degree(v, 2)
            for u in twos:
                out.append(Transfer(v, u, Fraction(1, 2) / len(twos), "R52.2"))
    return out


def _rules_83_12(g: Graph) -> List[Transfer]:
    out = []
    for v in g.vertices():
        d = g.degree(v)
        if d == 1:
            u = g.neighbors(v)[0]
            out.append(Transfer(u, v, Fraction(5, 3), "R83_12.1"))
        elif d == 2:
            givers = [u for u in g.neighbors(v) if g.degree(u) >= 3]
            if givers:
                out.append(Transfer(givers[0], v, Fraction(2, 3), "R83_12.2"))
        elif d == 3 and g.neighbors_of_degree(v, 2):
            for u in g.neighbors(v):
                if g.degree(u) != 2:
                    out.append(Transfer(u, v, Fraction(1, 6), "R83_12.3"))
        elif d == 4 and g.neighbors_of_degree(v, 1):
            for u in g.neighbors(v):
                if g.degree(u) != 1 and not is_beta_prime(g, u):
                    out.append(Transfer(u, v, Fraction(1, 6), "R83_12.4"))
    return out


def _rules_83_123(g: Graph) -> List[Transfer]:
    out = []
    for v in g.vertices():
        d = g.degree(v)
        if d == 1:
            out.append(Transfer(g.neighbors(v)[0], v, Fraction(5, 3), "R83_123.1"))
        elif d == 2 and is_alpha(g, v):
            givers = [u for u in g.neighbors(v) if g.degree(u) >= 3]
            if givers:
                out.append(Transfer(givers[0], v, Fraction(2, 3), "R83_123.2"))
        elif d == 2:
            for u in g.neighbors(v):
                out.append(Transfer(u, v, Fraction(1, 3), "R83_123.3"))
        if gamma_kind(g, v) != GAMMA_NONE:
            for u in g.neighbors(v):
                if g.degree(u) >= 3 and not is_beta123(g, u):
                    out.append(Transfer(u, v, Fraction(1, 3), "R83_123.4"))
    return out


_RULES = {
    RuleSetId.R52: _rules_52,
    RuleSetId.R83_12: _rules_83_12,
    RuleSetId.R83_123: _rules_83_123,
}


def run(g: Graph, rules: RuleSet, logger=None) -> DischargeReport:
    initial = {v: Fraction(g.degree(v)) for v in g.vertices()}
    transfers = _RULES[rules.id](g)
    final = dict(initial)
    for t in transfers:
        final[t.giver] -= t.amount
        final[t.receiver] += t.amount
    report = DischargeReport(rules, initial, transfers, final)
    if logger:
        logger.info(f"{rules.id.value}: {len(transfers)} lần chuyển, min = {report.min_final}", "DISCHARGE")
    return report


def check_unavoidability(g: Graph, rules: RuleSet, catalog: Optional[Catalog] = None,
                         logger=None) -> Verdict:
    """So phát hiện cấu hình với điện tích cuối trên các đỉnh có bậc dương"""
    catalog = catalog or rules.catalog
    if catalog is not rules.catalog:
        raise InvalidParams(f"Bộ luật {rules.id.value} đi với danh mục {rules.catalog.name}")
    if rules.catalog in EDGE3_CATALOGS and isolated_edges(g):
        raise InvalidParams(f"Bộ luật {rules.id.value} chỉ áp dụng cho đồ thị không có cạnh cô lập")
    # Chỉ danh sách cấu trúc, không tính tam giác và 4-chu trình suy biến
    if detect_all(g, catalog, include_degenerate=False):
        return Verdict.CONFIG_PRESENT
    lowest = run(g, rules).min_final_nonisolated(g)
    if lowest is None or lowest >= rules.bound:
        return Verdict.CONFIG_FREE_AND_CHARGED
    if logger:
        logger.error(f"Phản ví dụ: không có cấu hình nhưng min = {lowest} < {rules.bound}", "DISCHARGE")
    return Verdict.COUNTEREXAMPLE


def report_frame(report: DischargeReport, g: Optional[Graph] = None) -> pd.DataFrame:
    """Bảng điện tích theo đỉnh, giá trị ghi dạng p/q"""
    rows = []
    for v, start in report.initial.items():
        received = sum((t.amount for t in report.transfers if t.receiver == v), Fraction(0))
        given = sum((t.amount for t in report.transfers if t.giver == v), Fraction(0))
        rows.append({
            "vertex": v,
            "degree": g.degree(v) if g is not None else int(start),
            "initial": str(start),
            "received": str(received),
            "given": str(given),
            "final": str(report.final[v]),
        })
    return pd.DataFrame(rows, columns=["vertex", "degree", "initial", "received", "given", "final"])


def transfers_frame(report: DischargeReport) -> pd.DataFrame:
    rows = [{"from": t.giver, "to": t.receiver, "amount": str(t.amount), "rule": t.rule}
            for t in report.transfers]
    return pd.DataFrame(rows, columns=["from", "to", "amount", "rule"])
