"""
Mad(G) chính xác: bậc trung bình lớn nhất trên mọi đồ thị con.

Dùng bài toán đồ thị con dày nhất của Goldberg: đoán mật độ g = p/q, dựng mạng
s -> v (m·q), v -> t (m·q + 2p - d(v)·q), u <-> v (q), lát cắt nhỏ nhất có phía
nguồn khác rỗng khi và chỉ khi tồn tại tập đỉnh có |E(S)|/|S| > g. Mọi dung lượng
là số nguyên nên networkx trả kết quả chính xác.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.flow import minimum_cut

from errors import BudgetExceeded, EmptyGraph, InvalidParams
from graph_core import Graph

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class MadResult:
    value: Fraction
    witness: Tuple[int, ...]


def average_degree(g: Graph) -> Fraction:
    if g.n < 1:
        raise EmptyGraph("Đồ thị không có đỉnh")
    return Fraction(2 * g.num_edges, g.n)


def _density_of(g: Graph, vertices: Sequence[int]) -> Fraction:
    return Fraction(len(g.edges_within(vertices)), len(vertices))


def _source_side(g: Graph, vertices: Sequence[int], m: int, guess: Fraction) -> List[int]:
    """Phía nguồn (bỏ s) của lát cắt nhỏ nhất ứng với mật độ đoán"""
    p, q = guess.numerator, guess.denominator
    net = nx.DiGraph()
    for v in vertices:
        net.add_edge("s", v, capacity=m * q)
        net.add_edge(v, "t", capacity=m * q + 2 * p - g.degree(v) * q)
    for eid in g.edges_within(vertices):
        u, v = g.endpoints(eid)
        net.add_edge(u, v, capacity=q)
        net.add_edge(v, u, capacity=q)
    _, (source, _) = minimum_cut(net, "s", "t", capacity="capacity")
    return sorted(x for x in source if x != "s")


def _densest(g: Graph, vertices: List[int]) -> Tuple[Fraction, List[int]]:
    """Mật độ |E|/|V| lớn nhất trong một thành phần liên thông"""
    n = len(vertices)
    m = len(g.edges_within(vertices))
    if m == 0:
        return Fraction(0), vertices[:1]
    first = next(eid for v in vertices for eid in g.incident_edges(v))
    witness = list(g.endpoints(first))
    lo, hi = Fraction(0), Fraction(n)
    resolution = Fraction(1, n * (n - 1))
    while hi - lo >= resolution:
        mid = (lo + hi) / 2
        side = _source_side(g, vertices, m, mid)
        if side:
            lo, witness = mid, side
        else:
            hi = mid
    # Hai mật độ khác nhau cách nhau ít nhất 1/(n(n-1)) nên witness đã đạt cực đại
    return _density_of(g, witness), witness


def mad_exact(g: Graph, logger=None) -> MadResult:
    best, best_witness = Fraction(0), [0] if g.n else []
    for comp in g.components():
        if len(comp) < 2:
            continue
        density, witness = _densest(g, comp)
        if density > best:
            best, best_witness = density, witness
    result = MadResult(2 * best, tuple(best_witness))
    if logger:
        logger.log_mad(result.value, result.witness)
    return result


def mad_less_than(g: Graph, bound: Fraction) -> bool:
    """Quyết định Mad(g) < bound bằng đúng một lát cắt cho mỗi thành phần.

    Mật độ |E(S)|/|S| có mẫu số không quá n, nên mọi mật độ nhỏ hơn p/q = bound/2
    đều nhỏ hơn p/q - 1/(2qn). Kiểm tra "có mật độ > p/q - 1/(2qn)" tương đương
    "có mật độ >= p/q".
    """
    bound = Fraction(bound)
    if bound <= 0:
        raise InvalidParams(f"Cận phải dương, nhận {bound}")
    if g.n and average_degree(g) >= bound:
        return False
    half = bound / 2
    for comp in g.components():
        if len(comp) < 2:
            continue
        m = len(g.edges_within(comp))
        if m == 0:
            continue
        guess = half - Fraction(1, 2 * half.denominator * len(comp))
        if guess < 0 or _source_side(g, comp, m, guess):
            return False
    return True


def mad_bruteforce(g: Graph, limit: Optional[int] = BRUTE_FORCE_LIMIT) -> MadResult:
    """Duyệt mọi tập đỉnh con, chỉ dùng cho kiểm thử"""
    if limit is not None and g.n > limit:
        raise BudgetExceeded(f"Brute-force Mad từ chối n={g.n} > {limit}")
    masks = [(1 << u) | (1 << v) for _, (u, v) in g.edges()]
    best, best_mask = Fraction(0), 1
    for subset in range(1, 1 << g.n):
        size = bin(subset).count("1")
        inside = sum(1 for em in masks if subset & em == em)
        value = Fraction(2 * inside, size)
        if value > best:
            best, best_mask = value, subset
    witness = tuple(v for v in range(g.n) if best_mask >> v & 1)
    return MadResult(best, witness)
