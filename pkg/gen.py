"""
Sinh đồ thị cho kiểm thử và corpus: đồ thị ngẫu nhiên có Mad bị chặn, đồ thị có tên,
hai mẫu không khử được, và đồ thị chủ (host) chứa một loại cấu hình cho trước.

Mọi ngẫu nhiên đi qua random.Random(seed) nên cùng GenSpec cho cùng danh sách cạnh.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Callable, Dict, List, Optional, Tuple, Union

import networkx as nx

from configs import Catalog, ConfigKind, ConfigurationInstance, catalog_tags
from errors import InvalidParams, NotCubic
from graph_core import Graph
from mad import mad_less_than
from weighting import Mode, Weighting

DEFAULT_SEED = 20240615

KINDS = ("cycle", "path", "tree", "random_mad", "cubic_plus_pendants", "named",
         "nonred_gadget", "config_host")


@dataclass(frozen=True)
class GenSpec:
    kind: str
    params: Tuple[Tuple[str, object], ...] = ()
    seed: int = DEFAULT_SEED

    @classmethod
    def of(cls, kind: str, seed: int = DEFAULT_SEED, **params) -> "GenSpec":
        return cls(kind, tuple(sorted(params.items())), seed)

    def param(self, name: str, default=None):
        return dict(self.params).get(name, default)


# --- Đồ thị đơn giản ---

def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParams(f"Chu trình cần n >= 3, nhận {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParams(f"Đường đi cần n >= 1, nhận {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _tree_pairs(n: int, rng: random.Random) -> List[Tuple[int, int]]:
    labels = list(range(n))
    rng.shuffle(labels)
    return [(labels[i], labels[rng.randrange(i)]) for i in range(1, n)]


def tree(n: int, seed: int = DEFAULT_SEED) -> Graph:
    if n < 1:
        raise InvalidParams(f"Cây cần n >= 1, nhận {n}")
    return Graph.from_edges(n, _tree_pairs(n, random.Random(seed)))


def from_networkx(nx_graph: nx.Graph) -> Graph:
    nx_graph = nx.convert_node_labels_to_integers(nx_graph, ordering="sorted")
    return Graph.from_edges(nx_graph.number_of_nodes(), sorted(nx_graph.edges()))


NAMED: Dict[str, Callable[[], nx.Graph]] = {
    "k4": lambda: nx.complete_graph(4),
    "k33": lambda: nx.complete_bipartite_graph(3, 3),
    "cube": nx.cubical_graph,
    "petersen": nx.petersen_graph,
    "heawood": nx.heawood_graph,
    "dodecahedron": nx.dodecahedral_graph,
}


def named(name: str) -> Graph:
    if name not in NAMED:
        raise InvalidParams(f"Không có đồ thị tên {name!r} (có: {', '.join(NAMED)})")
    return from_networkx(NAMED[name]())


def cubic_plus_pendants(base: Union[str, Graph]) -> Graph:
    """Thêm một đỉnh treo vào mỗi đỉnh của đồ thị 3-chính quy"""
    g = named(base) if isinstance(base, str) else base
    if g.n == 0 or any(g.degree(v) != 3 for v in g.vertices()):
        raise NotCubic("Đồ thị gốc phải 3-chính quy")
    pairs = [pair for _, pair in g.edges()] + [(v, g.n + v) for v in g.vertices()]
    return Graph.from_edges(2 * g.n, pairs)


def random_mad(n: int, bound: Fraction, seed: int = DEFAULT_SEED, batch_size: int = 8,
               max_attempts_factor: int = 6) -> Graph:
    """Đồ thị n đỉnh có Mad < bound: bắt đầu từ cây ngẫu nhiên rồi thêm cạnh theo lô.

    Mỗi lô được kiểm tra bằng mad_less_than; lô hỏng thì thử lại từng cạnh.
    """
    bound = Fraction(bound)
    if n < 1 or bound <= 0:
        raise InvalidParams(f"Tham số không hợp lệ: n={n}, bound={bound}")
    rng = random.Random(seed)
    g = Graph.from_edges(n, _tree_pairs(n, rng))
    if not mad_less_than(g, bound):
        raise InvalidParams(f"Cận {bound} quá nhỏ cho cây {n} đỉnh")
    m_max = ceil(bound * n / 2) - 1
    target = rng.randint(g.num_edges, max(g.num_edges, m_max))
    attempts, limit = 0, max_attempts_factor * n
    while g.num_edges < target and attempts < limit and n > 1:
        batch: List[Tuple[int, int]] = []
        while len(batch) < batch_size and g.num_edges + len(batch) < target and attempts < limit:
            attempts += 1
            u, v = sorted(rng.sample(range(n), 2))
            if not g.has_edge(u, v) and (u, v) not in batch:
                batch.append((u, v))
        if not batch:
            break
        trial = g.add_edges(batch)
        if mad_less_than(trial, bound):
            g = trial
            continue
        for pair in batch:
            trial = g.add_edges([pair])
            if mad_less_than(trial, bound):
                g = trial
    return g


# --- Mẫu không khử được ---

def _stub_values(target: int) -> List[int]:
    """Trọng số [đỉnh hub, cạnh tới lá...] có tổng đúng bằng target"""
    leaves = 2 if target <= 6 else 3
    values = [1] * (leaves + 1)
    for i in range(target - len(values)):
        values[i] = 2
    return values


class _GadgetBuilder:
    def __init__(self, n: int):
        self.n = n
        self.pairs: List[Tuple[int, int]] = []
        self.edge_weights: Dict[Tuple[int, int], int] = {}
        self.vertex_weights: Dict[int, int] = {}

    def edge(self, u: int, v: int, weight: Optional[int] = None):
        key = (min(u, v), max(u, v))
        self.pairs.append(key)
        if weight is not None:
            self.edge_weights[key] = weight

    def stub(self, hub: int, rho: int):
        """Gắn lá vào hub để ρ tại hub (không kể cạnh nối vào mẫu) bằng rho"""
        values = _stub_values(rho)
        self.vertex_weights[hub] = values[0]
        for weight in values[1:]:
            leaf = self.n
            self.n += 1
            self.edge(hub, leaf, weight)
            self.vertex_weights[leaf] = 1

    def build(self, core_pairs, roles) -> Tuple[Graph, Weighting, frozenset, Dict[str, int]]:
        g = Graph.from_edges(self.n, self.pairs)
        w = Weighting(Mode.TOTAL2)
        for pair, weight in self.edge_weights.items():
            w.set_edge(g.edge_id(*pair), weight)
        for v in g.vertices():
            w.set_vertex(v, self.vertex_weights.get(v, 1))
        core = frozenset(g.edge_id(u, v) for u, v in core_pairs)
        return g, w, core, roles


def _left_gadget(perturbed: bool):
    # v, v' là β'-đỉnh bậc 4 kề nhau, u, u' là đỉnh treo
    v, v2, u, u2, a1, a2, a3, a4 = range(8)
    b = _GadgetBuilder(8)
    for x, y in ((u, v), (v, v2), (v2, u2)):
        b.edge(x, y)
    for hub, centre, rho in ((a1, v, 7 if perturbed else 6), (a2, v, 5), (a3, v2, 6), (a4, v2, 5)):
        b.edge(hub, centre, 1)
        b.stub(hub, rho)
    return b.build([(u, v), (v, v2), (v2, u2)], {"v": v, "v'": v2, "u": u, "u'": u2})


def _right_gadget(perturbed: bool):
    # v là β-đỉnh, z là 2-đỉnh kề của v, y là 2-đỉnh kề của z, x là đỉnh kề còn lại của y
    v, z, y, x, a, b_hub = range(6)
    b = _GadgetBuilder(6)
    b.edge(v, z)
    b.edge(z, y)
    b.edge(y, x, 1)
    b.stub(x, 4 if perturbed else 3)
    for hub, rho in ((a, 4), (b_hub, 5)):
        b.edge(v, hub, 1)
        b.stub(hub, rho)
    return b.build([(v, z), (z, y)], {"v": v, "z": z, "y": y, "x": x})


def gadget_base_weighting(side: str, perturbed: bool = False) -> Tuple[Graph, Weighting, ConfigurationInstance]:
    """Đồ thị mẫu, trọng số w' của đồ thị dẫn xuất (đầy đủ) và cấu hình NONRED tương ứng"""
    builders = {"left": _left_gadget, "right": _right_gadget}
    if side not in builders:
        raise InvalidParams(f"side phải là left hoặc right, nhận {side!r}")
    g, w, core, roles = builders[side](perturbed)
    inst = ConfigurationInstance(ConfigKind(Catalog.NONRED, side.upper()), roles, core)
    # Trọng số trên cạnh lõi không thuộc w'
    w.edge_weights = {e: value for e, value in w.edge_weights.items() if e not in core}
    return g, w, inst


def nonred_gadget(side: str, perturbed: bool = False) -> Graph:
    return gadget_base_weighting(side, perturbed)[0]


# --- Đồ thị chủ cho từng loại cấu hình ---

ANCHORS: Tuple[Callable[[], nx.Graph], ...] = (
    lambda: nx.complete_graph(4),
    lambda: nx.complete_graph(5),
    lambda: nx.complete_bipartite_graph(3, 3),
)


class _HostBuilder:
    """Ráp cấu hình từ đỉnh, đỉnh treo, 2-đỉnh nối ra neo và neo (K4, K5 hoặc K3,3)"""

    def __init__(self, variant: int):
        self.variant = variant
        self.anchor = ANCHORS[variant % len(ANCHORS)]
        self.n = 0
        self.pairs: List[Tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int):
        self.pairs.append((u, v))

    def joined(self, x: int) -> int:
        y = self.vertex()
        self.edge(x, y)
        return y

    def pendant(self, x: int) -> int:
        return self.joined(x)

    def anchor_at(self, x: int, count: int = 1):
        for _ in range(count):
            template = nx.convert_node_labels_to_integers(self.anchor())
            offset = self.n
            self.n += template.number_of_nodes()
            self.pairs += [(offset + a, offset + b) for a, b in template.edges()]
            self.edge(x, offset)

    def spoke(self, x: int) -> int:
        """2-đỉnh nối x với một neo"""
        s = self.joined(x)
        self.anchor_at(s)
        return s

    def alpha_arm(self, x: int) -> int:
        """x - z - y - neo, với z, y là 2-đỉnh (z là α-đỉnh)"""
        z = self.joined(x)
        self.spoke(z)
        return z

    def gamma4(self, x: int) -> int:
        """4-đỉnh có một đỉnh treo, kề x"""
        z = self.joined(x)
        self.pendant(z)
        self.anchor_at(z, 2)
        return z

    def beta_prime4(self, x: int) -> int:
        return self.gamma4(x)

    def beta(self, x: int) -> int:
        """3-đỉnh kề x, có đúng một 2-đỉnh kề (không phải α)"""
        z = self.joined(x)
        self.spoke(z)
        self.anchor_at(z)
        return z

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.pairs)


def _h_w3_a(b: _HostBuilder):
    v = b.vertex()
    b.pendant(v)
    b.anchor_at(v, 2)


def _h_w3_b(b: _HostBuilder):
    v = b.vertex()
    for _ in range(3):
        b.spoke(v)


def _h_w3_c(b: _HostBuilder):
    v = b.vertex()
    b.alpha_arm(v)
    b.spoke(v)
    b.anchor_at(v)


def _h_w3_d(b: _HostBuilder):
    v = b.vertex()
    b.pendant(v)
    b.spoke(v)
    b.anchor_at(v, 2)


def _h_high(b: _HostBuilder):
    v = b.vertex()
    b.pendant(v)
    b.pendant(v)
    b.anchor_at(v, 3)


def _h_w2_b(b: _HostBuilder):
    v = b.vertex()
    b.spoke(v)
    b.spoke(v)
    b.anchor_at(v)


def _h_w2_d(b: _HostBuilder):
    v, v2 = b.vertex(), b.vertex()
    b.edge(v, v2)
    for x in (v, v2):
        b.spoke(x)
        b.anchor_at(x)


def _h_w2_e(b: _HostBuilder):
    v, v2 = b.vertex(), b.vertex()
    b.edge(v, v2)
    b.spoke(v)
    b.anchor_at(v)
    if b.variant == 2:
        # β'-đỉnh bậc 6
        b.pendant(v2)
        b.pendant(v2)
        b.anchor_at(v2, 3)
    else:
        b.pendant(v2)
        b.anchor_at(v2, 2)


def _h_w2_f(b: _HostBuilder):
    v, z, z2 = b.vertex(), b.vertex(), b.vertex()
    b.edge(v, z)
    b.edge(v, z2)
    b.pendant(v)
    b.anchor_at(v)
    if b.variant == 1:
        b.edge(z, z2)
        for x in (z, z2):
            b.pendant(x)
            b.anchor_at(x)
    else:
        for x in (z, z2):
            b.pendant(x)
            b.anchor_at(x, 2)


def _h_w2_g(b: _HostBuilder):
    # variant = số β'-đỉnh trong ba đỉnh kề của v
    v = b.vertex()
    for i in range(3):
        if i < b.variant:
            b.beta_prime4(v)
        else:
            b.beta(v)


def _h_w3_f(b: _HostBuilder):
    v = b.vertex()
    if b.variant == 1:
        b.spoke(v)
        b.spoke(v)
    elif b.variant == 2:
        b.alpha_arm(v)
        b.anchor_at(v)
    else:
        b.pendant(v)
        b.anchor_at(v, 2)
    b.gamma4(v)


def _h_w3_g(b: _HostBuilder):
    v = b.vertex()
    b.gamma4(v)
    b.gamma4(v)
    b.anchor_at(v)


def _h_w3_h(b: _HostBuilder):
    v = b.vertex()
    b.pendant(v)
    for _ in range(4):
        b.gamma4(v)
    b.anchor_at(v)


def _h_w3_i(b: _HostBuilder):
    v = b.vertex()
    b.pendant(v)
    for _ in range(3):
        b.gamma4(v)
    b.anchor_at(v)


def _h_w3_j1(b: _HostBuilder):
    v = b.vertex()
    b.alpha_arm(v)
    b.alpha_arm(v)
    b.anchor_at(v, 2)


def _h_w3_j2(b: _HostBuilder):
    v = b.vertex()
    b.alpha_arm(v)
    b.spoke(v)
    b.gamma4(v)
    b.anchor_at(v)


def _h_w3_j3(b: _HostBuilder):
    v = b.vertex()
    b.spoke(v)
    for _ in range(3):
        b.gamma4(v)


def _h_w3_k(b: _HostBuilder):
    v = b.vertex()
    if b.variant == 1:
        # γ3b
        b.spoke(v)
        b.spoke(v)
        b.beta(v)
    elif b.variant == 2:
        # γ3a
        b.alpha_arm(v)
        b.beta(v)
        b.beta(v)
    else:
        b.pendant(v)
        for _ in range(3):
            b.beta(v)


def _h_t1(b: _HostBuilder):
    v, z, z2 = b.vertex(), b.vertex(), b.vertex()
    for x, y in ((v, z), (v, z2), (z, z2)):
        b.edge(x, y)
    b.anchor_at(v, 2 if b.variant == 1 else 1)


def _h_t2(b: _HostBuilder):
    z, v, v2 = b.vertex(), b.vertex(), b.vertex()
    for x, y in ((z, v), (z, v2), (v, v2)):
        b.edge(x, y)
    if b.variant == 1:
        b.pendant(v)
    elif b.variant == 2:
        b.spoke(v)
    b.anchor_at(v)
    b.anchor_at(v2)


def _h_q1(b: _HostBuilder):
    z, y, y2, z2 = b.vertex(), b.vertex(), b.vertex(), b.vertex()
    for x, t in ((z, y), (y, y2), (y2, z2), (z2, z)):
        b.edge(x, t)
    b.anchor_at(z)
    b.anchor_at(z2)


def _h_q2(b: _HostBuilder, common: bool):
    v, z, z2 = b.vertex(), b.vertex(), b.vertex()
    b.edge(v, z)
    b.edge(v, z2)
    b.pendant(v)
    b.anchor_at(v, 2 if b.variant == 1 else 1)
    if common:
        y = b.vertex()
        b.edge(z, y)
        b.edge(z2, y)
    else:
        y, y2 = b.vertex(), b.vertex()
        b.edge(z, y)
        b.edge(z2, y2)
        b.edge(y, y2)
    b.anchor_at(z)
    b.anchor_at(z2)


_W3_COMMON = {"A": _h_w3_a, "B": _h_w3_b, "C": _h_w3_c, "D": _h_w3_d, "E": _h_high}
_W2_COMMON = {"A": _h_w3_a, "B": _h_w2_b, "C": _h_high}
_W2_83 = {**_W2_COMMON, "D": _h_w2_d, "E": _h_w2_e, "F": _h_w2_f, "G": _h_w2_g}

HOSTS: Dict[Catalog, Dict[str, Callable[[_HostBuilder], None]]] = {
    Catalog.W3_52: _W3_COMMON,
    Catalog.W3_83: {**_W3_COMMON, "F": _h_w3_f, "G": _h_w3_g, "H": _h_w3_h, "I": _h_w3_i,
                    "J1": _h_w3_j1, "J2": _h_w3_j2, "J3": _h_w3_j3, "K": _h_w3_k},
    Catalog.W2_52: _W2_COMMON,
    Catalog.W2_83: _W2_83,
    Catalog.DEGEN_TRI: {"T1": _h_t1, "T2": _h_t2},
    Catalog.DEGEN_4CYC: {"Q1": _h_q1, "Q2A": lambda b: _h_q2(b, True), "Q2B": lambda b: _h_q2(b, False)},
}

HOST_VARIANTS = 3


def config_host(catalog: Catalog, tag: str, variant: int = 0) -> Graph:
    """Đồ thị chủ mà detect_first(·, catalog) trả về đúng loại tag"""
    recipes = HOSTS.get(catalog)
    if recipes is None or tag not in catalog_tags(catalog) or tag not in recipes:
        raise InvalidParams(f"Không có đồ thị chủ cho {catalog.name}.{tag}")
    if not 0 <= variant < HOST_VARIANTS:
        raise InvalidParams(f"variant phải trong 0..{HOST_VARIANTS - 1}")
    b = _HostBuilder(variant)
    recipes[tag](b)
    return b.graph()


# --- Điểm vào chung ---

def generate(spec: GenSpec, gen_config: Optional[dict] = None) -> Graph:
    gen_config = gen_config or {}
    kind = spec.kind
    if kind == "cycle":
        return cycle(int(spec.param("n", 5)))
    if kind == "path":
        return path(int(spec.param("n", 3)))
    if kind == "tree":
        return tree(int(spec.param("n", 10)), spec.seed)
    if kind == "random_mad":
        return random_mad(int(spec.param("n", 40)), Fraction(spec.param("bound", "8/3")), spec.seed,
                          int(gen_config.get("batch_size", 8)),
                          int(gen_config.get("max_attempts_factor", 6)))
    if kind == "cubic_plus_pendants":
        return cubic_plus_pendants(str(spec.param("base", "k4")))
    if kind == "named":
        return named(str(spec.param("name", "petersen")))
    if kind == "nonred_gadget":
        return nonred_gadget(str(spec.param("side", "left")), bool(spec.param("perturbed", False)))
    if kind == "config_host":
        try:
            catalog = Catalog.parse(str(spec.param("catalog", "3w83")))
        except ValueError as e:
            raise InvalidParams(str(e)) from None
        return config_host(catalog, str(spec.param("tag", "A")), int(spec.param("variant", 0)))
    raise InvalidParams(f"Loại sinh không hợp lệ: {kind!r} (có: {', '.join(KINDS)})")
