"""
Phát hiện cấu hình (configuration) trong đồ thị.

Mỗi danh mục (catalog) là danh sách loại cấu hình theo thứ tự ưu tiên. Mỗi loại có
một hàm nhận dạng neo tại một đỉnh: hàm trả về vai trò (role -> đỉnh), tập cạnh lõi
(core) và phần mở rộng (cạnh/đỉnh được phép đổi trọng số khi mở rộng).

Danh mục:
  W3_52, W3_83      - khử được với trọng số cạnh {1,2,3}
  W2_52, W2_83      - khử được với trọng số toàn phần {1,2}
  S52, S83_12, S83_123 - danh sách không tránh được (từ phóng điện), ánh xạ sang danh mục khử được
  DEGEN_TRI, DEGEN_4CYC - các trường hợp suy biến (tam giác, chu trình 4), ưu tiên cao nhất
  NONRED            - hai mẫu không khử được, chỉ sinh ra từ gen, không bao giờ từ phát hiện
"""
from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import combinations
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Tuple

from errors import MappingFailed
from graph_core import (GAMMA_3A, GAMMA_3B, GAMMA_4, GAMMA_NONE, Graph, gamma_kind, is_alpha,
                        is_beta12, is_beta123, is_beta_prime)


class Catalog(Enum):
    W3_52 = "3w52"
    W2_52 = "2w52"
    W2_83 = "2w83"
    W3_83 = "3w83"
    S52 = "s52"
    S83_12 = "s83-12"
    S83_123 = "s83-123"
    DEGEN_TRI = "tri"
    DEGEN_4CYC = "4cyc"
    NONRED = "nonred"

    @classmethod
    def parse(cls, text: str) -> "Catalog":
        for catalog in cls:
            if text in (catalog.value, catalog.name):
                return catalog
        raise ValueError(f"Danh mục không hợp lệ: {text!r}")


@dataclass(frozen=True)
class ConfigKind:
    catalog: Catalog
    tag: str

    def __post_init__(self):
        if self.tag not in catalog_tags(self.catalog):
            raise ValueError(f"Tag {self.tag!r} không thuộc danh mục {self.catalog.name}")

    def __str__(self) -> str:
        return f"{self.catalog.name}.{self.tag}"


@dataclass(frozen=True)
class ConfigurationInstance:
    kind: ConfigKind
    roles: Dict[str, int] = field(hash=False)
    core: frozenset
    extra_deletions: frozenset = frozenset()
    # Phần mở rộng cho chế độ TOTAL2: cạnh còn trong đồ thị dẫn xuất và đỉnh được đổi trọng số
    extra_edges: frozenset = frozenset()
    extra_vertices: frozenset = frozenset()

    def describe(self, g: Graph) -> str:
        binding = " ".join(f"{name}={v}" for name, v in self.roles.items())
        core = ",".join(f"{u}-{v}" for u, v in sorted(g.endpoints(e) for e in self.core))
        return f"{self.kind} {binding} core=[{core}]"


class _Match(NamedTuple):
    roles: Dict[str, int]
    core: frozenset
    extra_edges: frozenset = frozenset()
    extra_vertices: frozenset = frozenset()


class _Context:
    """Bậc và phân loại đỉnh tính một lần cho mỗi lượt phát hiện"""

    def __init__(self, g: Graph):
        self.g = g
        self.deg = [g.degree(v) for v in g.vertices()]
        self.alpha = [is_alpha(g, v) for v in g.vertices()]
        self.beta12 = [is_beta12(g, v) for v in g.vertices()]
        self.beta123 = [is_beta123(g, v) for v in g.vertices()]
        self.beta_prime = [is_beta_prime(g, v) for v in g.vertices()]
        self.gamma = [gamma_kind(g, v) for v in g.vertices()]

    def nbrs(self, v: int) -> Tuple[int, ...]:
        return self.g.neighbors(v)

    def of_degree(self, v: int, *degrees: int) -> List[int]:
        return [u for u in self.g.neighbors(v) if self.deg[u] in degrees]

    def big(self, v: int) -> List[int]:
        return [u for u in self.g.neighbors(v) if self.deg[u] >= 3]

    def gammas(self, v: int) -> List[int]:
        return [u for u in self.g.neighbors(v) if self.gamma[u] != GAMMA_NONE]

    def is_gamma(self, v: int) -> bool:
        return self.gamma[v] != GAMMA_NONE

    def other(self, z: int, v: int) -> int:
        """Đỉnh kề còn lại của 2-đỉnh z"""
        a, b = self.g.neighbors(z)
        return b if a == v else a

    def e(self, u: int, v: int) -> int:
        eid = self.g.edge_id(u, v)
        if eid is None:
            raise MappingFailed(f"{u}-{v} không phải cạnh")
        return eid

    def star(self, v: int) -> List[int]:
        return list(self.g.incident_edges(v))

    def has_edge(self, u: int, v: int) -> bool:
        return self.g.has_edge(u, v)


def _numbered(prefix: str, vertices: Iterable[int]) -> Dict[str, int]:
    return {f"{prefix}{i}": x for i, x in enumerate(vertices, start=1)}


def _match(roles, core, extra_edges=(), extra_vertices=()) -> _Match:
    return _Match(dict(roles), frozenset(core), frozenset(extra_edges), frozenset(extra_vertices))


# --- Tập F_v của γ-đỉnh ---

def _f_set(c: _Context, v: int, x: int) -> List[int]:
    kind = c.gamma[v]
    if kind == GAMMA_4:
        u = next(t for t in c.of_degree(v, 1) if t != x)
        return [c.e(v, u)]
    if kind == GAMMA_3A:
        z = next(t for t in c.nbrs(v) if c.alpha[t] and t != x)
        return [c.e(v, z), c.e(z, c.other(z, v))]
    if kind == GAMMA_3B:
        zs = [t for t in c.of_degree(v, 2) if t != x][:2]
        return [c.e(v, t) for t in zs]
    raise MappingFailed(f"Đỉnh {v} không phải γ-đỉnh")


def gamma_f_set(g: Graph, v: int, x: int) -> frozenset:
    """Tập cạnh F_v của γ-đỉnh v ứng với 3+-đỉnh kề x"""
    c = _Context(g)
    if not c.is_gamma(v):
        raise MappingFailed(f"Đỉnh {v} không phải γ-đỉnh")
    if not g.has_edge(v, x) or c.deg[x] < 3:
        raise MappingFailed(f"{x} không phải 3+-đỉnh kề của {v}")
    return frozenset(_f_set(c, v, x))


# --- W3 A–E (cũng là S52 A–D) ---

def _w3_a(c: _Context, v: int) -> Optional[_Match]:
    if c.deg[v] not in (2, 3):
        return None
    ones = c.of_degree(v, 1)
    if not ones:
        return None
    return _match({"v": v, "u": ones[0]}, [c.e(v, ones[0])])


def _w3_b(c: _Context, v: int) -> Optional[_Match]:
    if not 2 <= c.deg[v] <= 4 or any(c.deg[z] != 2 for z in c.nbrs(v)):
        return None
    return _match({"v": v, **_numbered("z", c.nbrs(v))}, c.star(v))


def _w3_c(c: _Context, v: int) -> Optional[_Match]:
    if c.deg[v] != 3:
        return None
    twos = c.of_degree(v, 2)
    for z in twos:
        if not c.alpha[z]:
            continue
        rest = [t for t in twos if t != z]
        if not rest:
            continue
        y = c.other(z, v)
        return _match({"v": v, "z": z, "z'": rest[0], "y": y},
                      [c.e(v, z), c.e(v, rest[0]), c.e(z, y)])
    return None


def _w3_d(c: _Context, v: int) -> Optional[_Match]:
    if c.deg[v] != 4:
        return None
    ones = c.of_degree(v, 1)
    if not ones:
        return None
    u = ones[0]
    small = [z for z in c.of_degree(v, 1, 2) if z != u]
    if not small:
        return None
    return _match({"v": v, "u": u, "z": small[0]}, [c.e(v, u), c.e(v, small[0])])


def _high_degree_core(c: _Context, v: int, ones: List[int], twos: List[int]) -> List[int]:
    core = [c.e(v, x) for x in ones + twos]
    core += [c.e(a, b) for a, b in combinations(twos, 2) if c.has_edge(a, b)]
    return core


def _w3_e(c: _Context, v: int) -> Optional[_Match]:
    d = c.deg[v]
    if d < 5:
        return None
    ones, twos = c.of_degree(v, 1), c.of_degree(v, 2)
    if 3 * len(ones) + 2 * len(twos) < d:
        return None
    roles = {"v": v, **_numbered("u", ones), **_numbered("z", twos)}
    return _match(roles, _high_degree_core(c, v, ones, twos))


def _s52_e(c: _Context, v: int) -> Optional[_Match]:
    d = c.deg[v]
    if d < 5:
        return None
    ones, twos = c.of_degree(v, 1), c.of_degree(v, 2)
    if 3 * len(ones) + len(twos) < 2 * d - 4:
        return None
    roles = {"v": v, **_numbered("u", ones), **_numbered("z", twos)}
    return _match(roles, _high_degree_core(c, v, ones, twos))


# --- W2 A–C ---

def _w2_a(c: _Context, v: int) -> Optional[_Match]:
    if not 1 <= c.deg[v] <= 3:
        return None
    ones = c.of_degree(v, 1)
    if not ones:
        return None
    return _match({"v": v, "u": ones[0]}, [c.e(v, ones[0])])


def _w2_b(c: _Context, v: int) -> Optional[_Match]:
    if not 2 <= c.deg[v] <= 4:
        return None
    small = c.of_degree(v, 1, 2)
    if len(small) < 2:
        return None
    z1, z2 = small[:2]
    roles = {"v": v, "z": z1, "z'": z2}
    extra_edges, extra_vertices = [], []
    for z, name in ((z1, "y"), (z2, "y'")):
        if c.deg[z] == 2:
            y = c.other(z, v)
            roles[name] = y
            extra_edges.append(c.e(z, y))
            extra_vertices.append(y)
    return _match(roles, [c.e(v, z1), c.e(v, z2)], extra_edges, extra_vertices)


def _w2_c(c: _Context, v: int) -> Optional[_Match]:
    d = c.deg[v]
    if d < 5:
        return None
    small = c.of_degree(v, 1, 2)
    if 2 * len(small) < d - 1:
        return None
    chosen = small[:d // 2]
    return _match({"v": v, **_numbered("u", chosen)}, [c.e(v, u) for u in chosen])


# --- W2_83 D–G (β = β12, β′) ---

def _beta_two(c: _Context, v: int) -> int:
    return c.of_degree(v, 2)[0]


def _second_shell(c: _Context, y: int, z: int) -> Tuple[List[int], List[int]]:
    """Nếu y là 2-đỉnh thì cạnh yu và đỉnh u phía bên kia cũng được đổi"""
    if c.deg[y] != 2:
        return [], []
    u = c.other(y, z)
    return [c.e(y, u)], [u]


def _w2_d(c: _Context, v: int) -> Optional[_Match]:
    if not c.beta12[v]:
        return None
    partners = [t for t in c.nbrs(v) if c.beta12[t]]
    if not partners:
        return None
    v2 = partners[0]
    z, z2 = _beta_two(c, v), _beta_two(c, v2)
    y, y2 = c.other(z, v), c.other(z2, v2)
    extra_edges, extra_vertices = [c.e(z, y), c.e(z2, y2)], [y, y2]
    for a, b in ((y, z), (y2, z2)):
        es, vs = _second_shell(c, a, b)
        extra_edges += es
        extra_vertices += vs
    return _match({"v": v, "v'": v2, "z": z, "z'": z2, "y": y, "y'": y2},
                  [c.e(z, v), c.e(v, v2), c.e(v2, z2)], extra_edges, extra_vertices)


def _w2_e(c: _Context, v: int) -> Optional[_Match]:
    if not c.beta12[v]:
        return None
    primes = [t for t in c.nbrs(v) if c.beta_prime[t]]
    if not primes:
        return None
    v2 = primes[0]
    z = _beta_two(c, v)
    y = c.other(z, v)
    ones = c.of_degree(v2, 1)
    roles = {"v": v, "v'": v2, "z": z, "y": y}
    if c.deg[v2] == 4:
        roles["u"] = ones[0]
        core = [c.e(z, v), c.e(v, v2), c.e(v2, ones[0])]
    else:
        roles.update(_numbered("u", ones))
        core = [c.e(v, z), c.e(v, v2)] + [c.e(v2, u) for u in ones]
    return _match(roles, core, [c.e(z, y)], [y])


def _beta_prime4(c: _Context, v: int) -> bool:
    return c.beta_prime[v] and c.deg[v] == 4


def _w2_f(c: _Context, v: int) -> Optional[_Match]:
    if not _beta_prime4(c, v):
        return None
    partners = [t for t in c.nbrs(v) if _beta_prime4(c, t)]
    if len(partners) < 2:
        return None
    z, z2 = partners[:2]
    u, y, y2 = c.of_degree(v, 1)[0], c.of_degree(z, 1)[0], c.of_degree(z2, 1)[0]
    roles = {"v": v, "u": u, "z": z, "z'": z2, "y": y, "y'": y2}
    if c.has_edge(z, z2):
        core = [c.e(v, z), c.e(v, z2), c.e(z, z2), c.e(v, u), c.e(z, y), c.e(z2, y2)]
    else:
        core = [c.e(y, z), c.e(z, v), c.e(v, u), c.e(v, z2), c.e(z2, y2)]
    return _match(roles, core)


def _w2_g(c: _Context, v: int) -> Optional[_Match]:
    if c.deg[v] != 3:
        return None
    ns = c.nbrs(v)
    if not all(c.beta12[z] or _beta_prime4(c, z) for z in ns):
        return None
    for z, z2 in combinations(ns, 2):
        if c.has_edge(z, z2) and _beta_prime4(c, z) and _beta_prime4(c, z2):
            x = next(t for t in ns if t not in (z, z2))
            y, y2 = c.of_degree(z, 1)[0], c.of_degree(z2, 1)[0]
            return _match({"v": v, "z": z, "z'": z2, "y": y, "y'": y2, "x": x},
                          [c.e(v, z), c.e(v, z2), c.e(z, z2), c.e(z, y), c.e(z2, y2)],
                          [c.e(v, x)], [x])
    betas = [z for z in ns if c.beta12[z]]
    for z1, z2 in combinations(betas, 2):
        y = _beta_two(c, z1)
        if y == _beta_two(c, z2):
            return _match({"v": v, "z1": z1, "z2": z2, "y": y},
                          [c.e(v, z1), c.e(v, z2), c.e(z1, y), c.e(z2, y)])
    roles = {"v": v}
    core = c.star(v)
    extra_edges, extra_vertices = [], []
    for i, z in enumerate(ns, start=1):
        roles[f"z{i}"] = z
        if c.beta12[z]:
            y = _beta_two(c, z)
            far = c.other(y, z)
            roles[f"y{i}"], roles[f"y'{i}"] = y, far
            extra_edges.append(c.e(y, far))
            extra_vertices.append(far)
        else:
            y = c.of_degree(z, 1)[0]
            roles[f"y{i}"] = y
        core.append(c.e(z, y))
    return _match(roles, core, extra_edges, extra_vertices)


# --- W3_83 F–K (β = β123, γ) ---

def _w3_f(c: _Context, v: int) -> Optional[_Match]:
    if not c.is_gamma(v):
        return None
    partners = c.gammas(v)
    if not partners:
        return None
    v2 = partners[0]
    core = [c.e(v, v2)] + _f_set(c, v, v2) + _f_set(c, v2, v)
    return _match({"v": v, "v'": v2}, core)


def _w3_g(c: _Context, v: int) -> Optional[_Match]:
    if c.deg[v] != 3:
        return None
    zs = c.gammas(v)
    if len(zs) < 2:
        return None
    z, z2 = zs[:2]
    core = [c.e(v, z), c.e(v, z2)] + _f_set(c, z, v) + _f_set(c, z2, v)
    return _match({"v": v, "z": z, "z'": z2}, core)


def _gamma_core(c: _Context, v: int, ones: List[int], zs: List[int]) -> List[int]:
    core = [c.e(v, x) for x in ones + zs]
    for z in zs:
        core += _f_set(c, z, v)
    return core


def _w3_h(c: _Context, v: int) -> Optional[_Match]:
    ones, zs = c.of_degree(v, 1), c.gammas(v)
    p1, q = len(ones), len(zs)
    if p1 + 2 * q < c.deg[v] or p1 + q <= 4:
        return None
    return _match({"v": v, **_numbered("u", ones), **_numbered("z", zs)},
                  _gamma_core(c, v, ones, zs))


def _s83_h(c: _Context, v: int) -> Optional[_Match]:
    if c.deg[v] not in (6, 7):
        return None
    ones, zs = c.of_degree(v, 1), c.gammas(v)
    if not ones or len(zs) < 4:
        return None
    return _match({"v": v, **_numbered("u", ones), **_numbered("z", zs)},
                  _gamma_core(c, v, ones, zs))


def _w3_i(c: _Context, v: int) -> Optional[_Match]:
    if c.deg[v] != 5:
        return None
    ones, zs = c.of_degree(v, 1), c.gammas(v)
    if not ones or len(zs) < 3:
        return None
    return _match({"v": v, "u": ones[0], **_numbered("z", zs[:3])},
                  _gamma_core(c, v, ones[:1], zs[:3]))


def _alphas(c: _Context, v: int) -> List[int]:
    return [z for z in c.nbrs(v) if c.alpha[z]]


def _w3_j1(c: _Context, v: int) -> Optional[_Match]:
    if c.deg[v] != 4:
        return None
    al = _alphas(c, v)
    if len(al) < 2:
        return None
    z, z2 = al[:2]
    y, y2 = c.other(z, v), c.other(z2, v)
    return _match({"v": v, "z": z, "z'": z2, "y": y, "y'": y2},
                  [c.e(v, z), c.e(v, z2), c.e(z, y), c.e(z2, y2)])


def _w3_j2(c: _Context, v: int) -> Optional[_Match]:
    if c.deg[v] != 4:
        return None
    al = _alphas(c, v)
    plain = [u for u in c.of_degree(v, 2) if not c.alpha[u]]
    xs = c.gammas(v)
    if not al or not plain or not xs:
        return None
    z, u, x = al[0], plain[0], xs[0]
    y = c.other(z, v)
    core = [c.e(y, z), c.e(z, v), c.e(v, u), c.e(v, x)] + _f_set(c, x, v)
    return _match({"v": v, "z": z, "y": y, "u": u, "x": x}, core)


def _w3_j3(c: _Context, v: int) -> Optional[_Match]:
    if c.deg[v] != 4:
        return None
    twos, xs = c.of_degree(v, 2), c.gammas(v)
    if not twos or len(xs) < 3:
        return None
    core = c.star(v)
    for x in xs[:3]:
        core += _f_set(c, x, v)
    return _match({"v": v, "z": twos[0], **_numbered("x", xs[:3])}, core)


def _w3_k(c: _Context, v: int) -> Optional[_Match]:
    if not c.is_gamma(v):
        return None
    big = c.big(v)
    if not big or not all(c.beta123[z] for z in big):
        return None
    closed = set(c.nbrs(v)) | {v}
    roles = {"v": v}
    core = c.star(v)
    for i, z in enumerate(big, start=1):
        twos = c.of_degree(z, 2)
        y = next((t for t in twos if t not in closed), twos[0])
        roles[f"z{i}"], roles[f"y{i}"] = z, y
        core.append(c.e(z, y))
    if c.gamma[v] == GAMMA_3A:
        u = _alphas(c, v)[0]
        u2 = c.other(u, v)
        roles["u"], roles["u'"] = u, u2
        core.append(c.e(u, u2))
    return _match(roles, core)


def _s83_j(c: _Context, v: int) -> Optional[_Match]:
    """4-đỉnh với p + q + r >= 5 (p: 2-đỉnh kề, q: γ-đỉnh kề, r: α-đỉnh kề)"""
    if c.deg[v] != 4:
        return None
    p, q, r = len(c.of_degree(v, 2)), len(c.gammas(v)), len(_alphas(c, v))
    if p + q + r < 5:
        return None
    return _match({"v": v, **_numbered("x", c.nbrs(v))}, c.star(v))


# --- Trường hợp suy biến ---

def _tri1(c: _Context, v: int) -> Optional[_Match]:
    if c.deg[v] not in (3, 4):
        return None
    for z, z2 in combinations(c.of_degree(v, 2), 2):
        if c.has_edge(z, z2):
            return _match({"v": v, "z": z, "z'": z2}, [c.e(v, z), c.e(v, z2), c.e(z, z2)])
    return None


def _triangle_side(c: _Context, s: int, z: int) -> Optional[str]:
    d = c.deg[s]
    if d == 3:
        return "plain"
    ones = c.of_degree(s, 1)
    if d in (4, 5) and ones:
        return "pendant"
    if d == 4 and any(t != z for t in c.of_degree(s, 2)):
        return "flex"
    return None


def _tri2(c: _Context, z: int) -> Optional[_Match]:
    if c.deg[z] != 2:
        return None
    v, v2 = c.nbrs(z)
    if not c.has_edge(v, v2):
        return None
    sides = [_triangle_side(c, s, z) for s in (v, v2)]
    if None in sides or sides.count("flex") > 1:
        return None
    roles = {"z": z, "v": v, "v'": v2}
    core = [c.e(z, v), c.e(z, v2), c.e(v, v2)]
    for s, kind, name in ((v, sides[0], "u"), (v2, sides[1], "u'")):
        if c.deg[s] >= 4:
            u = min((t for t in c.nbrs(s) if t != z), key=lambda t: (c.deg[t], t))
            roles[name] = u
            core.append(c.e(s, u))
        if kind == "flex":
            roles["flex_side"] = s
    return _match(roles, core)


def _q1(c: _Context, z: int) -> Optional[_Match]:
    if not c.beta123[z]:
        return None
    for z2 in c.nbrs(z):
        if z2 <= z or not c.beta123[z2]:
            continue
        for y in c.of_degree(z, 2):
            for y2 in c.of_degree(z2, 2):
                if y != y2 and c.has_edge(y, y2):
                    return _match({"z": z, "z'": z2, "y": y, "y'": y2},
                                  [c.e(z, z2), c.e(z, y), c.e(y, y2), c.e(z2, y2)])
    return None


def _q2(c: _Context, v: int, common: bool) -> Optional[_Match]:
    if c.deg[v] not in (4, 5):
        return None
    ones = c.of_degree(v, 1)
    if not ones:
        return None
    u = ones[0]
    betas = [z for z in c.nbrs(v) if c.beta123[z]]
    for z, z2 in combinations(betas, 2):
        for y in c.of_degree(z, 2):
            for y2 in c.of_degree(z2, 2):
                if common and y == y2:
                    return _match({"v": v, "u": u, "z": z, "z'": z2, "y": y},
                                  [c.e(v, z), c.e(v, z2), c.e(z, y), c.e(z2, y), c.e(v, u)])
                if not common and y != y2 and c.has_edge(y, y2):
                    return _match({"v": v, "u": u, "z": z, "z'": z2, "y": y, "y'": y2},
                                  [c.e(v, z), c.e(v, z2), c.e(z, y), c.e(z2, y2),
                                   c.e(y, y2), c.e(v, u)])
    return None


def _q2a(c: _Context, v: int) -> Optional[_Match]:
    return _q2(c, v, common=True)


def _q2b(c: _Context, v: int) -> Optional[_Match]:
    return _q2(c, v, common=False)


# --- Bảng danh mục ---

Detector = Callable[[_Context, int], Optional[_Match]]

_W3_BASE: List[Tuple[str, Detector]] = [("A", _w3_a), ("B", _w3_b), ("C", _w3_c), ("D", _w3_d)]
_W2_BASE: List[Tuple[str, Detector]] = [("A", _w2_a), ("B", _w2_b), ("C", _w2_c)]
_W2_83: List[Tuple[str, Detector]] = _W2_BASE + [("D", _w2_d), ("E", _w2_e), ("F", _w2_f), ("G", _w2_g)]

_DETECTORS: Dict[Catalog, List[Tuple[str, Detector]]] = {
    Catalog.W3_52: _W3_BASE + [("E", _w3_e)],
    Catalog.S52: _W3_BASE + [("E", _s52_e)],
    Catalog.W2_52: _W2_BASE,
    Catalog.W2_83: _W2_83,
    Catalog.S83_12: _W2_83,
    Catalog.W3_83: _W3_BASE + [("E", _w3_e), ("F", _w3_f), ("G", _w3_g), ("H", _w3_h), ("I", _w3_i),
                               ("J1", _w3_j1), ("J2", _w3_j2), ("J3", _w3_j3), ("K", _w3_k)],
    Catalog.S83_123: _W3_BASE + [("E", _w3_e), ("F", _w3_f), ("G", _w3_g), ("H", _s83_h), ("I", _w3_i),
                                 ("J", _s83_j), ("K", _w3_k)],
    Catalog.DEGEN_TRI: [("T1", _tri1), ("T2", _tri2)],
    Catalog.DEGEN_4CYC: [("Q1", _q1), ("Q2A", _q2a), ("Q2B", _q2b)],
    Catalog.NONRED: [],
}

_NONRED_TAGS = ("LEFT", "RIGHT")

# Danh mục dùng trọng số cạnh {1,2,3}: cạnh cô lập sinh ra sau khi xóa lõi cũng bị xóa
EDGE3_CATALOGS = frozenset({Catalog.W3_52, Catalog.W3_83, Catalog.S52, Catalog.S83_123,
                            Catalog.DEGEN_TRI, Catalog.DEGEN_4CYC})
STRUCTURAL_CATALOGS = frozenset({Catalog.S52, Catalog.S83_12, Catalog.S83_123})

_DEGENERATE_BEFORE: Dict[Catalog, Tuple[Catalog, ...]] = {
    Catalog.W3_52: (Catalog.DEGEN_TRI, Catalog.DEGEN_4CYC),
    Catalog.W3_83: (Catalog.DEGEN_TRI, Catalog.DEGEN_4CYC),
    Catalog.S83_123: (Catalog.DEGEN_TRI, Catalog.DEGEN_4CYC),
    Catalog.W2_52: (Catalog.DEGEN_TRI,),
    Catalog.W2_83: (Catalog.DEGEN_TRI,),
    Catalog.S52: (Catalog.DEGEN_TRI,),
    Catalog.S83_12: (Catalog.DEGEN_TRI,),
}


def catalog_tags(catalog: Catalog) -> Tuple[str, ...]:
    if catalog is Catalog.NONRED:
        return _NONRED_TAGS
    return tuple(tag for tag, _ in _DETECTORS[catalog])


def all_kinds() -> List[ConfigKind]:
    return [ConfigKind(catalog, tag) for catalog in Catalog for tag in catalog_tags(catalog)]


def isolated_edge_cleanup(g: Graph, deleted: Iterable[int]) -> frozenset:
    """Các cạnh trở thành cạnh cô lập sau khi xóa `deleted`"""
    deleted = set(deleted)
    lost: Dict[int, int] = {}
    for eid in deleted:
        for x in g.endpoints(eid):
            lost[x] = lost.get(x, 0) + 1
    result = set()
    for x in lost:
        if g.degree(x) - lost[x] != 1:
            continue
        eid = next(e for e in g.incident_edges(x) if e not in deleted)
        y = g.other_end(eid, x)
        if g.degree(y) - lost.get(y, 0) == 1:
            result.add(eid)
    return frozenset(result)


def _build(g: Graph, catalog: Catalog, tag: str, m: _Match) -> ConfigurationInstance:
    extra_deletions = isolated_edge_cleanup(g, m.core) if catalog in EDGE3_CATALOGS else frozenset()
    return ConfigurationInstance(ConfigKind(catalog, tag), m.roles, m.core, extra_deletions,
                                 m.extra_edges, m.extra_vertices)


def _scan(g: Graph, c: _Context, catalog: Catalog, first_only: bool) -> List[ConfigurationInstance]:
    found: List[ConfigurationInstance] = []
    seen = set()
    for tag, detector in _DETECTORS[catalog]:
        for v in g.vertices():
            m = detector(c, v)
            if m is None:
                continue
            key = (tag, m.core)
            if key in seen:
                continue
            seen.add(key)
            found.append(_build(g, catalog, tag, m))
            if first_only:
                return found
    return found


def detect_all(g: Graph, catalog: Catalog, include_degenerate: bool = True) -> List[ConfigurationInstance]:
    """Mọi cấu hình của danh mục, theo thứ tự ưu tiên; trường hợp suy biến đứng trước"""
    c = _Context(g)
    found: List[ConfigurationInstance] = []
    if include_degenerate:
        for degenerate in _DEGENERATE_BEFORE.get(catalog, ()):
            found += _scan(g, c, degenerate, first_only=False)
    return found + _scan(g, c, catalog, first_only=False)


def detect_first(g: Graph, catalog: Catalog, include_degenerate: bool = True) -> Optional[ConfigurationInstance]:
    c = _Context(g)
    order = (_DEGENERATE_BEFORE.get(catalog, ()) if include_degenerate else ()) + (catalog,)
    for current in order:
        found = _scan(g, c, current, first_only=True)
        if found:
            return found[0]
    return None


def detect_kind(g: Graph, kind: ConfigKind, v: int) -> Optional[ConfigurationInstance]:
    """Nhận dạng đúng một loại cấu hình neo tại đỉnh v"""
    detector = dict(_DETECTORS[kind.catalog]).get(kind.tag)
    if detector is None:
        return None
    m = detector(_Context(g), v)
    return _build(g, kind.catalog, kind.tag, m) if m else None


# --- Ánh xạ cấu trúc -> khử được ---

def implication_holds(p1: int, p2: int, d: int) -> bool:
    """3p1 + p2 >= 2d - 4 kéo theo 3p1 + 2p2 >= d và 2p1 + 2p2 >= d - 1 (với d >= 5)"""
    if 3 * p1 + p2 < 2 * d - 4:
        return True
    return 3 * p1 + 2 * p2 >= d and 2 * p1 + 2 * p2 >= d - 1


def _require(g: Graph, kind: ConfigKind, v: int, source: ConfigurationInstance) -> ConfigurationInstance:
    inst = detect_kind(g, kind, v)
    if inst is None:
        raise MappingFailed(f"Không ánh xạ được {source.kind} tại {v} sang {kind}")
    return inst


_TOTAL2_52 = {"A": "A", "B": "B", "C": "B", "D": "B", "E": "C"}


def structural_to_reducible(inst: ConfigurationInstance, g: Graph, total: bool = False) -> ConfigurationInstance:
    """Đổi cấu hình cấu trúc sang cấu hình khử được tại cùng vị trí.

    `total` chọn danh mục đích cho S52: W2_52 (trọng số toàn phần) thay vì W3_52.
    Cấu hình không thuộc danh mục cấu trúc được trả lại nguyên vẹn.
    """
    catalog, tag = inst.kind.catalog, inst.kind.tag
    if catalog not in STRUCTURAL_CATALOGS:
        return inst
    v = inst.roles["v"]
    if catalog is Catalog.S83_12:
        return replace(inst, kind=ConfigKind(Catalog.W2_83, tag))
    if catalog is Catalog.S52:
        if total:
            return _require(g, ConfigKind(Catalog.W2_52, _TOTAL2_52[tag]), v, inst)
        if tag == "E":
            return _require(g, ConfigKind(Catalog.W3_52, "E"), v, inst)
        return replace(inst, kind=ConfigKind(Catalog.W3_52, tag))
    if tag == "H":
        return _require(g, ConfigKind(Catalog.W3_83, "H"), v, inst)
    if tag == "J":
        c = _Context(g)
        alphas = _alphas(c, v)
        rest = [t for t in c.nbrs(v) if t != alphas[0]] if alphas else []
        if len(alphas) >= 2:
            target = "J1"
        elif alphas and c.gammas(v) and any(not c.alpha[t] for t in c.of_degree(v, 2)):
            target = "J2"
        elif alphas and all(c.is_gamma(t) for t in rest):
            target = "J3"
        elif all(c.deg[t] == 2 for t in c.nbrs(v)):
            target = "B"
        else:
            raise MappingFailed(f"J tại {v} không rơi vào trường hợp nào")
        return _require(g, ConfigKind(Catalog.W3_83, target), v, inst)
    return replace(inst, kind=ConfigKind(Catalog.W3_83, tag))


def reducible_catalog(catalog: Catalog, total: bool = False) -> Catalog:
    if catalog is Catalog.S52:
        return Catalog.W2_52 if total else Catalog.W3_52
    return {Catalog.S83_12: Catalog.W2_83, Catalog.S83_123: Catalog.W3_83}.get(catalog, catalog)


def verify_binding(g: Graph, inst: ConfigurationInstance) -> bool:
    """Kiểm tra lại instance trên đồ thị: nhận dạng lại tại cùng đỉnh neo cho cùng lõi"""
    if inst.kind.catalog is Catalog.NONRED:
        return all(g.is_live(e) for e in inst.core)
    anchor = inst.roles.get("v", inst.roles.get("z"))
    if inst.kind.catalog is Catalog.DEGEN_4CYC and inst.kind.tag == "Q1":
        anchor = inst.roles["z"]
    if inst.kind.catalog is Catalog.DEGEN_TRI and inst.kind.tag == "T2":
        anchor = inst.roles["z"]
    again = detect_kind(g, inst.kind, anchor)
    return again is not None and again.core == inst.core
