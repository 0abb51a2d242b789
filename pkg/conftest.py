import json
import os
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import strategies as st

from config_manager import ConfigManager
from gen import cubic_plus_pendants, cycle, from_networkx, path, random_mad
from graph_core import Graph
from logger import WeightingLogger


# WEIGHTING_FULL_RUN=1 chạy corpus đúng cỡ nghiệm thu (chậm hơn nhiều)
FULL_RUN = os.environ.get("WEIGHTING_FULL_RUN") == "1"


def corpus_size(default: int, full: int) -> int:
    return full if FULL_RUN else default


def graph_of(n, pairs) -> Graph:
    return Graph.from_edges(n, pairs)


@st.composite
def small_graphs(draw, min_n=1, max_n=8):
    """Đồ thị đơn ngẫu nhiên nhỏ cho hypothesis"""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def disjoint_union(*graphs: Graph) -> Graph:
    """Hợp rời, đỉnh của đồ thị sau được dời lên sau đồ thị trước"""
    pairs, offset = [], 0
    for g in graphs:
        pairs.extend((u + offset, v + offset) for _, (u, v) in g.edges())
        offset += g.n
    return Graph.from_edges(offset, pairs)


@st.composite
def union_graphs(draw, max_n=6):
    """Hợp rời của hai đồ thị nhỏ, thường có nhiều thành phần có cạnh"""
    return disjoint_union(draw(small_graphs(max_n=max_n)), draw(small_graphs(max_n=max_n)))


def corpus_graph(seed: int, bound: Fraction) -> Graph:
    """Đồ thị corpus: n trong 10..60 đổi theo seed, cứ ba seed có một hợp rời hai thành phần"""
    n = 10 + seed % 51
    if seed % 3 == 2:
        half = n // 2
        return disjoint_union(random_mad(half, bound, seed), random_mad(n - half, bound, seed + 100_003))
    return random_mad(n, bound, seed)


def atlas_graphs(max_n: int, connected: bool = True):
    """Mọi đồ thị tối đa 7 đỉnh của networkx, bỏ đồ thị rỗng"""
    for nx_graph in nx.graph_atlas_g():
        n = nx_graph.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        if connected and not nx.is_connected(nx_graph):
            continue
        yield from_networkx(nx_graph)


def has_isolated_edge(g: Graph) -> bool:
    return any(g.degree(u) == 1 and g.degree(v) == 1 for _, (u, v) in g.edges())


@pytest.fixture
def k2():
    return path(2)


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def c3():
    return cycle(3)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def k4():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def pendant_k4():
    return cubic_plus_pendants("k4")


@pytest.fixture
def config_path(tmp_path):
    """config.json tạm, log ghi vào thư mục tạm"""
    path = tmp_path / "config.json"
    path.write_text(json.dumps({
        "log_file": str(tmp_path / "logs" / "weighting.log"),
        "log_level": "DEBUG",
        "output_directory": str(tmp_path / "corpus"),
        "report_directory": str(tmp_path / "reports"),
    }), encoding="utf-8")
    return str(path)


@pytest.fixture
def config_manager(config_path):
    return ConfigManager(config_path)


@pytest.fixture
def logger(tmp_path):
    return WeightingLogger(str(tmp_path / "test.log"), console=False)
