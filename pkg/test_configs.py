import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_graphs
from configs import (Catalog, ConfigKind, all_kinds, catalog_tags, detect_all, detect_first,
                     gamma_f_set, implication_holds, reducible_catalog,
                     structural_to_reducible, verify_binding)
from errors import MappingFailed
from gen import HOST_VARIANTS, HOSTS, config_host, cubic_plus_pendants, named
from graph_core import Graph
from search import WeightSearch
from weighting import Mode, Weighting

HOST_CASES = [(catalog, tag, variant)
              for catalog, recipes in HOSTS.items() for tag in recipes for variant in range(HOST_VARIANTS)]
DETECT_CATALOGS = [c for c in Catalog if c is not Catalog.NONRED]


# --- [1] Đồ thị chủ: mỗi loại cấu hình có ít nhất 3 đồ thị ---

def test_every_reducible_kind_has_a_host():
    for catalog in (Catalog.W3_52, Catalog.W2_52, Catalog.W2_83, Catalog.W3_83,
                    Catalog.DEGEN_TRI, Catalog.DEGEN_4CYC):
        assert set(HOSTS[catalog]) == set(catalog_tags(catalog))


@pytest.mark.parametrize("catalog, tag, variant", HOST_CASES,
                         ids=[f"{c.name}.{t}-{v}" for c, t, v in HOST_CASES])
def test_host_detects_its_own_kind(catalog, tag, variant):
    g = config_host(catalog, tag, variant)
    inst = detect_first(g, catalog)
    assert inst is not None
    assert inst.kind == ConfigKind(catalog, tag)
    assert verify_binding(g, inst)


# --- [2] Ví dụ cụ thể ---

def test_path_is_a_pendant_configuration(p3):
    inst = detect_first(p3, Catalog.W3_52)
    assert inst.kind == ConfigKind(Catalog.W3_52, "A")
    assert inst.roles == {"v": 1, "u": 0}
    assert inst.core == frozenset({p3.edge_id(0, 1)})
    # Cạnh còn lại thành cạnh cô lập nên cũng bị xóa
    assert inst.extra_deletions == frozenset({p3.edge_id(1, 2)})
    assert inst.describe(p3) == "W3_52.A v=1 u=0 core=[0-1]"


def test_total_catalogs_do_not_clean_isolated_edges(p3):
    inst = detect_first(p3, Catalog.W2_52)
    assert inst.kind == ConfigKind(Catalog.W2_52, "A")
    assert inst.extra_deletions == frozenset()


def test_cycle_is_a_two_vertex_star(c5):
    inst = detect_first(c5, Catalog.W3_83)
    assert inst.kind == ConfigKind(Catalog.W3_83, "B")
    assert inst.roles["v"] == 0


def test_dense_graphs_have_no_configuration(k4):
    for catalog in DETECT_CATALOGS:
        assert detect_first(k4, catalog) is None
        assert detect_all(k4, catalog) == []
    assert detect_first(named("petersen"), Catalog.S83_123) is None


def test_triangle_with_two_vertices_comes_first():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    # C3 không có 3-đỉnh nên chỉ là sao của 2-đỉnh
    assert detect_first(g, Catalog.W3_83).kind == ConfigKind(Catalog.W3_83, "B")
    h = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    inst = detect_first(h, Catalog.W3_83)
    assert inst.kind == ConfigKind(Catalog.DEGEN_TRI, "T1")
    assert detect_first(h, Catalog.W3_83, include_degenerate=False).kind.catalog is Catalog.W3_83


def test_config_kind_validates_tag():
    with pytest.raises(ValueError):
        ConfigKind(Catalog.W2_52, "D")
    assert str(ConfigKind(Catalog.W3_83, "J2")) == "W3_83.J2"
    assert len(all_kinds()) == sum(len(catalog_tags(c)) for c in Catalog)
    assert Catalog.parse("s83-123") is Catalog.S83_123
    assert Catalog.parse("W2_83") is Catalog.W2_83


# --- [3] Tập F của γ-đỉnh ---

def test_gamma4_f_set_is_the_pendant_edge(pendant_k4):
    assert gamma_f_set(pendant_k4, 0, 1) == frozenset({pendant_k4.edge_id(0, 4)})


def test_gamma3b_f_set_is_both_two_edges():
    g = Graph.from_edges(9, [(0, 1), (0, 2), (0, 6), (1, 4), (2, 4), (4, 5), (6, 7), (6, 8)])
    assert gamma_f_set(g, 0, 6) == frozenset({g.edge_id(0, 1), g.edge_id(0, 2)})
    # x phải là 3+-đỉnh
    with pytest.raises(MappingFailed):
        gamma_f_set(g, 0, 1)


def test_gamma3a_f_set_follows_the_alpha_path():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (0, 6), (6, 3), (6, 5), (3, 5)])
    assert gamma_f_set(g, 0, 6) == frozenset({g.edge_id(0, 1), g.edge_id(1, 2)})


def _gamma_cases():
    gamma3b = Graph.from_edges(9, [(0, 1), (0, 2), (0, 6), (1, 4), (2, 4), (4, 5), (6, 7), (6, 8)])
    gamma3a = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (0, 6), (6, 3), (6, 5), (3, 5)])
    return [(cubic_plus_pendants("k4"), 0, 1), (gamma3b, 0, 6), (gamma3a, 0, 6)]


# Mọi trọng số cố định ngoài F đều chọn được trọng số trên F thỏa mọi cạnh chạm F, trừ vx
@settings(max_examples=80, deadline=None)
@given(st.data())
def test_f_set_alone_satisfies_its_edges(data):
    for g, v, x in _gamma_cases():
        f_set = gamma_f_set(g, v, x)
        fixed = {eid: data.draw(st.integers(1, 3)) for eid in g.edge_ids() if eid not in f_set}
        ends = {y for eid in f_set for y in g.endpoints(eid)}
        touched = {eid for y in ends for eid in g.incident_edges(y)} - {g.edge_id(v, x)}
        search = WeightSearch(g, Mode.EDGE3, Weighting(Mode.EDGE3, fixed), f_set, (), touched)
        assert search.first() is not None


def test_f_set_rejects_non_gamma(k4):
    with pytest.raises(MappingFailed):
        gamma_f_set(k4, 0, 1)


# --- [4] Ánh xạ cấu trúc -> khử được ---

def test_implication_algebra():
    for d in range(5, 40):
        for p1 in range(d + 1):
            for p2 in range(d + 1 - p1):
                assert implication_holds(p1, p2, d)


def test_structural_high_degree_maps_in_both_modes():
    g = config_host(Catalog.W2_52, "C")
    inst = detect_first(g, Catalog.S52)
    assert inst.kind == ConfigKind(Catalog.S52, "E")
    assert structural_to_reducible(inst, g, total=True).kind == ConfigKind(Catalog.W2_52, "C")
    assert structural_to_reducible(inst, g).kind == ConfigKind(Catalog.W3_52, "E")


def test_structural_h_maps_to_reducible_h():
    g = config_host(Catalog.W3_83, "H")
    inst = detect_first(g, Catalog.S83_123)
    assert inst.kind == ConfigKind(Catalog.S83_123, "H")
    mapped = structural_to_reducible(inst, g)
    assert mapped.kind == ConfigKind(Catalog.W3_83, "H")
    assert mapped.roles["v"] == inst.roles["v"]


def test_structural_total_83_is_identity():
    g = config_host(Catalog.W2_83, "F")
    inst = detect_first(g, Catalog.S83_12)
    mapped = structural_to_reducible(inst, g, total=True)
    assert mapped.kind == ConfigKind(Catalog.W2_83, "F")
    assert mapped.core == inst.core


def test_reducible_catalog_table():
    assert reducible_catalog(Catalog.S52) is Catalog.W3_52
    assert reducible_catalog(Catalog.S52, total=True) is Catalog.W2_52
    assert reducible_catalog(Catalog.S83_12) is Catalog.W2_83
    assert reducible_catalog(Catalog.S83_123) is Catalog.W3_83
    assert reducible_catalog(Catalog.W3_83) is Catalog.W3_83


# --- [5] Tính chất trên đồ thị ngẫu nhiên ---

@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=9))
def test_first_is_head_of_all(g):
    for catalog in DETECT_CATALOGS:
        found = detect_all(g, catalog)
        first = detect_first(g, catalog)
        assert (first is None) == (not found)
        if found:
            assert first == found[0]


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=9))
def test_instances_are_well_formed(g):
    for catalog in DETECT_CATALOGS:
        for inst in detect_all(g, catalog):
            assert inst.core
            assert all(g.is_live(e) for e in inst.core)
            assert not inst.core & inst.extra_deletions
            assert all(0 <= v < g.n for v in inst.roles.values())
            assert verify_binding(g, inst)


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=9))
def test_cleanup_leaves_no_new_isolated_edge(g):
    for inst in detect_all(g, Catalog.W3_83):
        removed = inst.core | inst.extra_deletions
        h = g.delete_edges(removed)
        for _, (u, v) in h.edges():
            was_isolated = g.degree(u) == 1 and g.degree(v) == 1
            assert was_isolated or not (h.degree(u) == 1 and h.degree(v) == 1)
