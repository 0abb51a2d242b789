import pytest

from conftest import atlas_graphs, has_isolated_edge
from errors import BudgetExceeded
from gen import gadget_base_weighting, path
from oracle import (OracleBudget, count_extensions, count_proper, enumerate_proper, exists_proper,
                    min_degree_descending)
from reducer import MutableSet, mutable_set
from search import EDGE, WeightSearch
from weighting import Mode, Weighting, is_proper


# --- [1] Ví dụ nhỏ ---

def test_isolated_edge_has_no_edge_weighting(k2):
    assert not exists_proper(k2, Mode.EDGE3)
    assert count_proper(k2, Mode.EDGE3) == 0
    # Hai đỉnh khác trọng số, cạnh tùy ý
    assert count_proper(k2, Mode.TOTAL2) == 4


def test_triangle_needs_distinct_weights(c3):
    assert count_proper(c3, Mode.EDGE3) == 6
    found = enumerate_proper(c3, Mode.EDGE3, limit=10)
    assert len(found) == 6
    assert all(is_proper(c3, w) for w in found)
    assert len({tuple(sorted(w.edge_weights.values())) for w in found}) == 1


def test_every_path_weighting_is_proper(p3):
    assert count_proper(p3, Mode.EDGE3) == 9
    ms = MutableSet(frozenset(p3.edge_ids()))
    assert count_extensions(p3, Weighting(Mode.EDGE3), ms, Mode.EDGE3) == 9


def test_enumeration_is_deterministic(c5):
    first = enumerate_proper(c5, Mode.TOTAL2, limit=7)
    second = enumerate_proper(c5, Mode.TOTAL2, limit=7)
    assert first == second
    assert len(first) == 7
    assert enumerate_proper(c5, Mode.TOTAL2, limit=0) == []


@pytest.mark.parametrize("mode", [Mode.EDGE3, Mode.TOTAL2])
def test_edges_with_high_min_degree_come_first(pendant_k4, mode):
    vertices = list(pendant_k4.vertices()) if mode.has_vertex_weights else []
    search = WeightSearch(pendant_k4, mode, Weighting(mode), pendant_k4.edge_ids(), vertices,
                          pendant_k4.edge_ids(), order_key=min_degree_descending(pendant_k4))
    edges = [search.items[i][1] for i in search.order if search.items[i][0] == EDGE]
    mins = [min(pendant_k4.degree(x) for x in pendant_k4.endpoints(e)) for e in edges]
    assert mins == sorted(mins, reverse=True)
    assert mins[0] > mins[-1]
    assert sorted(search.order) == list(range(len(search.items)))


# --- [2] Ngân sách ---

def test_budget_is_enforced(c5):
    with pytest.raises(BudgetExceeded):
        count_proper(path(20), Mode.EDGE3)
    with pytest.raises(BudgetExceeded):
        exists_proper(c5, Mode.EDGE3, OracleBudget(max_assignments=3))
    with pytest.raises(BudgetExceeded):
        count_proper(c5, Mode.TOTAL2, OracleBudget(max_edges=9))


def test_budget_from_config(config_manager):
    budget = OracleBudget.from_config(config_manager)
    assert budget == OracleBudget(100_000_000, 16)


# --- [3] Mẫu không khử được ---

@pytest.mark.parametrize("side", ["left", "right"])
def test_gadget_extension_counts(side):
    g, w_prime, inst = gadget_base_weighting(side)
    assert count_extensions(g, w_prime, mutable_set(inst, g, Mode.TOTAL2), Mode.TOTAL2) == 0
    g, w_prime, inst = gadget_base_weighting(side, perturbed=True)
    assert count_extensions(g, w_prime, mutable_set(inst, g, Mode.TOTAL2), Mode.TOTAL2) > 0


def test_gadget_free_variables():
    g, _, inst = gadget_base_weighting("left")
    ms = mutable_set(inst, g, Mode.TOTAL2)
    assert len(ms.edges) + len(ms.vertices) == 7
    g, _, inst = gadget_base_weighting("right")
    ms = mutable_set(inst, g, Mode.TOTAL2)
    assert len(ms.edges) + len(ms.vertices) == 5


# --- [4] Mọi đồ thị nhỏ ---

def test_small_connected_graphs_have_edge_weightings():
    checked = 0
    for g in atlas_graphs(7):
        if has_isolated_edge(g):
            continue
        assert exists_proper(g, Mode.EDGE3)
        checked += 1
    assert checked > 800


def test_small_graphs_have_total_weightings():
    for g in atlas_graphs(6, connected=False):
        assert exists_proper(g, Mode.TOTAL2)
