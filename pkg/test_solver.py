from fractions import Fraction

import pytest

from configs import Catalog
from conftest import atlas_graphs, corpus_graph, corpus_size, has_isolated_edge
from errors import InvalidParams
from gen import cycle, tree
from graph_core import Graph
from mad import mad_less_than
from oracle import exists_proper
from solver import (Solver, SolveStatus, isolated_edges, level_bound, solve, solve_components,
                    structural_catalog)
from weighting import Mode, is_proper, phi, violations

CORPUS_83 = range(corpus_size(120, 1000))
CORPUS_52 = range(corpus_size(60, 500))


def _assert_solved(g, outcome):
    assert outcome.status is SolveStatus.SOLVED, outcome.reason
    assert outcome.weighting.is_complete(g)
    assert violations(g, outcome.weighting) == []


# --- [1] Trường hợp cơ sở ---

@pytest.mark.parametrize("mode", list(Mode))
@pytest.mark.parametrize("level", [52, 83])
def test_five_cycle(c5, mode, level):
    outcome = solve(c5, mode, level)
    _assert_solved(c5, outcome)
    assert outcome.trace[-1].kind == "BASE.EMPTY"


def test_triangle_is_a_base_case(c3):
    outcome = solve(c3, Mode.EDGE3, 83)
    _assert_solved(c3, outcome)
    assert [step.kind for step in outcome.trace] == ["BASE.C3", "BASE.EMPTY"]
    assert sorted(phi(c3, outcome.weighting, v) for v in c3.vertices()) == [3, 4, 5]


def test_isolated_edge_depends_on_mode(k2):
    rejected = solve(k2, Mode.EDGE3, 83)
    assert rejected.status is SolveStatus.INPUT_REJECTED
    assert "0-1" in rejected.reason
    outcome = solve(k2, Mode.TOTAL2, 83)
    _assert_solved(k2, outcome)
    assert outcome.trace[0].kind == "BASE.K2"


def test_dense_graph_is_not_applicable(k4):
    for level in (52, 83):
        outcome = solve(k4, Mode.EDGE3, level)
        assert outcome.status is SolveStatus.NOT_APPLICABLE
        assert outcome.weighting is None


def test_edgeless_graph():
    g = Graph.from_edges(3, [])
    outcome = solve(g, Mode.TOTAL2, 83)
    _assert_solved(g, outcome)
    assert [step.kind for step in outcome.trace] == ["BASE.EMPTY"]


def test_disjoint_cycles():
    g = Graph.from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (6, 7), (7, 8), (8, 5)])
    for mode in Mode:
        _assert_solved(g, solve(g, mode, 83))
        _assert_solved(g, solve_components(g, mode, 83))


def test_trace_records_every_reduction(c5, logger, tmp_path):
    outcome = solve(c5, Mode.EDGE3, 83, logger=logger)
    kinds = [step.kind for step in outcome.trace]
    assert kinds[0] == "W3_83.B"
    assert str(outcome.trace[0]).startswith("W3_83.B v=0")
    text = (tmp_path / "test.log").read_text(encoding="utf-8")
    assert "Rút gọn W3_83.B" in text


# --- [2] Tham số ---

def test_level_and_catalog_tables():
    assert level_bound(83) == Fraction(8, 3)
    assert level_bound(52) == Fraction(5, 2)
    with pytest.raises(InvalidParams):
        level_bound(7)
    assert structural_catalog(Mode.EDGE3, 52) is Catalog.S52
    assert structural_catalog(Mode.TOTAL2, 83) is Catalog.S83_12
    assert structural_catalog(Mode.EDGE3, 83) is Catalog.S83_123


def test_isolated_edges_listing():
    g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    assert isolated_edges(g) == [0]


# --- [3] Corpus ngẫu nhiên ---

@pytest.mark.parametrize("mode", list(Mode))
def test_random_corpus_level_83(mode):
    for seed in CORPUS_83:
        g = corpus_graph(seed, Fraction(8, 3))
        assert mad_less_than(g, Fraction(8, 3))
        _assert_solved(g, solve(g, mode, 83))


@pytest.mark.parametrize("mode", list(Mode))
def test_random_corpus_level_52(mode):
    for seed in CORPUS_52:
        g = corpus_graph(seed, Fraction(5, 2))
        assert mad_less_than(g, Fraction(5, 2))
        _assert_solved(g, solve(g, mode, 52))


def test_trees_at_both_levels():
    for seed in range(10):
        g = tree(30, seed)
        for mode in Mode:
            _assert_solved(g, solve(g, mode, 52))


# --- [4] Giải theo thành phần ---

def test_components_match_whole_graph_solve():
    g = Graph.from_edges(12, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 3),
                              (8, 9), (9, 10)])
    for mode in Mode:
        outcome = solve_components(g, mode, 83)
        _assert_solved(g, outcome)
        assert {step.kind for step in outcome.trace} >= {"BASE.C3", "BASE.EMPTY"}


def test_components_in_worker_processes():
    g = Graph.from_edges(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (6, 7), (7, 8), (8, 9)])
    outcome = Solver(solver_config={"workers": 2}).solve_components(g, Mode.EDGE3, 83)
    _assert_solved(g, outcome)
    assert outcome.weighting == solve_components(g, Mode.EDGE3, 83).weighting


def test_components_reject_like_solve(k2):
    assert solve_components(k2, Mode.EDGE3, 83).status is SolveStatus.INPUT_REJECTED
    assert solve_components(cycle(3), Mode.TOTAL2, 83).solved


# --- [5] So với oracle ---

def test_solver_agrees_with_oracle_on_small_graphs():
    for g in atlas_graphs(7):
        if has_isolated_edge(g):
            continue
        outcome = solve(g, Mode.EDGE3, 83)
        if outcome.solved:
            assert is_proper(g, outcome.weighting)
            assert exists_proper(g, Mode.EDGE3)
        if mad_less_than(g, Fraction(8, 3)):
            assert outcome.solved
