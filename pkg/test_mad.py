from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import disjoint_union, small_graphs, union_graphs
from errors import BudgetExceeded, InvalidParams
from gen import cycle, named, path, tree
from graph_core import Graph
from mad import average_degree, mad_bruteforce, mad_exact, mad_less_than

BOUNDS = [Fraction(2), Fraction(5, 2), Fraction(8, 3), Fraction(3)]


def test_complete_graph(k4):
    result = mad_exact(k4)
    assert result.value == Fraction(3)
    assert result.witness == (0, 1, 2, 3)


def test_pendant_cubic_average_below_mad(pendant_k4):
    assert average_degree(pendant_k4) == Fraction(5, 2)
    assert mad_exact(pendant_k4).value == Fraction(3)


def test_sparse_graphs():
    assert mad_exact(cycle(5)).value == Fraction(2)
    assert mad_exact(path(4)).value == Fraction(3, 2)
    assert mad_exact(Graph.from_edges(3, [])).value == Fraction(0)
    assert mad_exact(tree(12, seed=7)).value < 2


def test_densest_component_wins():
    g = Graph.from_edges(9, [(0, 1), (1, 2), (2, 0), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6), (7, 8)])
    result = mad_exact(g)
    assert result.value == Fraction(3)
    assert result.witness == (3, 4, 5, 6)


@settings(max_examples=200, deadline=None)
@given(small_graphs(max_n=10))
def test_exact_matches_bruteforce(g):
    exact = mad_exact(g)
    assert exact.value == mad_bruteforce(g).value
    if g.num_edges:
        inside = len(g.edges_within(exact.witness))
        assert Fraction(2 * inside, len(exact.witness)) == exact.value


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=9))
def test_less_than_agrees_with_exact(g):
    value = mad_exact(g).value
    for bound in BOUNDS:
        assert mad_less_than(g, bound) == (value < bound)


# --- Đồ thị nhiều thành phần ---

def test_disjoint_cycles_are_below_eight_thirds():
    g = disjoint_union(cycle(5), cycle(4))
    assert mad_exact(g).value == Fraction(2)
    assert mad_less_than(g, Fraction(8, 3))
    assert mad_less_than(g, Fraction(5, 2))
    assert not mad_less_than(g, Fraction(2))


def test_sparse_component_next_to_dense_one(k4):
    g = disjoint_union(path(2), k4, path(3))
    result = mad_exact(g)
    assert result.value == Fraction(3)
    assert result.witness == (2, 3, 4, 5)
    assert mad_less_than(disjoint_union(path(2), path(3)), Fraction(5, 2))


@settings(max_examples=150, deadline=None)
@given(union_graphs(max_n=6))
def test_union_matches_bruteforce(g):
    exact = mad_exact(g)
    assert exact.value == mad_bruteforce(g).value
    assert len(g.edges_within(exact.witness)) * 2 == exact.value * len(exact.witness)
    for bound in BOUNDS:
        assert mad_less_than(g, bound) == (exact.value < bound)


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=9), st.data())
def test_subgraphs_never_exceed(g, data):
    value = mad_exact(g).value
    removed = data.draw(st.sets(st.sampled_from(g.edge_ids()))) if g.num_edges else set()
    assert mad_exact(g.delete_edges(removed)).value <= value
    keep = data.draw(st.sets(st.sampled_from(list(g.vertices())), min_size=1))
    sub, _ = g.induced(sorted(keep))
    assert mad_exact(sub).value <= value


def test_less_than_on_the_boundary(pendant_k4):
    petersen = named("petersen")
    assert not mad_less_than(petersen, Fraction(3))
    assert mad_less_than(petersen, Fraction(301, 100))
    assert not mad_less_than(pendant_k4, Fraction(8, 3))


def test_bad_inputs():
    with pytest.raises(InvalidParams):
        mad_less_than(cycle(4), Fraction(0))
    with pytest.raises(BudgetExceeded):
        mad_bruteforce(path(21))


def test_logger_receives_value(k4, logger, tmp_path):
    mad_exact(k4, logger)
    text = (tmp_path / "test.log").read_text(encoding="utf-8")
    assert "[MAD] Mad = 3" in text
