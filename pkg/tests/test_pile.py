import itertools

import pytest
from hypothesis import assume, given, strategies as st

from cdspile import kernels
from cdspile.merge import tau_of
from cdspile.perm import Permutation, disjoint_cycles, parse_one_line
from cdspile.pile import (
    AdjacencyError,
    EmptyPileError,
    OrderedPairList,
    adjacencies,
    cycle_product,
    expand,
    merge_graph,
    merges,
    ordered_pair_list,
    pairs,
    project,
    reversal_cycle,
    strategic_pile,
)

from conftest import one_line

P = parse_one_line


def test_pile_example():
    p = P("2 5 1 4 3")
    assert str(reversal_cycle(p)) == "(0 3 4 1 5 2)"
    assert str(disjoint_cycles(cycle_product(p))) == "(0 5 3 1)(2 4)"
    sp = strategic_pile(p)
    assert sp.ordered == (3, 1)
    assert sp.set_str() == "{1, 3}"
    assert sp.label(1) == 2 and sp.value(1) == 3


def test_empty_pile():
    sp = strategic_pile(P("1 2 3"))
    assert not sp and len(sp) == 0 and sp.set_str() == "{}"
    with pytest.raises(EmptyPileError):
        merges(P("1 2 3"))


def test_pair_list_examples():
    p = P("6 4 5 8 7 2 3 1")
    assert strategic_pile(p).ordered == (1, 7, 5)
    assert ordered_pair_list(p).labels == (3, 2, 1)
    assert pairs(p) == [(5, 8), (7, 2), (1, 6)]
    assert merges(p) == []
    assert ordered_pair_list(P("2 3 6 1 4 5")).labels == (2, 3, 1)
    assert strategic_pile(P("4 1 6 3 2 5")).ordered == (5, 1, 3)
    assert ordered_pair_list(P("4 1 6 3 2 5")).labels == (2, 3, 1)


def test_merge_example():
    p = P("5 4 6 3 2 1")
    assert strategic_pile(p).ordered == (1, 3, 5, 4)
    assert str(ordered_pair_list(p)) == "(b3, b4, b2, b1)"
    assert merges(p) == [(3, 4), (1, 3)]
    assert merge_graph(p).edges == {(2, 4), (4, 3)}


def test_pair_list_validation():
    with pytest.raises(ValueError):
        OrderedPairList((1, 2))
    with pytest.raises(ValueError):
        OrderedPairList((2, 2, 1))
    assert OrderedPairList.from_cycle((1, 6, 7, 5, 2, 4, 3)).labels == (6, 7, 5, 2, 4, 3, 1)


def test_projection_example():
    p = P("2 3 6 1 5 4")
    assert adjacencies(p) == [1]
    m = project(p)
    assert m == P("2 5 1 4 3")
    got = [expand(m, i) for i in range(1, 6)]
    assert got == [P(s) for s in ("2 3 6 1 5 4", "2 5 6 1 4 3", "3 6 1 2 5 4", "2 6 1 4 5 3", "2 6 1 5 3 4")]


def test_projection_preconditions():
    with pytest.raises(AdjacencyError):
        project(P("1 2 3"))
    with pytest.raises(AdjacencyError):
        expand(P("1 2 4 3"), 1)
    with pytest.raises(AdjacencyError):
        expand(P("2 1"), 3)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_odd_projection_keeps_pile_size(n):
    hits = 0
    for img in itertools.permutations(range(1, n + 1)):
        p = Permutation(1, img)
        if len(strategic_pile(p)) == n - 2:
            hits += 1
            assert len(adjacencies(p)) == 1
            assert len(strategic_pile(project(p))) == n - 2
    assert hits > 0


@given(one_line(max_n=10))
def test_cycle_product_formula(p):
    c, n = cycle_product(p), p.size
    y = reversal_cycle(p)
    for x in range(n):
        assert c(x) == y(x + 1)
    assert c(n) == y(0) == p.image[-1]


@given(one_line(max_n=10))
def test_pile_matches_kernel(p):
    assert list(strategic_pile(p).ordered) == list(kernels.pile_values(p.image))
    assert list(kernels.python_backend.pile_values(p.image)) == list(strategic_pile(p).ordered)


@given(one_line(min_n=2, max_n=10))
def test_pair_structure(p):
    sp = strategic_pile(p)
    assume(sp)
    b = sp.ordered
    assert p.image[0] == b[-1] + 1 and p.image[-1] == b[0]
    sigma = ordered_pair_list(p)
    assert sigma.labels[-1] == 1 and sorted(sigma.labels) == list(range(1, len(b) + 1))
    assert len(pairs(p)) == len(b)
    graph = merge_graph(p)
    assert graph.is_acyclic()
    assert len(merges(p)) == len(graph.edges) == kernels.merge_count(b)
    assert graph.edges <= set(tau_of(sigma).edges)


@given(one_line(min_n=2, max_n=9), st.data())
def test_expand_then_project(m, data):
    assume(not adjacencies(m))
    i = data.draw(st.integers(1, m.size))
    e = expand(m, i)
    assert adjacencies(e) == [i]
    assert project(e) == m
