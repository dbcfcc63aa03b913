import itertools
from math import factorial

import pytest
from hypothesis import given, strategies as st

from cdspile.perm import (
    GroundSetError,
    Parity,
    Permutation,
    compose,
    cycle_type,
    disjoint_cycles,
    extend,
    from_cycles,
    identity,
    inverse,
    is_cycle,
    iter_rank_range,
    parity,
    parse_cycles,
    parse_one_line,
    rank,
    restrict,
    unrank,
)

from conftest import on_ground, one_line, same_ground_pair


def test_composition_is_right_to_left():
    f = from_cycles([(0, 1)], 0, 2)
    g = from_cycles([(1, 2)], 0, 2)
    assert compose(f, g)(1) == f(g(1)) == 2
    assert compose(g, f)(1) == g(f(1)) == 0
    assert f * g == compose(f, g)


def test_known_product_of_cycles():
    # (0 3 4 1 5 2) o (0 1 2 3 4 5) on {0..5}
    y = parse_cycles("(0 3 4 1 5 2)", 0, 5)
    x = parse_cycles("(0 1 2 3 4 5)", 0, 5)
    assert str(disjoint_cycles(compose(y, x))) == "(0 5 3 1)(2 4)"


@pytest.mark.parametrize(
    "text", ["2 5 1 4 3", "2,5,1,4,3", "[2 5 1 4 3]", " [2, 5, 1, 4, 3] ", "(2 5 1 4 3)"]
)
def test_parse_one_line_formats(text):
    assert parse_one_line(text).image == (2, 5, 1, 4, 3)


@pytest.mark.parametrize("text", ["", "[]", "1 1 2", "0 1 2", "1 2 4", "a b"])
def test_parse_one_line_rejects(text):
    with pytest.raises(ValueError):
        parse_one_line(text)


def test_from_cycles_rejects_bad_cycles():
    with pytest.raises(ValueError):
        from_cycles([(0, 1), (1, 2)], 0, 3)
    with pytest.raises(ValueError):
        from_cycles([(0, 7)], 0, 3)


def test_ground_mismatch():
    with pytest.raises(GroundSetError):
        compose(identity(3), identity(3, lo=0))


def test_rendering():
    p = parse_one_line("2 5 1 4 3")
    assert str(p) == "[2 5 1 4 3]"
    assert str(identity(4, lo=0)) == "()"
    assert p.to_cycles() == "(1 2 5 3)"


def test_parity_values():
    assert parity(identity(4)) is Parity.EVEN
    assert parity(from_cycles([(1, 2, 3, 4)], 1, 4)) is Parity.ODD
    assert str(Parity.ODD) == "odd"


def test_rank_order_is_lexicographic():
    for n in range(1, 6):
        images = [unrank(n, r).image for r in range(factorial(n))]
        assert images == list(itertools.permutations(range(1, n + 1)))


def test_iter_rank_range_matches_unrank():
    assert list(iter_rank_range(5, 17, 40)) == [unrank(5, r).image for r in range(17, 40)]
    assert list(iter_rank_range(4, 3, 3)) == []


def test_unrank_range():
    with pytest.raises(ValueError):
        unrank(3, 6)


def test_extend_restrict():
    p = parse_cycles("(0 2 1)", 0, 3)
    assert restrict(extend(p, 6), 3) == p
    with pytest.raises(ValueError):
        restrict(p, 1)


@given(same_ground_pair(), st.data())
def test_composition_associative(fg, data):
    f, g = fg
    h = Permutation(f.lo, tuple(data.draw(st.permutations(list(f.ground())))))
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(on_ground())
def test_inverse_cancels(p):
    e = identity(p.size, lo=p.lo)
    assert compose(p, inverse(p)) == e == compose(inverse(p), p)


@given(on_ground())
def test_cycles_round_trip(p):
    d = disjoint_cycles(p)
    assert from_cycles(d.cycles, p.lo, p.hi) == p
    assert parse_cycles(str(d), p.lo, p.hi) == p
    assert sum(cycle_type(p)) == p.size


@given(same_ground_pair())
def test_parity_is_a_homomorphism(fg):
    f, g = fg
    assert parity(compose(f, g)) == (parity(f) + parity(g)) % 2


@given(on_ground(lo=1))
def test_rank_round_trip(p):
    assert unrank(p.size, rank(p)) == p


@given(one_line())
def test_one_line_round_trip(p):
    assert parse_one_line(p.to_one_line()) == p


@given(st.integers(2, 8))
def test_is_cycle_of_full_cycle(n):
    assert is_cycle(from_cycles([range(n)], 0, n - 1), n)
    assert not is_cycle(identity(n, lo=0), n)
