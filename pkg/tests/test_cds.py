import itertools

import pytest
from hypothesis import given

from cdspile.cds import (
    InvalidContextError,
    Pointer,
    Slot,
    apply_cds,
    fixed_points,
    is_fixed_point,
    is_sortable,
    pointer_sequence,
    reachable_fixed_points,
    rotation,
    segments_empty,
    successors,
    valid_contexts,
)
from cdspile.perm import Permutation, identity, parse_one_line
from cdspile.pile import strategic_pile

from conftest import one_line


def test_pointer_sequence_of_example():
    seq = pointer_sequence(parse_one_line("2 4 3 1 5"))
    assert [str(o.pointer) for o in seq] == [
        "<1,2>", "<2,3>", "<3,4>", "<4,5>", "<2,3>", "<3,4>", "<1,2>", "<4,5>",
    ]
    assert seq[0].slot is Slot.LEFT_OF_RIGHT_ENTRY and seq[1].slot is Slot.RIGHT_OF_LEFT_ENTRY


def test_apply_cds_example():
    p = parse_one_line("2 4 3 1 5")
    assert apply_cds(p, Pointer(3), Pointer(4)) == parse_one_line("2 1 3 4 5")
    with pytest.raises(InvalidContextError):
        apply_cds(p, 1, 3)


@pytest.mark.parametrize(
    "perm, p, q, want",
    [("1 3 2", 1, 2, "1 2 3"), ("3 2 1", 2, 1, "1 2 3")],
)
def test_small_swaps(perm, p, q, want):
    assert apply_cds(parse_one_line(perm), p, q) == parse_one_line(want)


def test_fixed_points_are_rotations_and_identity():
    for n in range(1, 7):
        found = {
            Permutation(1, img) for img in itertools.permutations(range(1, n + 1))
            if is_fixed_point(Permutation(1, img))
        }
        assert found == set(fixed_points(n))
        assert len(found) == n


def test_rotation_shape():
    assert rotation(5, 2) == parse_one_line("3 4 5 1 2")
    assert rotation(4, 0) == identity(4)


def test_reachable_fixed_points_example():
    got = reachable_fixed_points(parse_one_line("3 5 1 2 4"))
    assert got == {rotation(5, k) for k in (2, 3, 4)}
    assert not is_sortable(parse_one_line("2 5 1 4 3"))
    assert is_sortable(parse_one_line("2 4 3 1 5"))


def test_memo_is_reused():
    memo = {}
    p = parse_one_line("4 2 5 1 3")
    first = reachable_fixed_points(p, memo)
    assert p.image in memo
    assert reachable_fixed_points(p, memo) == first


@given(one_line(max_n=9))
def test_every_context_is_interleaved(p):
    seq = [o.pointer.low for o in pointer_sequence(p)]
    for a, b in valid_contexts(p):
        i1, i2 = [i for i, x in enumerate(seq) if x == a.low]
        j1, j2 = [i for i, x in enumerate(seq) if x == b.low]
        assert i1 < j1 < i2 < j2


@given(one_line(max_n=9))
def test_swaps_are_never_trivial(p):
    for a, b in valid_contexts(p):
        assert not segments_empty(p, a, b)
        assert apply_cds(p, a, b) != p


@given(one_line(max_n=9))
def test_pointers_occur_twice(p):
    seq = pointer_sequence(p)
    assert len(seq) == 2 * (p.size - 1)
    counts = {}
    for o in seq:
        counts[o.pointer] = counts.get(o.pointer, 0) + 1
    assert set(counts.values()) <= {2}


@given(one_line(max_n=9))
def test_a_step_never_grows_the_pile(p):
    pile = strategic_pile(p).members
    for img in successors(p.image):
        after = strategic_pile(Permutation(1, img)).members
        assert after <= pile
        assert bool(after) == bool(pile)


@given(one_line(max_n=6))
def test_something_is_always_reachable(p):
    found = reachable_fixed_points(p)
    assert found <= set(fixed_points(p.size))
    assert found
