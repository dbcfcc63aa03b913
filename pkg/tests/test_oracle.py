from math import comb, factorial
from pathlib import Path

import pytest

from cdspile import oracle
from cdspile.merge import max_merges, merge_number
from cdspile.perm import from_cycles, parse_one_line

GOLDEN = Path(__file__).parent / "golden"


def x(m):
    return from_cycles([range(m + 1)], 0, m)


def test_census_small():
    assert oracle.census(3).histogram == {0: 4, 1: 2, 2: 0}
    assert oracle.census(4).histogram[3] == 3
    assert oracle.census(6).histogram[5] == 40


@pytest.mark.parametrize("n", [1, 11])
def test_census_range(n):
    with pytest.raises(ValueError):
        oracle.census(n)


@pytest.mark.parametrize("n", range(2, 9))
def test_census_invariants(n):
    rep = oracle.census(n)
    assert sum(rep.histogram.values()) == factorial(n)
    rows = rep.merge_rows()
    for k in range(1, n):
        assert sum(rows[k].values()) == rep.histogram[k]


def test_census_deterministic_across_workers_and_chunks():
    base = oracle.census(7)
    assert oracle.census(7, workers=2) == base
    small = oracle.census(7, chunk_size=333)
    assert (small.histogram, small.matrix) == (base.histogram, base.matrix)
    assert small.chunk_count == -(-5040 // 333)


def test_census_json_golden():
    rep = oracle.census(5)
    assert rep.to_json(include_elapsed=False) == (GOLDEN / "census_5.json").read_text()


def test_census_json_round_trip():
    rep = oracle.census(6)
    back = oracle.CensusReport.from_json(rep.to_json())
    assert back == rep
    with pytest.raises(ValueError):
        oracle.CensusReport.from_json('{"format": "other", "version": 1}')


def test_rank_chunks_cover_everything():
    chunks = oracle.rank_chunks(8)
    assert chunks[0] == (0, oracle.CHUNK_SIZE) and chunks[-1][1] == factorial(8)
    assert all(a[1] == b[0] for a, b in zip(chunks, chunks[1:]))


@pytest.mark.parametrize("n", range(1, 7))
def test_reachability_has_no_counterexamples(n):
    rep = oracle.verify_reachability(n)
    assert rep.ok, rep.counterexamples[:3]
    assert rep.checked == factorial(n)


def test_reachability_bound():
    with pytest.raises(ValueError):
        oracle.verify_reachability(8)


def test_iter_cycles_count():
    for hi, length in ((4, 3), (5, 5), (6, 2)):
        got = sum(1 for _ in oracle.iter_cycles(0, hi, length))
        assert got == comb(hi + 1, length) * factorial(length - 1)


def test_factorization_counts():
    assert oracle.count_factorizations(x(2), 3, 3) == 1
    (alpha, beta), = oracle.iter_factorizations(x(2), 3, 3)
    assert alpha.to_cycles() == beta.to_cycles() == "(0 2 1)"
    assert oracle.count_factorizations(x(4), 5, 5) == 8
    assert oracle.count_factorizations(x(6), 7, 7, (0, 6)) == 40
    assert [oracle.count_factorizations(x(6), 7, 7, (0, 6, i)) for i in range(1, 6)] == [8] * 5


@pytest.mark.parametrize("n, want", [(4, 4), (5, 12)])
def test_odd_permutations_factor_uniformly(n, want):
    counts = oracle.odd_factorization_counts(n)
    assert len(counts) == factorial(n) // 2
    assert set(counts.values()) == {want}


def test_merge_number_oracle_examples():
    assert oracle.merge_number_oracle(3, 1) == 3
    assert oracle.merge_number_oracle(6, 3) == 1080
    assert oracle.merge_number_oracle(5, 4) == 40
    assert oracle.merge_number_oracle(4, -1) == 0
    with pytest.raises(ValueError):
        oracle.merge_number_oracle(9, 0)


@pytest.mark.parametrize("k", range(1, 8))
def test_merge_number_oracle_agrees(k):
    for l in range(max_merges(k) + 2):
        assert oracle.merge_number_oracle(k, l) == merge_number(k, l)


def test_reachability_example_row():
    from cdspile.cds import reachable_fixed_points, rotation

    got = reachable_fixed_points(parse_one_line("3 5 1 2 4"))
    assert got == {rotation(5, k) for k in (2, 3, 4)}
