"""The acceptance checks, shared by ``cdspile verify`` and the test suite.

Each check returns a :class:`CheckResult` whose ``details`` carry witnesses
for anything that went wrong.  ``n_max`` caps census sizes and ``k_max``
caps merge-number work; anything beyond the caps is reported as skipped.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from pathlib import Path
from typing import Callable

from . import oracle, reports
from .counting import (
    SERIES,
    FactorizationPair,
    count_max_pile,
    count_pile_size,
    histogram_formula,
    map_A_to_B1,
    map_B1_to_A,
    map_shift,
    oeis_terms,
)
from .merge import (
    acyclic_edge_choices,
    acyclic_subsets_bruteforce,
    binom,
    candidate_partitions,
    computed_table,
    count_structures_bruteforce,
    count_structures_recursive,
    max_merges,
    merge_number,
    printed_table,
)
from .perm import from_cycles, parse_cycles, parse_one_line

__all__ = ["CheckResult", "Options", "CHECKS", "EXPECTED_DIFF", "default_golden_dir", "golden_cases", "run_all"]

# (k, l, computed, printed): the one published merge number the oracles overturn
EXPECTED_DIFF = [(5, 4, 40, 90)]


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool = True
    details: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def expect(self, ok: bool, msg: str) -> None:
        if not ok:
            self.passed = False
            self.details.append(msg)

    def note(self, msg: str) -> None:
        self.details.append(msg)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number}. {self.title} ({self.elapsed:.2f}s)"


@dataclass
class Options:
    n_max: int = 8
    k_max: int = 7
    workers: int = 1
    golden_dir: Path | None = None


@lru_cache(maxsize=None)
def _census(n: int, workers: int = 1) -> oracle.CensusReport:
    return oracle.census(n, workers=workers)


def check_max_pile_even(opt: Options) -> CheckResult:
    r = CheckResult(1, "even-n maximum pile counts")
    for n, want in ((4, 3), (6, 40), (8, 1260)):
        if n > opt.n_max:
            r.note(f"skipped n={n} (above --n-max)")
            continue
        t0 = time.perf_counter()
        got = oracle.census(n, workers=opt.workers).histogram[n - 1]
        took = time.perf_counter() - t0
        r.expect(got == want, f"n={n}: census gives {got} at k={n - 1}, expected {want}")
        r.expect(count_max_pile(n) == want, f"n={n}: closed form gives {count_max_pile(n)}")
        if n == 8:
            r.expect(took < 10, f"S_8 census took {took:.1f}s (limit 10s)")
            r.note(f"S_8 census in {took:.3f}s")
    return r


def check_max_pile_odd(opt: Options) -> CheckResult:
    r = CheckResult(2, "odd-n maximum pile counts")
    for n, want in ((3, 2), (5, 12), (7, 240)):
        if n > opt.n_max:
            r.note(f"skipped n={n} (above --n-max)")
            continue
        hist = _census(n, opt.workers).histogram
        r.expect(hist[n - 2] == want, f"n={n}: census gives {hist[n - 2]} at k={n - 2}, expected {want}")
        r.expect(hist[n - 1] == 0, f"n={n}: census gives {hist[n - 1]} at k={n - 1}, expected 0")
        r.expect(count_max_pile(n) == want, f"n={n}: closed form gives {count_max_pile(n)}")
    return r


def _cell(table, n: int, k: int, m: int) -> int:
    return table.get(k, m) * binom(n - (k + 1), k - (m + 1)) * factorial(n - k)


def check_pile_size_formula(opt: Options) -> CheckResult:
    r = CheckResult(3, "pile-size formula equals census")
    table = computed_table(7)
    top = min(opt.n_max, 8)
    for n in range(4, top + 1):
        rep = _census(n, opt.workers)
        formula = histogram_formula(n, table)
        for k in range(n):
            r.expect(formula[k] == rep.histogram[k], f"n={n} k={k}: formula {formula[k]} vs census {rep.histogram[k]}")
        for (k, m), count in rep.matrix.items():
            want = _cell(table, n, k, m)
            r.expect(count == want, f"n={n} k={k} merges={m}: census {count} vs formula {want}")
    printed = printed_table()
    for tag, k in SERIES.items():
        if k < 3:
            continue
        terms = oeis_terms(tag, 8, table)
        for n, v in zip(range(k + 1, k + 9), terms):
            if n <= top:
                r.expect(v == _census(n, opt.workers).histogram[k], f"{tag} n={n}: {v} vs census")
            # the published row's only departure is its c(5,4) term
            gap = 50 * factorial(n - 5) if k == 5 and n >= 6 else 0
            pub = count_pile_size(n, k, printed)
            r.expect(pub - v == gap, f"{tag} n={n}: published row gives {pub}, computed {v}")
        r.note(f"{tag}: " + ", ".join(map(str, terms)))
    return r


def check_merge_numbers(opt: Options) -> CheckResult:
    r = CheckResult(4, "merge numbers: three methods agree, one printed entry differs")
    k_top = min(opt.k_max, 7)
    for k in range(1, k_top + 1):
        for l in range(max_merges(k) + 1):
            s = merge_number(k, l, "structure")
            b = merge_number(k, l, "bruteforce")
            o = oracle.merge_number_oracle(k, l)
            r.expect(s == b == o, f"c({k},{l}): structure {s}, bruteforce {b}, oracle {o}")
    diff = computed_table(k_top).diff(printed_table())
    want = [d for d in EXPECTED_DIFF if d[0] <= k_top]
    r.expect(diff == want, f"diff against printed table is {diff}, expected {want}")
    for k, l, ours, theirs in diff:
        r.note(f"c({k},{l}) = {ours}; printed {theirs}")
    return r


def check_inclusion_exclusion(opt: Options) -> CheckResult:
    r = CheckResult(5, "inclusion-exclusion equals subset enumeration")
    checked = 0
    for s in candidate_partitions(10):
        e = sum(s)
        for l in range(e + 1):
            a, b = acyclic_edge_choices(s, l), acyclic_subsets_bruteforce(s, l)
            checked += 1
            r.expect(a == b, f"s={list(s)} l={l}: inclusion-exclusion {a}, enumeration {b}")
    r.note(f"{checked} (structure, l) cases")
    return r


ANCHORS = {(4, (3,)): 4, (4, (2, 2)): 1, (5, (5,)): 8, (6, (3, 3)): 12, (6, (4, 2)): 24}


def check_recursion(opt: Options) -> CheckResult:
    r = CheckResult(6, "structure recursion equals brute force")
    k_top = min(opt.k_max, 7)
    for (k, s), want in ANCHORS.items():
        if k > k_top:
            continue
        got = count_structures_bruteforce(k, s)
        r.expect(got == want, f"|X_{k},{list(s)}| brute force {got}, expected {want}")
    for k in range(2, k_top + 1):
        for s in candidate_partitions(k):
            if sum(s) >= k:
                continue
            b = count_structures_bruteforce(k, s)
            try:
                rec = count_structures_recursive(k, s)
            except ArithmeticError as exc:
                r.expect(False, str(exc))
                continue
            r.expect(rec == b, f"|X_{k},{list(s)}|: recursion {rec}, brute force {b}")
    return r


def check_reachability(opt: Options) -> CheckResult:
    r = CheckResult(7, "CDS reachability matches the strategic pile")
    total = 0
    t0 = time.perf_counter()
    for n in range(1, min(opt.n_max, 6) + 1):
        rep = oracle.verify_reachability(n, workers=opt.workers)
        total += rep.checked
        for bad in rep.counterexamples:
            r.expect(False, bad)
    took = time.perf_counter() - t0
    r.expect(took < 60, f"reachability search took {took:.1f}s (limit 60s)")
    r.note(f"{total} permutations checked")
    return r


def _x(m: int) -> object:
    return from_cycles([range(m + 1)], 0, m)


def check_factorizations(opt: Options) -> CheckResult:
    r = CheckResult(8, "cycle factorization counts")
    for length, want in ((3, 1), (5, 8), (7, 180)):
        got = oracle.count_factorizations(_x(length - 1), length, length)
        r.expect(got == want, f"{length}-cycle into two {length}-cycles: {got}, expected {want}")
    for n, want in ((4, 4), (5, 12)):
        counts = oracle.odd_factorization_counts(n)
        bad = {img: c for img, c in counts.items() if c != want}
        r.expect(not bad, f"S_{n}: odd permutations with count != {want}: {sorted(bad.items())[:3]}")
        r.expect(len(counts) == factorial(n) // 2, f"S_{n}: {len(counts)} odd permutations")
    n = 6
    x6 = _x(n)
    total = oracle.count_factorizations(x6, n + 1, n + 1, (0, n))
    r.expect(total == 40, f"factorizations of X_6 with prefix (0 6 ...): {total}, expected 40")
    a_class = [FactorizationPair(f, g, n) for f, g in oracle.iter_factorizations(_x(n - 2), n - 1, n - 1)]
    r.expect(len(a_class) == 8, f"|A| = {len(a_class)}, expected 8")
    b = {}
    for i in range(1, n):
        b[i] = {(f, g) for f, g in oracle.iter_factorizations(x6, n + 1, n + 1, (0, n, i))}
        r.expect(len(b[i]) == 8, f"|B_{i}| = {len(b[i])}, expected 8")
    images = {(m.left, m.right) for m in map(map_A_to_B1, a_class)}
    r.expect(images == b[1], "the A -> B_1 map is not onto B_1")
    back = {(m.left, m.right) for m in (map_B1_to_A(FactorizationPair(f, g, n)) for f, g in b[1])}
    r.expect(back == {(f.left, f.right) for f in a_class}, "the B_1 -> A map is not onto A")
    for i in range(1, n):
        moved = {(m.left, m.right) for m in (map_shift(FactorizationPair(f, g, n)) for f, g in b[i])}
        r.expect(moved == b[i % (n - 1) + 1], f"shift map does not carry B_{i} onto B_{i % (n - 1) + 1}")
    return r


def golden_cases() -> dict[str, Callable[[], str]]:
    p = parse_one_line
    return {
        "cds_step.txt": lambda: reports.render_cds_step(p("2 4 3 1 5"), [(3, 4), (1, 3)]),
        "strategic_pile.txt": lambda: reports.render_pile(p("2 5 1 4 3")),
        "factorization_maps.txt": lambda: reports.render_factorization_maps(
            FactorizationPair(parse_cycles("(0 2 4 1 3)", 0, 4), parse_cycles("(0 4 3 2 1)", 0, 4), 6)
        ),
        "projection.txt": lambda: reports.render_projection(p("2 3 6 1 5 4")),
        "pairs_64587231.txt": lambda: reports.render_pair_structure(p("6 4 5 8 7 2 3 1")),
        "pairs_546321.txt": lambda: reports.render_pair_structure(p("5 4 6 3 2 1")),
        "fixed_point_table.txt": lambda: reports.render_fixed_point_table(
            map(p, ["2 4 1 3 5", "5 2 3 1 4", "2 1 5 3 4", "3 5 1 2 4"])
        ),
    }


def default_golden_dir() -> Path:
    return Path(__file__).resolve().parents[2] / "tests" / "golden"


def check_golden(opt: Options) -> CheckResult:
    r = CheckResult(9, "golden worked examples")
    root = opt.golden_dir or default_golden_dir()
    if not root.is_dir():
        r.expect(False, f"golden directory {root} not found (pass --golden)")
        return r
    for name, render in golden_cases().items():
        path = root / name
        if not path.exists():
            r.expect(False, f"{name}: missing")
            continue
        want, got = path.read_text(), render()
        if want != got:
            r.expect(False, f"{name}: output differs\n--- expected\n{want}--- got\n{got}")
    return r


CHECKS = [
    check_max_pile_even,
    check_max_pile_odd,
    check_pile_size_formula,
    check_merge_numbers,
    check_inclusion_exclusion,
    check_recursion,
    check_reachability,
    check_factorizations,
    check_golden,
]


def run_check(check: Callable[[Options], CheckResult], opt: Options) -> CheckResult:
    t0 = time.perf_counter()
    result = check(opt)
    result.elapsed = time.perf_counter() - t0
    return result


def run_all(opt: Options | None = None) -> list[CheckResult]:
    opt = opt or Options()
    return [run_check(c, opt) for c in CHECKS]
