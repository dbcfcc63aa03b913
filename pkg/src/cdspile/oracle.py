"""Brute-force ground truth for every closed form in the package.

Nothing here goes through the ``pile``, ``merge`` or ``counting`` code paths:
piles come from the census kernel, tau-graphs and acyclicity are recomputed
from scratch, and factorizations are counted by enumerating cycles.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from typing import Iterator, Sequence

from . import kernels
from .cds import _reach, rotation
from .perm import Permutation, compose, from_cycles, inverse, is_cycle, iter_rank_range, parity

__all__ = [
    "CHUNK_SIZE",
    "CENSUS_FORMAT",
    "CensusReport",
    "census",
    "rank_chunks",
    "ReachabilityReport",
    "verify_reachability",
    "iter_cycles",
    "iter_factorizations",
    "count_factorizations",
    "odd_factorization_counts",
    "merge_number_oracle",
]

CHUNK_SIZE = 10_080
CENSUS_FORMAT = "cdspile-census"
CENSUS_VERSION = 1


def rank_chunks(n: int, chunk_size: int = CHUNK_SIZE) -> list[tuple[int, int]]:
    total = factorial(n)
    return [(lo, min(lo + chunk_size, total)) for lo in range(0, total, chunk_size)]


def _map(fn, tasks, workers: int):
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


@dataclass
class CensusReport:
    n: int
    histogram: dict[int, int]
    matrix: dict[tuple[int, int], int]
    elapsed: float = field(default=0.0, compare=False)
    chunk_count: int = 0
    backend: str = field(default=kernels.BACKEND, compare=False)

    def merge_rows(self) -> dict[int, dict[int, int]]:
        rows: dict[int, dict[int, int]] = {}
        for (k, m), v in sorted(self.matrix.items()):
            rows.setdefault(k, {})[m] = v
        return rows

    def to_dict(self) -> dict:
        return {
            "format": CENSUS_FORMAT,
            "version": CENSUS_VERSION,
            "n": self.n,
            "histogram": {str(k): str(v) for k, v in sorted(self.histogram.items())},
            "matrix": {
                str(k): {str(m): str(v) for m, v in row.items()} for k, row in self.merge_rows().items()
            },
            "chunk_count": self.chunk_count,
            "elapsed": round(self.elapsed, 6),
        }

    def to_json(self, include_elapsed: bool = True) -> str:
        data = self.to_dict()
        if not include_elapsed:
            data.pop("elapsed")
        return json.dumps(data, indent=2, sort_keys=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CensusReport":
        data = json.loads(text)
        if data.get("format") != CENSUS_FORMAT or data.get("version") != CENSUS_VERSION:
            raise ValueError("not a version-1 census report")
        matrix = {
            (int(k), int(m)): int(v) for k, row in data["matrix"].items() for m, v in row.items()
        }
        return cls(
            n=int(data["n"]),
            histogram={int(k): int(v) for k, v in data["histogram"].items()},
            matrix=matrix,
            elapsed=float(data.get("elapsed", 0.0)),
            chunk_count=int(data["chunk_count"]),
        )


def _census_task(args: tuple[int, int, int]) -> list[int]:
    n, start, stop = args
    return kernels.census_chunk(n, start, stop)


def census(n: int, workers: int = 1, chunk_size: int = CHUNK_SIZE) -> CensusReport:
    """Pile size and merge count of every permutation of S_n, tallied exactly."""
    if not 2 <= n <= 10:
        raise ValueError(f"census supports 2 <= n <= 10, got {n}")
    t0 = time.perf_counter()
    chunks = rank_chunks(n, chunk_size)
    parts = _map(_census_task, [(n, a, b) for a, b in chunks], workers)
    flat = [sum(col) for col in zip(*parts)]
    histogram = {k: sum(flat[k * n: (k + 1) * n]) for k in range(n)}
    matrix = {}
    for k in range(1, n):
        top = k - 1 if k % 2 else k - 2
        for m in range(n):
            v = flat[k * n + m]
            if m <= max(top, 0) or v:
                matrix[(k, m)] = v
    return CensusReport(n, histogram, matrix, time.perf_counter() - t0, len(chunks))


@dataclass
class ReachabilityReport:
    n: int
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _reach_task(args: tuple[int, int, int]) -> tuple[int, list[str]]:
    n, start, stop = args
    memo: dict = {}
    ident = tuple(range(1, n + 1))
    rotations = {rotation(n, k).image: k for k in range(1, n)}
    bad = []
    checked = 0
    for img in iter_rank_range(n, start, stop):
        checked += 1
        pile = set(kernels.pile_values(img))
        found = _reach(img, memo)
        reached = {rotations[f] for f in found if f in rotations}
        sortable = ident in found
        if not found:
            bad.append(f"{list(img)}: no fixed point reachable")
        elif reached != pile or sortable != (not pile):
            bad.append(
                f"{list(img)}: pile {sorted(pile)} but reachable rotations {sorted(reached)}"
                f", identity reachable={sortable}"
            )
    return checked, bad


def verify_reachability(n: int, workers: int = 1) -> ReachabilityReport:
    """Check the fixed-point/pile correspondence over all of S_n."""
    if not 1 <= n <= 7:
        raise ValueError("reachability search is limited to n <= 7")
    report = ReachabilityReport(n)
    for checked, bad in _map(_reach_task, [(n, a, b) for a, b in rank_chunks(n)], workers):
        report.checked += checked
        report.counterexamples.extend(bad)
    return report


def iter_cycles(lo: int, hi: int, length: int) -> Iterator[Permutation]:
    """Every ``length``-cycle on ``[lo, hi]`` exactly once."""
    ground = range(lo, hi + 1)
    for support in itertools.combinations(ground, length):
        first, rest = support[0], support[1:]
        for arrangement in itertools.permutations(rest):
            yield from_cycles([(first,) + arrangement], lo, hi)


def iter_factorizations(
    target: Permutation, left_len: int, right_len: int, prefix: Sequence[int] | None = None
) -> Iterator[tuple[Permutation, Permutation]]:
    """Pairs ``(alpha, beta)`` of cycles with ``alpha o beta == target``.

    ``prefix = (x0, x1, ..., xj)`` requires ``beta(x0) = x1, ..., beta(x_{j-1}) = xj``.
    """
    prefix = tuple(prefix or ())
    for beta in iter_cycles(target.lo, target.hi, right_len):
        if any(beta(prefix[i]) != prefix[i + 1] for i in range(len(prefix) - 1)):
            continue
        alpha = compose(target, inverse(beta))
        if is_cycle(alpha, left_len):
            yield alpha, beta


def count_factorizations(
    target: Permutation, left_len: int, right_len: int, prefix: Sequence[int] | None = None
) -> int:
    return sum(1 for _ in iter_factorizations(target, left_len, right_len, prefix))


def odd_factorization_counts(n: int) -> dict[tuple[int, ...], int]:
    """Factorizations into (n-cycle) o ((n-1)-cycle) for every odd permutation of S_n."""
    out = {}
    for img in itertools.permutations(range(1, n + 1)):
        p = Permutation(1, img)
        if parity(p):
            out[img] = count_factorizations(p, n, n - 1)
    return out


def _acyclic(edges: Sequence[tuple[int, int]], k: int) -> bool:
    succ = dict(edges)
    for start in succ:
        x = succ[start]
        for _ in range(k):
            if x == start:
                return False
            if x not in succ:
                break
            x = succ[x]
    return True


def merge_number_oracle(k: int, l: int) -> int:
    """Count (pair list, acyclic ``l``-edge subset of its tau-graph) by direct enumeration."""
    if not 1 <= k <= 8:
        raise ValueError("merge_number_oracle supports 1 <= k <= 8")
    if l < 0:
        return 0
    total = 0
    for head in itertools.permutations(range(2, k + 1)):
        order = head + (1,)
        nxt = {order[i]: order[(i + 1) % k] for i in range(k)}
        edges = []
        for j in range(1, k + 1):
            t = nxt[j % k + 1]
            if t != j:
                edges.append((j, t))
        for subset in itertools.combinations(edges, l):
            if _acyclic(subset, k):
                total += 1
    return total
