"""Tau-graphs, cycle structures and merge numbers.

An ordered pair list ``sigma = (x_1, ..., x_{k-1}, 1)`` on labels ``1..k``
determines ``tau = sigma* o psi`` where ``psi = (1 2 ... k)`` and ``sigma*`` is
the cycle ``(x_1 ... x_{k-1} 1)``.  The non-loop edges of ``tau`` are the
merges that pair list allows.  The merge number ``c(k, l)`` counts choices of
a pair list together with ``l`` merges, i.e. pairs (sigma, acyclic
``l``-edge subset of the tau-graph).

Structure counts ``|X_{k,s}|`` (pair lists whose tau-graph has cycle
structure ``s``) come from brute force over the ``(k-1)!`` pair lists, or
from the rotation recursion ``|X_{k,s}| = k |X_{k-1,s}| / (k - sum(s))``
whose base case ``sum(s) == k`` is brute force.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from pathlib import Path
from typing import Iterator, Sequence

from . import kernels
from .pile import OrderedPairList

__all__ = [
    "TauGraph",
    "MergeNumberTable",
    "binom",
    "tau_of",
    "tau_of_cycle",
    "cycle_structure",
    "is_candidate",
    "candidate_partitions",
    "acyclic_edge_choices",
    "acyclic_subsets_bruteforce",
    "iter_pair_lists",
    "count_structures_bruteforce",
    "count_structures_recursive",
    "max_merges",
    "merge_number",
    "merge_number_table",
    "rotate_tau",
    "rotate_pair_list",
    "tau_orbit",
    "printed_table",
    "computed_table",
]

CycleStructure = tuple[int, ...]


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero whenever ``b < 0`` or ``b > a`` (including negative ``a``)."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class TauGraph:
    """Functional digraph on labels ``1..k``; ``successor`` omits isolated vertices."""

    k: int
    successor: dict[int, int] = field(hash=False, compare=False)
    _key: tuple[tuple[int, int], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        succ = {a: b for a, b in self.successor.items() if a != b}
        object.__setattr__(self, "successor", succ)
        object.__setattr__(self, "_key", tuple(sorted(succ.items())))
        labels = range(1, self.k + 1)
        if any(a not in labels or b not in labels for a, b in succ.items()):
            raise ValueError("tau-graph labels out of range")
        if sorted(succ) != sorted(succ.values()):
            raise ValueError("tau-graph must be a union of disjoint cycles")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TauGraph) and (self.k, self._key) == (other.k, other._key)

    def __hash__(self) -> int:
        return hash((self.k, self._key))

    def __call__(self, j: int) -> int:
        return self.successor.get(j, j)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return list(self._key)

    def isolated(self) -> list[int]:
        return [j for j in range(1, self.k + 1) if j not in self.successor]

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles in canonical form (min first, sorted by min)."""
        seen: set[int] = set()
        out = []
        for start in sorted(self.successor):
            if start in seen:
                continue
            cyc = []
            x = start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.successor[x]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        body = "".join("(" + " ".join(f"b{j}" for j in c) + ")" for c in self.cycles())
        return body + "".join(f"(b{j})" for j in self.isolated())


def tau_of_cycle(cycle: Sequence[int]) -> TauGraph:
    """``sigma* o psi`` for an arbitrary cyclic arrangement of labels ``1..k``."""
    cyc = tuple(cycle)
    k = len(cyc)
    if sorted(cyc) != list(range(1, k + 1)):
        raise ValueError(f"{cyc} is not an arrangement of 1..{k}")
    star = {cyc[i]: cyc[(i + 1) % k] for i in range(k)}
    return TauGraph(k, {j: star[j % k + 1] for j in range(1, k + 1)})


def tau_of(sigma: OrderedPairList | Sequence[int]) -> TauGraph:
    if not isinstance(sigma, OrderedPairList):
        sigma = OrderedPairList(tuple(sigma))
    return tau_of_cycle(sigma.labels)


def cycle_structure(t: TauGraph) -> CycleStructure:
    return tuple(sorted((len(c) for c in t.cycles()), reverse=True))


def is_candidate(parts: Sequence[int], k: int) -> bool:
    return (
        all(a >= 2 for a in parts)
        and sum(1 for a in parts if a % 2 == 0) % 2 == 0
        and sum(parts) <= k
        and list(parts) == sorted(parts, reverse=True)
    )


def _partitions(total: int, largest: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into parts in ``[2, largest]``, weakly decreasing."""
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 1, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def candidate_partitions(k: int) -> list[CycleStructure]:
    """Partitions of every ``0..k`` with parts >= 2 and an even number of even parts."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out = []
    for total in range(k + 1):
        for parts in _partitions(total, total):
            if sum(1 for a in parts if a % 2 == 0) % 2 == 0:
                out.append(parts)
    return sorted(out)


def acyclic_edge_choices(s: Sequence[int], l: int) -> int:
    """Number of ``l``-edge subsets of a union of cycles ``s`` containing no whole cycle.

    Inclusion-exclusion over the set of cycles forced to be fully chosen.
    """
    if l < 0:
        return 0
    parts = tuple(s)
    e = sum(parts)
    total = binom(e, l)
    for size in range(1, len(parts) + 1):
        sign = 1 if size % 2 else -1
        for chosen in itertools.combinations(parts, size):
            used = sum(chosen)
            total -= sign * binom(e - used, l - used)
    return total


def acyclic_subsets_bruteforce(s: Sequence[int], l: int) -> int:
    """Direct enumeration counterpart of :func:`acyclic_edge_choices`."""
    edges = []
    for c, a in enumerate(s):
        edges.extend((c, j) for j in range(a))
    count = 0
    for subset in itertools.combinations(edges, l):
        per_cycle = Counter(c for c, _ in subset)
        if all(per_cycle[c] < a for c, a in enumerate(s)):
            count += 1
    return count


def iter_pair_lists(k: int) -> Iterator[OrderedPairList]:
    """All ``(k-1)!`` ordered pair lists on ``k`` labels, lexicographically."""
    for head in itertools.permutations(range(2, k + 1)):
        yield OrderedPairList(head + (1,))


@lru_cache(maxsize=None)
def _structure_census(k: int) -> Counter:
    return Counter(kernels.structure_census(k))


def count_structures_bruteforce(k: int, s: Sequence[int]) -> int:
    """``|X_{k,s}|`` by scanning all pair lists."""
    return _structure_census(k)[tuple(s)]


def count_structures_recursive(k: int, s: Sequence[int]) -> int:
    """``|X_{k,s}|`` via the rotation recursion; brute force at the base ``sum(s) == k``."""
    s = tuple(s)
    e = sum(s)
    if e > k:
        return 0
    if e == k or k == 1:
        # the empty structure bottoms out at a single label rather than at k = 0
        return count_structures_bruteforce(k, s)
    num = k * count_structures_recursive(k - 1, s)
    q, r = divmod(num, k - e)
    if r:
        raise ArithmeticError(f"non-integral recursion step for k={k}, s={list(s)}: {num}/{k - e}")
    return q


def max_merges(k: int) -> int:
    if k < 1:
        raise ValueError("k must be at least 1")
    return k - 1 if k % 2 else k - 2


def _acyclic_subsets_of(t: TauGraph, l: int) -> int:
    cycles = [frozenset((a, t(a)) for a in c) for c in t.cycles()]
    count = 0
    for subset in itertools.combinations(t.edges, l):
        chosen = set(subset)
        if not any(c <= chosen for c in cycles):
            count += 1
    return count


def merge_number(k: int, l: int, method: str = "structure") -> int:
    """``c(k, l)``.

    ``structure``: sum over candidate structures of ``|X_{k,s}|`` times the
    inclusion-exclusion count.  ``bruteforce``: for each pair list, count
    acyclic ``l``-edge subsets of its tau-graph by enumeration.
    """
    if l < 0:
        return 0
    if method == "structure":
        return sum(
            count_structures_recursive(k, s) * acyclic_edge_choices(s, l)
            for s in candidate_partitions(k)
        )
    if method == "bruteforce":
        return sum(_acyclic_subsets_of(tau_of(sigma), l) for sigma in iter_pair_lists(k))
    raise ValueError(f"unknown method {method!r}")


def rotate_tau(i: int, sigma: OrderedPairList | Sequence[int]) -> TauGraph:
    """``beta^i o tau_sigma o beta^-i`` with ``beta = (1 2 ... k)`` acting on labels."""
    t = tau_of(sigma)
    k = t.k
    shift = lambda j: (j - 1 + i) % k + 1  # noqa: E731
    return TauGraph(k, {shift(a): shift(b) for a, b in t.successor.items()})


def rotate_pair_list(i: int, sigma: OrderedPairList | Sequence[int]) -> OrderedPairList:
    """The pair list whose tau-graph is ``rotate_tau(i, sigma)``."""
    if not isinstance(sigma, OrderedPairList):
        sigma = OrderedPairList(tuple(sigma))
    k = sigma.k
    return OrderedPairList.from_cycle([(j - 1 + i) % k + 1 for j in sigma.labels])


def tau_orbit(sigma: OrderedPairList | Sequence[int]) -> set[TauGraph]:
    k = len(sigma.labels if isinstance(sigma, OrderedPairList) else sigma)
    return {rotate_tau(i, sigma) for i in range(k)}


@dataclass
class MergeNumberTable:
    """Exact merge numbers keyed by ``(k, l)``; missing entries read as 0."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def get(self, k: int, l: int) -> int:
        return self.entries.get((k, l), 0)

    @property
    def k_max(self) -> int:
        return max((k for k, _ in self.entries), default=0)

    def ks(self) -> list[int]:
        return sorted({k for k, _ in self.entries})

    def row(self, k: int) -> list[int]:
        width = max((l for kk, l in self.entries if kk == k), default=-1) + 1
        return [self.get(k, l) for l in range(width)]

    def diff(self, other: "MergeNumberTable") -> list[tuple[int, int, int, int]]:
        """``(k, l, ours, theirs)`` for every key ``other`` lists with a different value."""
        return [
            (k, l, self.get(k, l), v)
            for (k, l), v in sorted(other.entries.items())
            if self.get(k, l) != v
        ]

    @classmethod
    def parse(cls, text: str) -> "MergeNumberTable":
        """Read ``k l value`` lines; ``#`` starts a comment."""
        entries = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'k l value', got {raw!r}")
            k, l, value = (int(x) for x in parts)
            if k < 1 or l < 0 or value < 0:
                raise ValueError(f"line {lineno}: negative or zero index in {raw!r}")
            entries[(k, l)] = value
        return cls(entries)

    @classmethod
    def from_file(cls, path: str | Path) -> "MergeNumberTable":
        return cls.parse(Path(path).read_text())

    def dumps(self) -> str:
        return "".join(f"{k} {l} {v}\n" for (k, l), v in sorted(self.entries.items()))


def merge_number_table(k_max: int, method: str = "structure", merge_fn=None) -> MergeNumberTable:
    """All ``c(k, l)`` for ``1 <= k <= k_max`` and ``0 <= l <= max_merges(k)``."""
    fn = merge_fn or (lambda k, l: merge_number(k, l, method))
    return MergeNumberTable(
        {(k, l): fn(k, l) for k in range(1, k_max + 1) for l in range(max_merges(k) + 1)}
    )


def printed_table() -> MergeNumberTable:
    """The published merge numbers, including the disputed c(5,4) entry."""
    from importlib.resources import files

    return MergeNumberTable.parse(files("cdspile").joinpath("data/printed_merge_numbers.txt").read_text())


def computed_table(k_max: int = 7) -> MergeNumberTable:
    """Structure-method table, cached per ``k_max``; callers get a private copy."""
    return MergeNumberTable(dict(_computed_table(k_max).entries))


@lru_cache(maxsize=None)
def _computed_table(k_max: int) -> MergeNumberTable:
    return merge_number_table(k_max, "structure")
