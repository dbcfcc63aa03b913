"""Exact permutation algebra over contiguous integer ground sets.

A :class:`Permutation` lives on ``{lo, ..., lo + size - 1}``.  One-line
permutations of S_n use ``lo=1``; the extended permutations built from them
(shift cycle, reversal cycle and their product) use ``lo=0``.

Composition follows the functional convention: ``compose(f, g)(x) == f(g(x))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from math import factorial
from typing import Iterable, Iterator, Sequence

__all__ = [
    "GroundSetError",
    "Parity",
    "Permutation",
    "CycleDecomposition",
    "identity",
    "from_cycles",
    "parse_cycles",
    "parse_one_line",
    "compose",
    "inverse",
    "disjoint_cycles",
    "cycle_type",
    "is_cycle",
    "parity",
    "extend",
    "restrict",
    "rank",
    "unrank",
    "iter_rank_range",
]


class GroundSetError(ValueError):
    """Raised when permutations on different ground sets are combined."""


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __str__(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{lo, ..., lo + len(image) - 1}``.

    ``image[i]`` is the value that ``lo + i`` maps to.  Instances are
    immutable and hashable, so they can be used as dictionary keys and sent
    to worker processes.
    """

    lo: int
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        if not image:
            raise ValueError("a permutation needs at least one element")
        if sorted(image) != list(range(self.lo, self.lo + len(image))):
            raise ValueError(f"{image} is not a permutation of [{self.lo}, {self.lo + len(image) - 1}]")

    @classmethod
    def one_line(cls, values: Iterable[int]) -> "Permutation":
        """Build ``[a_1 ... a_n]`` on ``{1..n}``."""
        return cls(1, tuple(values))

    @property
    def hi(self) -> int:
        return self.lo + len(self.image) - 1

    @property
    def size(self) -> int:
        return len(self.image)

    def __len__(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        if not self.lo <= x <= self.hi:
            raise GroundSetError(f"{x} is outside [{self.lo}, {self.hi}]")
        return self.image[x - self.lo]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def ground(self) -> range:
        return range(self.lo, self.hi + 1)

    def to_one_line(self) -> str:
        return "[" + " ".join(map(str, self.image)) + "]"

    def to_cycles(self) -> str:
        return str(disjoint_cycles(self))

    def __str__(self) -> str:
        return self.to_one_line() if self.lo == 1 else self.to_cycles()


@dataclass(frozen=True)
class CycleDecomposition:
    """Canonical disjoint cycle form.

    Every cycle starts at its minimum and cycles are sorted by that minimum.
    Fixed points appear as 1-cycles only when ``includes_fixed_points``.
    """

    cycles: tuple[tuple[int, ...], ...]
    includes_fixed_points: bool = False

    def nontrivial(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c for c in self.cycles if len(c) > 1)

    def __str__(self) -> str:
        shown = self.nontrivial()
        if not shown:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in shown)


def identity(n: int, lo: int = 1) -> Permutation:
    if n < 1:
        raise ValueError("n must be at least 1")
    return Permutation(lo, tuple(range(lo, lo + n)))


def from_cycles(cycles: Iterable[Sequence[int]], lo: int, hi: int) -> Permutation:
    """Permutation of ``[lo, hi]`` sending each ``c_j`` to ``c_{j+1}`` cyclically."""
    image = list(range(lo, hi + 1))
    seen: set[int] = set()
    for cycle in cycles:
        for x in cycle:
            if not lo <= x <= hi:
                raise ValueError(f"cycle entry {x} outside [{lo}, {hi}]")
            if x in seen:
                raise ValueError(f"duplicate cycle entry {x}")
            seen.add(x)
        for j, x in enumerate(cycle):
            image[x - lo] = cycle[(j + 1) % len(cycle)]
    return Permutation(lo, tuple(image))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, lo: int, hi: int) -> Permutation:
    """Parse cycle notation such as ``"(0 5 3 1)(2 4)"``."""
    cycles = [[int(t) for t in body.replace(",", " ").split()] for body in _CYCLE_RE.findall(text)]
    return from_cycles(cycles, lo, hi)


def parse_one_line(text: str) -> Permutation:
    """Parse ``"2 5 1 4 3"``, ``"2,5,1,4,3"`` or ``"[2 5 1 4 3]"``."""
    body = text.strip()
    if body[:1] in "[(" and body[-1:] in "])":
        body = body[1:-1]
    tokens = [t for t in re.split(r"[\s,]+", body) if t]
    if not tokens:
        raise ValueError("empty permutation")
    return Permutation.one_line(int(t) for t in tokens)


def _check_same_ground(f: Permutation, g: Permutation) -> None:
    if f.lo != g.lo or f.size != g.size:
        raise GroundSetError(f"ground sets differ: [{f.lo}, {f.hi}] vs [{g.lo}, {g.hi}]")


def compose(f: Permutation, g: Permutation) -> Permutation:
    _check_same_ground(f, g)
    lo, fi = f.lo, f.image
    return Permutation(lo, tuple(fi[y - lo] for y in g.image))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.size
    for i, y in enumerate(p.image):
        inv[y - p.lo] = i + p.lo
    return Permutation(p.lo, tuple(inv))


def disjoint_cycles(p: Permutation, include_fixed_points: bool = False) -> CycleDecomposition:
    seen = [False] * p.size
    cycles = []
    for start in p.ground():
        if seen[start - p.lo]:
            continue
        cycle = []
        x = start
        while not seen[x - p.lo]:
            seen[x - p.lo] = True
            cycle.append(x)
            x = p.image[x - p.lo]
        if len(cycle) > 1 or include_fixed_points:
            cycles.append(tuple(cycle))
    # scanning ground elements in increasing order already yields min-first cycles sorted by min
    return CycleDecomposition(tuple(cycles), include_fixed_points)


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Cycle lengths (fixed points included), weakly decreasing."""
    return tuple(sorted((len(c) for c in disjoint_cycles(p, True).cycles), reverse=True))


def is_cycle(p: Permutation, length: int) -> bool:
    """True when ``p`` is a single cycle of ``length`` with everything else fixed."""
    nontrivial = disjoint_cycles(p).cycles
    if length == 1:
        return not nontrivial
    return len(nontrivial) == 1 and len(nontrivial[0]) == length


def parity(p: Permutation) -> Parity:
    transpositions = sum(len(c) - 1 for c in disjoint_cycles(p).cycles)
    return Parity(transpositions % 2)


def extend(p: Permutation, hi: int) -> Permutation:
    """The same permutation on ``[p.lo, hi]``, fixing the new elements."""
    if hi < p.hi:
        raise ValueError("extend can only enlarge the ground set")
    return Permutation(p.lo, p.image + tuple(range(p.hi + 1, hi + 1)))


def restrict(p: Permutation, hi: int) -> Permutation:
    """Drop the elements above ``hi``; they must be fixed points."""
    for x in range(hi + 1, p.hi + 1):
        if p(x) != x:
            raise ValueError(f"cannot restrict: {x} is moved")
    return Permutation(p.lo, p.image[: hi - p.lo + 1])


def unrank(n: int, r: int, lo: int = 1) -> Permutation:
    """The ``r``-th permutation of ``{lo..lo+n-1}`` in lexicographic order."""
    total = factorial(n)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} outside [0, {n}!)")
    pool = list(range(lo, lo + n))
    image = []
    for i in range(n, 0, -1):
        block = factorial(i - 1)
        q, r = divmod(r, block)
        image.append(pool.pop(q))
    return Permutation(lo, tuple(image))


def rank(p: Permutation) -> int:
    pool = list(p.ground())
    r = 0
    for i, v in enumerate(p.image):
        q = pool.index(v)
        r += q * factorial(p.size - 1 - i)
        pool.pop(q)
    return r


def iter_rank_range(n: int, start: int, stop: int, lo: int = 1) -> Iterator[tuple[int, ...]]:
    """One-line images for ranks ``start <= r < stop`` in lexicographic order."""
    if start >= stop:
        return
    a = list(unrank(n, start, lo).image)
    for _ in range(stop - start):
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] > a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] < a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])
