"""Pointers, the context-directed swap and reachability of CDS fixed points.

Each entry ``k`` of a one-line permutation carries a left pointer
``<k-1, k>`` (absent for 1) and a right pointer ``<k, k+1>`` (absent for n).
Pointer occurrences live in *gaps*: gap ``g`` sits between positions ``g``
and ``g+1`` (1-based), so gap 0 precedes the first entry.  Inside a gap the
right pointer of the entry on the left comes before the left pointer of the
entry on the right.
"""

from __future__ import annotations

from collections import deque
from enum import IntEnum
from typing import NamedTuple

from .perm import Permutation, identity

__all__ = [
    "InvalidContextError",
    "Slot",
    "Pointer",
    "PointerOccurrence",
    "pointer_sequence",
    "valid_contexts",
    "apply_cds",
    "segments_empty",
    "successors",
    "is_fixed_point",
    "rotation",
    "fixed_points",
    "reachable_fixed_points",
    "is_sortable",
]


class InvalidContextError(ValueError):
    """The two pointers do not occur as p ... q ... p ... q."""


class Slot(IntEnum):
    RIGHT_OF_LEFT_ENTRY = 0
    LEFT_OF_RIGHT_ENTRY = 1


class Pointer(NamedTuple):
    low: int

    def __str__(self) -> str:
        return f"<{self.low},{self.low + 1}>"


class PointerOccurrence(NamedTuple):
    pointer: Pointer
    gap: int
    slot: Slot


def pointer_sequence(p: Permutation) -> list[PointerOccurrence]:
    """All ``2(n-1)`` pointer occurrences of ``p`` in left-to-right order."""
    if p.lo != 1:
        raise ValueError("pointer_sequence expects a one-line permutation on {1..n}")
    n = p.size
    seq = []
    for pos, v in enumerate(p.image, start=1):
        if v > 1:
            seq.append(PointerOccurrence(Pointer(v - 1), pos - 1, Slot.LEFT_OF_RIGHT_ENTRY))
        if v < n:
            seq.append(PointerOccurrence(Pointer(v), pos, Slot.RIGHT_OF_LEFT_ENTRY))
    # already in (gap, slot) order: each entry emits its gap-(pos-1) left pointer then its gap-pos right pointer
    return seq


def _occurrences(image: tuple[int, ...]) -> dict[int, tuple[int, int, int, int]]:
    """pointer low -> (first index, first gap, second index, second gap)."""
    n = len(image)
    first: dict[int, tuple[int, int]] = {}
    occ = {}
    idx = 0
    for pos, v in enumerate(image, start=1):
        for low, gap in ((v - 1, pos - 1), (v, pos)):
            if not 1 <= low <= n - 1:
                continue
            if low in first:
                i1, g1 = first[low]
                occ[low] = (i1, g1, idx, gap)
            else:
                first[low] = (idx, gap)
            idx += 1
    return occ


def _contexts(image: tuple[int, ...]) -> list[tuple[int, int, int, int, int, int]]:
    """Valid contexts as (p, q, gap p1, gap q1, gap p2, gap q2)."""
    occ = _occurrences(image)
    out = []
    for p, (i1, g1, i2, g2) in occ.items():
        for q, (j1, h1, j2, h2) in occ.items():
            if i1 < j1 < i2 < j2:
                out.append((p, q, g1, h1, g2, h2))
    out.sort()
    return out


def _swap(image: tuple[int, ...], g1: int, h1: int, g2: int, h2: int) -> tuple[int, ...]:
    # entries strictly between gaps a <= b are image[a:b] (0-based slicing)
    return image[:g1] + image[g2:h2] + image[h1:g2] + image[g1:h1] + image[h2:]


def valid_contexts(p: Permutation) -> list[tuple[Pointer, Pointer]]:
    return [(Pointer(a), Pointer(b)) for a, b, *_ in _contexts(p.image)]


def apply_cds(p: Permutation, ptr_p: Pointer | int, ptr_q: Pointer | int) -> Permutation:
    """Swap the segment flanked by the first ``p...q`` with the one flanked by the second."""
    a, b = int(getattr(ptr_p, "low", ptr_p)), int(getattr(ptr_q, "low", ptr_q))
    for ctx in _contexts(p.image):
        if ctx[0] == a and ctx[1] == b:
            return Permutation(1, _swap(p.image, *ctx[2:]))
    raise InvalidContextError(f"{Pointer(a)} and {Pointer(b)} are not in p...q...p...q context in {p}")


def segments_empty(p: Permutation, ptr_p: Pointer | int, ptr_q: Pointer | int) -> bool:
    """True when both swapped segments are empty (the swap would be a no-op)."""
    a, b = int(getattr(ptr_p, "low", ptr_p)), int(getattr(ptr_q, "low", ptr_q))
    for pp, qq, g1, h1, g2, h2 in _contexts(p.image):
        if (pp, qq) == (a, b):
            return g1 == h1 and g2 == h2
    raise InvalidContextError(f"{Pointer(a)} and {Pointer(b)} are not a valid context in {p}")


def successors(image: tuple[int, ...]) -> list[tuple[int, ...]]:
    """One-line images reachable by a single CDS step."""
    return [_swap(image, *ctx[2:]) for ctx in _contexts(image)]


def is_fixed_point(p: Permutation) -> bool:
    return not _contexts(p.image)


def rotation(n: int, k: int) -> Permutation:
    """``[k+1 ... n 1 ... k]``; ``k = 0`` gives the identity."""
    return Permutation(1, tuple(range(k + 1, n + 1)) + tuple(range(1, k + 1)))


def fixed_points(n: int) -> list[Permutation]:
    """The identity followed by the rotations for ``k = 1..n-1``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return [identity(n)] + [rotation(n, k) for k in range(1, n)]


def _reach(start: tuple[int, ...], memo: dict[tuple[int, ...], frozenset]) -> frozenset:
    if start in memo:
        return memo[start]
    found: set[tuple[int, ...]] = set()
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur in memo and cur != start:
            found |= memo[cur]
            continue
        nxt = successors(cur)
        if not nxt:
            found.add(cur)
            continue
        for img in nxt:
            if img not in seen:
                seen.add(img)
                queue.append(img)
    result = frozenset(found)
    memo[start] = result
    return result


def reachable_fixed_points(
    p: Permutation, memo: dict[tuple[int, ...], frozenset] | None = None
) -> set[Permutation]:
    """Fixed points reachable from ``p`` by some sequence of CDS steps.

    ``memo`` maps one-line images to their completed reachable sets and may
    be shared across calls handled by the same worker.
    """
    if memo is None:
        memo = {}
    return {Permutation(1, img) for img in _reach(p.image, memo)}


def is_sortable(p: Permutation, memo: dict | None = None) -> bool:
    return identity(p.size) in reachable_fixed_points(p, memo)
