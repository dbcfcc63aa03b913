"""Strategic piles and the pair/merge structure of non-sortable permutations.

For ``pi = [a_1 ... a_n]`` we build, on ``{0..n}``, the shift cycle
``(0 1 ... n)``, the reversal cycle ``(0 a_n ... a_1)`` and their product
``reversal o shift``.  When 0 and n share a cycle of the product, that cycle
reads ``(0 u_1 ... u_j n b_1 ... b_k)`` and ``(b_1, ..., b_k)`` is the ordered
strategic pile.

Structural results are reported with *labels*: label ``j`` stands for the
pile member ``b_j``.  Labels are what the merge-number machinery works with.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .perm import Permutation, compose, from_cycles

__all__ = [
    "EmptyPileError",
    "AdjacencyError",
    "StrategicPile",
    "OrderedPairList",
    "MergeGraph",
    "shift_cycle",
    "reversal_cycle",
    "cycle_product",
    "strategic_pile",
    "pairs",
    "ordered_pair_list",
    "merges",
    "merge_graph",
    "adjacencies",
    "project",
    "expand",
]


class EmptyPileError(ValueError):
    """The operation needs a permutation with a nonempty strategic pile."""


class AdjacencyError(ValueError):
    """Projection/expansion preconditions on adjacencies are violated."""


@dataclass(frozen=True)
class StrategicPile:
    ordered: tuple[int, ...]
    lead: tuple[int, ...] = ()  # the u-segment between 0 and n; kept for reporting

    def __len__(self) -> int:
        return len(self.ordered)

    def __bool__(self) -> bool:
        return bool(self.ordered)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(self.ordered)

    def value(self, label: int) -> int:
        """Numeric value of ``b_label`` (labels are 1-based)."""
        return self.ordered[label - 1]

    def label(self, value: int) -> int:
        return self.ordered.index(value) + 1

    def set_str(self) -> str:
        if not self.ordered:
            return "{}"
        return "{" + ", ".join(map(str, sorted(self.ordered))) + "}"

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.ordered)) + ")"


@dataclass(frozen=True)
class OrderedPairList:
    """Pair leaders (as labels) in positional order; always ends with label 1."""

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        k = len(labels)
        if sorted(labels) != list(range(1, k + 1)):
            raise ValueError(f"{labels} is not an arrangement of the labels 1..{k}")
        if labels[-1] != 1:
            raise ValueError(f"ordered pair list {labels} must end with label 1")

    @classmethod
    def from_cycle(cls, cycle: Sequence[int]) -> "OrderedPairList":
        """Read a cyclic arrangement of labels, rotating it so that it ends in 1."""
        cycle = tuple(cycle)
        i = cycle.index(1)
        return cls(cycle[i + 1:] + cycle[: i + 1])

    @property
    def k(self) -> int:
        return len(self.labels)

    def __str__(self) -> str:
        return "(" + ", ".join(f"b{j}" for j in self.labels) + ")"


@dataclass(frozen=True)
class MergeGraph:
    """Realized value relations ``b_i + 1 = b_j`` between pile members, by label."""

    k: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    @property
    def vertices(self) -> range:
        return range(1, self.k + 1)

    def is_acyclic(self) -> bool:
        succ = dict(self.edges)
        if len(succ) != len(self.edges) or len({j for _, j in self.edges}) != len(self.edges):
            return False
        for start in succ:
            x, steps = succ[start], 1
            while x in succ and x != start and steps <= self.k:
                x, steps = succ[x], steps + 1
            if x == start:
                return False
        return True


def _require_one_line(p: Permutation) -> None:
    if p.lo != 1:
        raise ValueError("expected a one-line permutation on {1..n}")


def shift_cycle(n: int) -> Permutation:
    """``(0 1 2 ... n)`` on ``{0..n}``."""
    return from_cycles([range(n + 1)], 0, n)


def reversal_cycle(p: Permutation) -> Permutation:
    """``(0 a_n a_{n-1} ... a_1)`` on ``{0..n}``."""
    _require_one_line(p)
    return from_cycles([(0,) + tuple(reversed(p.image))], 0, p.size)


def cycle_product(p: Permutation) -> Permutation:
    """``reversal_cycle(p) o shift_cycle(n)``."""
    return compose(reversal_cycle(p), shift_cycle(p.size))


def strategic_pile(p: Permutation) -> StrategicPile:
    _require_one_line(p)
    n = p.size
    c = cycle_product(p)
    walk = []
    x = c(0)
    while x != 0:
        walk.append(x)
        x = c(x)
    if n not in walk:
        return StrategicPile(())
    cut = walk.index(n)
    return StrategicPile(tuple(walk[cut + 1:]), tuple(walk[:cut]))


def _pile_or_raise(p: Permutation) -> StrategicPile:
    sp = strategic_pile(p)
    if not sp:
        raise EmptyPileError(f"{p} has an empty strategic pile")
    return sp


def _leader_positions(p: Permutation, sp: StrategicPile) -> dict[int, int]:
    """label -> 1-based position of its pair leader, after checking the pair structure."""
    image, n, b = p.image, p.size, sp.ordered
    k = len(b)
    if image[0] != b[-1] + 1 or image[-1] != b[0]:
        raise AssertionError(f"{p}: first/last entries do not match pile {sp}")
    pos = {v: i + 1 for i, v in enumerate(image)}
    leaders = {1: n}
    for j in range(2, k + 1):
        where = pos[b[j - 1]]
        if where >= n or image[where] != b[j - 2] + 1:
            raise AssertionError(f"{p}: b{j} is not immediately left of b{j - 1}+1")
        leaders[j] = where
    return leaders


def pairs(p: Permutation) -> list[tuple[int, int]]:
    """Pairs ``(leader, follower)`` as values, in positional order; the wrap pair ``(b_1, b_k+1)`` is last."""
    sp = _pile_or_raise(p)
    leaders = _leader_positions(p, sp)
    b = sp.ordered
    k = len(b)
    out = []
    for j in sorted(leaders, key=leaders.get):
        follower = b[j - 2] + 1 if j > 1 else b[k - 1] + 1
        out.append((b[j - 1], follower))
    return out


def ordered_pair_list(p: Permutation) -> OrderedPairList:
    sp = _pile_or_raise(p)
    leaders = _leader_positions(p, sp)
    return OrderedPairList(tuple(sorted(leaders, key=leaders.get)))


def merges(p: Permutation) -> list[tuple[int, int]]:
    """Merges as label pairs ``(x, y)``: pile members ``b_x b_y`` sitting side by side.

    Consecutive leaders of the cyclic pair list are checked, including the
    wrap from ``b_1`` (last entry) to the leader in position 1.
    """
    sp = _pile_or_raise(p)
    leaders = _leader_positions(p, sp)
    sigma = sorted(leaders, key=leaders.get)
    k = len(sigma)
    if k == 1:
        return []
    out = []
    for i in range(k - 1):
        x, y = sigma[i], sigma[i + 1]
        if leaders[x] + 1 == leaders[y]:
            out.append((x, y))
    if leaders[sigma[0]] == 1:
        out.append((1, sigma[0]))
    return out


def merge_graph(p: Permutation) -> MergeGraph:
    sp = _pile_or_raise(p)
    label = {v: j for j, v in enumerate(sp.ordered, start=1)}
    edges = frozenset((label[v], label[v + 1]) for v in sp.ordered if v + 1 in label)
    return MergeGraph(len(sp), edges)


def adjacencies(p: Permutation) -> list[int]:
    """1-based positions ``i`` with ``a_{i+1} = a_i + 1``."""
    _require_one_line(p)
    a = p.image
    return [i + 1 for i in range(len(a) - 1) if a[i + 1] == a[i] + 1]


def project(p: Permutation) -> Permutation:
    """Drop the second entry of the single adjacency and close up the values."""
    adj = adjacencies(p)
    if len(adj) != 1:
        raise AdjacencyError(f"{p} has {len(adj)} adjacencies; projection needs exactly one")
    i = adj[0]
    a = (None,) + p.image  # 1-based
    n = p.size
    out = []
    for j in range(1, n):
        if j <= i:
            out.append(a[j] if a[j] <= a[i] else a[j] - 1)
        else:
            out.append(a[j + 1] if a[j + 1] < a[i + 1] else a[j + 1] - 1)
    return Permutation(1, tuple(out))


def expand(m: Permutation, i: int) -> Permutation:
    """Insert ``m_i + 1`` right after position ``i``, raising the larger values."""
    _require_one_line(m)
    if adjacencies(m):
        raise AdjacencyError(f"{m} has an adjacency; expansion needs none")
    if not 1 <= i <= m.size:
        raise AdjacencyError(f"position {i} outside 1..{m.size}")
    pivot = m.image[i - 1]
    bump = [v + 1 if v > pivot else v for v in m.image]
    return Permutation(1, tuple(bump[:i]) + (pivot + 1,) + tuple(bump[i:]))
