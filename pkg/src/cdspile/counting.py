"""Closed-form pile-size counts and the factorization maps behind the maximum-pile count.

``count_pile_size(n, k)`` evaluates

    (n-k)! * sum_i c(k, i) * C(n-(k+1), k-(i+1))

with merge numbers taken from a :class:`MergeNumberTable`.  By default the
table is computed (structure method); pass the printed table instead to see
what the published coefficients predict.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .merge import MergeNumberTable, binom, computed_table, max_merges
from .perm import Permutation, compose, extend, from_cycles, inverse, is_cycle, restrict

__all__ = [
    "SERIES",
    "FactorizationClassError",
    "FactorizationPair",
    "count_max_pile",
    "count_pile_size",
    "histogram_formula",
    "oeis_terms",
    "adjoin_cycle",
    "inner_cycle",
    "shift_adjust",
    "map_A_to_B1",
    "map_B1_to_A",
    "map_shift",
]

# OEIS tag -> pile size k of the matching closed-form row
SERIES = {
    "A000142": 1,
    "A062119": 2,
    "A267323": 3,
    "A267324": 4,
    "A267391": 5,
    "A281259": 6,
}


def count_max_pile(n: int) -> int:
    """Number of permutations of S_n whose strategic pile is as large as possible.

    Even ``n``: pile size ``n-1``, count ``2(n-1)!/n``.  Odd ``n``: pile size
    ``n-2``, count ``2(n-2)!``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if n % 2 == 0:
        q, r = divmod(2 * factorial(n - 1), n)
        assert r == 0
        return q
    return 2 * factorial(n - 2)


def _table_for(k: int, merge_numbers: MergeNumberTable | None) -> MergeNumberTable:
    if merge_numbers is not None:
        return merge_numbers
    return computed_table(max(k, 1))


def count_pile_size(n: int, k: int, merge_numbers: MergeNumberTable | None = None) -> int:
    if not 1 <= k <= n - 1:
        raise ValueError(f"pile size k={k} outside 1..{n - 1}")
    if n % 2 and k == n - 1:
        return 0
    table = _table_for(k, merge_numbers)
    top = max(max_merges(k), max((l for kk, l in table.entries if kk == k), default=0))
    total = sum(table.get(k, i) * binom(n - (k + 1), k - (i + 1)) for i in range(top + 1))
    return factorial(n - k) * total


def histogram_formula(n: int, merge_numbers: MergeNumberTable | None = None) -> dict[int, int]:
    """Pile size -> count for ``k = 0..n-1``; ``k = 0`` is whatever the others leave of ``n!``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    table = merge_numbers if merge_numbers is not None else computed_table(max(n - 1, 1))
    hist = {k: count_pile_size(n, k, table) for k in range(1, n)}
    hist = {0: factorial(n) - sum(hist.values()), **hist}
    return hist


def oeis_terms(series: str, count: int, merge_numbers: MergeNumberTable | None = None) -> list[int]:
    """``count`` successive row values starting at ``n = k + 1``."""
    try:
        k = SERIES[series.upper()]
    except KeyError:
        raise ValueError(f"unknown series {series!r}; known: {', '.join(SERIES)}") from None
    table = _table_for(k, merge_numbers)
    return [count_pile_size(n, k, table) for n in range(k + 1, k + 1 + count)]


# -- factorization maps ------------------------------------------------------


class FactorizationClassError(ValueError):
    """A factorization pair is not in the class a map needs."""


@dataclass(frozen=True)
class FactorizationPair:
    """``left o right`` as a factorization, for the parameter ``n`` of the maps.

    A-class pairs live on ``{0..n-2}`` and factor ``(0 1 ... n-2)`` into two
    ``(n-1)``-cycles.  B_i pairs live on ``{0..n}``, factor ``(0 1 ... n)`` into
    two ``(n+1)``-cycles and have ``right`` of the form ``(0 n i ...)``.
    """

    left: Permutation
    right: Permutation
    n: int

    @property
    def ground_hi(self) -> int:
        return self.left.hi

    def membership(self) -> str | None:
        """``"A"``, ``"B<i>"`` or ``None``."""
        n, f, g = self.n, self.left, self.right
        if f.lo != 0 or g.lo != 0 or f.hi != g.hi:
            return None
        hi = f.hi
        target = from_cycles([range(hi + 1)], 0, hi)
        if compose(f, g) != target or not is_cycle(f, hi + 1) or not is_cycle(g, hi + 1):
            return None
        if hi == n - 2:
            return "A"
        if hi == n and g(0) == n:
            return f"B{g(n)}"
        return None

    def __str__(self) -> str:
        return f"{self.left.to_cycles()} o {self.right.to_cycles()}"


def adjoin_cycle(n: int) -> Permutation:
    """``(0 n 1)`` on ``{0..n}``."""
    return from_cycles([(0, n, 1)], 0, n)


def inner_cycle(n: int) -> Permutation:
    """``(1 2 ... n-1)`` on ``{0..n}``."""
    return from_cycles([range(1, n)], 0, n)


def shift_adjust(n: int) -> Permutation:
    """``(2 1 n)`` on ``{0..n}``."""
    return from_cycles([(2, 1, n)], 0, n)


def _expect(f: FactorizationPair, wanted: set[str] | str, what: str) -> str:
    got = f.membership()
    ok = got in wanted if isinstance(wanted, set) else got == wanted
    if not ok:
        raise FactorizationClassError(f"{what}: {f} is in class {got}, expected {wanted}")
    return got


def map_A_to_B1(f: FactorizationPair) -> FactorizationPair:
    _expect(f, "A", "map_A_to_B1 input")
    n = f.n
    lam, c = adjoin_cycle(n), inner_cycle(n)
    c_inv = inverse(c)
    gamma, delta = extend(f.left, n), extend(f.right, n)
    out = FactorizationPair(
        compose(lam, compose(c, compose(gamma, c_inv))),
        compose(c, compose(delta, compose(c_inv, lam))),
        n,
    )
    _expect(out, "B1", "map_A_to_B1 output")
    return out


def map_B1_to_A(f: FactorizationPair) -> FactorizationPair:
    _expect(f, "B1", "map_B1_to_A input")
    n = f.n
    lam_inv, c = inverse(adjoin_cycle(n)), inner_cycle(n)
    c_inv = inverse(c)
    gamma = compose(c_inv, compose(lam_inv, compose(f.left, c)))
    delta = compose(c_inv, compose(f.right, compose(lam_inv, c)))
    out = FactorizationPair(restrict(gamma, n - 2), restrict(delta, n - 2), n)
    _expect(out, "A", "map_B1_to_A output")
    return out


def map_shift(f: FactorizationPair) -> FactorizationPair:
    """B_i -> B_{i+1}; from B_{n-1} it lands back in B_1."""
    n = f.n
    got = _expect(f, {f"B{i}" for i in range(1, n)}, "map_shift input")
    i = int(got[1:])
    r, c = shift_adjust(n), inner_cycle(n)
    c_inv = inverse(c)
    out = FactorizationPair(
        compose(r, compose(c, compose(f.left, c_inv))),
        compose(c, compose(f.right, c_inv)),
        n,
    )
    _expect(out, f"B{i % (n - 1) + 1}", "map_shift output")
    return out
