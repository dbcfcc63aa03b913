"""Pure-Python census kernel; the reference the Cython build must agree with.

Works on raw one-line tuples and never touches the ``pile`` module, so the
census stays an independent check of the structural code.
"""

from __future__ import annotations

from math import factorial


def pile_values(image) -> list[int]:
    """Ordered strategic pile of ``image`` read straight off the cycle product."""
    n = len(image)
    # rev[x] = image of x under the reversal cycle (0 a_n ... a_1)
    rev = [0] * (n + 1)
    rev[0] = image[n - 1]
    for j in range(1, n):
        rev[image[j]] = image[j - 1]
    rev[image[0]] = 0
    out = []
    x = rev[1]  # product applied to 0
    seen_top = False
    while x != 0:
        if seen_top:
            out.append(x)
        elif x == n:
            seen_top = True
        x = rev[x + 1] if x < n else rev[0]
    return out if seen_top else []


def merge_count(pile) -> int:
    """Members ``b`` with ``b + 1`` also in the pile."""
    members = set(pile)
    return sum(1 for b in pile if b + 1 in members)


def _unrank(n: int, r: int) -> list[int]:
    pool = list(range(1, n + 1))
    out = []
    for i in range(n, 0, -1):
        q, r = divmod(r, factorial(i - 1))
        out.append(pool.pop(q))
    return out


def census_chunk(n: int, start: int, stop: int) -> list[int]:
    """Counts for ranks ``start <= r < stop``, flattened as ``counts[k * n + merges]``."""
    counts = [0] * (n * n)
    if start >= stop:
        return counts
    a = _unrank(n, start)
    rev = [0] * (n + 1)
    for _ in range(stop - start):
        rev[0] = a[n - 1]
        for j in range(1, n):
            rev[a[j]] = a[j - 1]
        rev[a[0]] = 0
        size = 0
        merged = 0
        in_pile = [False] * (n + 2)
        x = rev[1]
        seen_top = False
        while x != 0:
            if seen_top:
                in_pile[x] = True
                size += 1
            elif x == n:
                seen_top = True
            x = rev[x + 1] if x < n else rev[0]
        if size:
            for b in range(1, n):
                if in_pile[b] and in_pile[b + 1]:
                    merged += 1
        counts[size * n + merged] += 1
        # next permutation in lexicographic order
        i = n - 2
        while i >= 0 and a[i] > a[i + 1]:
            i -= 1
        if i < 0:
            break
        j = n - 1
        while a[j] < a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])
    return counts


def structure_census(k: int) -> dict[tuple[int, ...], int]:
    """Cycle structure of ``sigma* o psi`` tallied over all ``(k-1)!`` ordered pair lists."""
    from itertools import permutations

    counts: dict[tuple[int, ...], int] = {}
    star = [0] * (k + 1)
    for head in permutations(range(2, k + 1)):
        cyc = head + (1,)
        for i in range(k):
            star[cyc[i]] = cyc[(i + 1) % k]
        seen = [False] * (k + 1)
        lengths = []
        for s in range(1, k + 1):
            if seen[s]:
                continue
            length = 0
            x = s
            while not seen[x]:
                seen[x] = True
                length += 1
                x = star[x % k + 1]
            if length > 1:
                lengths.append(length)
        key = tuple(sorted(lengths, reverse=True))
        counts[key] = counts.get(key, 0) + 1
    return counts
