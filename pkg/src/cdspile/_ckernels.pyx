# cython: language_level=3
"""Compiled census kernel; same contract as ``cdspile._pykernels``."""

from libc.stdlib cimport malloc, free

cdef enum:
    MAXN = 16


def pile_values(image):
    cdef int n = len(image)
    cdef int rev[MAXN + 1]
    cdef int j, x
    cdef bint seen_top = False
    if n > MAXN:
        raise ValueError("n too large for the compiled kernel")
    rev[0] = image[n - 1]
    for j in range(1, n):
        rev[<int>image[j]] = image[j - 1]
    rev[<int>image[0]] = 0
    out = []
    x = rev[1]
    while x != 0:
        if seen_top:
            out.append(x)
        elif x == n:
            seen_top = True
        x = rev[x + 1] if x < n else rev[0]
    return out if seen_top else []


def merge_count(pile):
    members = set(pile)
    return sum(1 for b in pile if b + 1 in members)


def census_chunk(int n, long long start, long long stop):
    cdef int a[MAXN]
    cdef int rev[MAXN + 1]
    cdef bint in_pile[MAXN + 2]
    cdef int pool[MAXN]
    cdef long long *counts
    cdef long long r, fact, remaining
    cdef int i, j, q, x, t, size, merged, b, plen
    cdef bint seen_top
    if n < 1 or n > MAXN:
        raise ValueError("n outside the compiled kernel range")
    counts = <long long *> malloc(n * n * sizeof(long long))
    if counts == NULL:
        raise MemoryError()
    try:
        for i in range(n * n):
            counts[i] = 0
        if start >= stop:
            return [counts[i] for i in range(n * n)]
        # unrank start
        for i in range(n):
            pool[i] = i + 1
        plen = n
        r = start
        for i in range(n, 0, -1):
            fact = 1
            for j in range(2, i):
                fact *= j
            q = <int>(r // fact)
            r = r % fact
            a[n - i] = pool[q]
            for j in range(q, plen - 1):
                pool[j] = pool[j + 1]
            plen -= 1
        remaining = stop - start
        while remaining > 0:
            remaining -= 1
            rev[0] = a[n - 1]
            for j in range(1, n):
                rev[a[j]] = a[j - 1]
            rev[a[0]] = 0
            for j in range(n + 2):
                in_pile[j] = False
            size = 0
            merged = 0
            seen_top = False
            x = rev[1]
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
            i = n - 2
            while i >= 0 and a[i] > a[i + 1]:
                i -= 1
            if i < 0:
                break
            j = n - 1
            while a[j] < a[i]:
                j -= 1
            t = a[i]; a[i] = a[j]; a[j] = t
            i += 1
            j = n - 1
            while i < j:
                t = a[i]; a[i] = a[j]; a[j] = t
                i += 1
                j -= 1
        return [counts[i] for i in range(n * n)]
    finally:
        free(counts)


def structure_census(int k):
    cdef int head[MAXN]
    cdef int cyc[MAXN]
    cdef int star[MAXN + 1]
    cdef bint seen[MAXN + 1]
    cdef int lengths[MAXN]
    cdef int m = k - 1
    cdef int i, j, t, s, x, length, nl
    cdef long long key
    if k < 1 or k > MAXN:
        raise ValueError("k outside the compiled kernel range")
    counts = {}
    for i in range(m):
        head[i] = i + 2
    while True:
        for i in range(m):
            cyc[i] = head[i]
        cyc[m] = 1
        for i in range(k):
            star[cyc[i]] = cyc[(i + 1) % k]
        for i in range(k + 1):
            seen[i] = False
        nl = 0
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
                lengths[nl] = length
                nl += 1
        # insertion sort, descending
        for i in range(1, nl):
            t = lengths[i]
            j = i - 1
            while j >= 0 and lengths[j] < t:
                lengths[j + 1] = lengths[j]
                j -= 1
            lengths[j + 1] = t
        key = 0
        for i in range(nl):
            key = key * (MAXN + 1) + lengths[i]
        key = key * (MAXN + 1) + nl
        counts[key] = counts.get(key, 0) + 1
        # next permutation of head
        i = m - 2
        while i >= 0 and head[i] > head[i + 1]:
            i -= 1
        if i < 0:
            break
        j = m - 1
        while head[j] < head[i]:
            j -= 1
        t = head[i]; head[i] = head[j]; head[j] = t
        i += 1
        j = m - 1
        while i < j:
            t = head[i]; head[i] = head[j]; head[j] = t
            i += 1
            j -= 1
    out = {}
    for key, value in counts.items():
        nl = key % (MAXN + 1)
        key //= (MAXN + 1)
        parts = []
        for i in range(nl):
            parts.append(int(key % (MAXN + 1)))
            key //= (MAXN + 1)
        out[tuple(reversed(parts))] = value
    return out
