"""Permutations, words, and their elementary statistics.

A permutation is a tuple in one-line notation.  By default it permutes
{1, ..., n}; an explicit ground set (any strictly increasing tuple of
integers) may be supplied for permutations of other finite integer
sets, which is what derangement families on a descent set need.
Descent sets are plain frozensets of positions; compositions are tuples
of positive parts.

A word is any tuple of positive integers.  Statistics that need the
inverse (ides) require the letter support to be an interval {1,...,m}
with every value present.
"""

from __future__ import annotations

from typing import Iterator, Sequence

Perm = tuple[int, ...]
Ground = tuple[int, ...]


def check_permutation(p: Sequence[int], ground: Ground | None = None) -> Perm:
    """Validate one-line notation against its ground set and return it.

    >>> check_permutation((2, 1, 3))
    (2, 1, 3)
    >>> check_permutation((6, 3, 1, 2), ground=(1, 2, 3, 6))
    (6, 3, 1, 2)
    """
    p = tuple(p)
    g = tuple(range(1, len(p) + 1)) if ground is None else tuple(ground)
    if len(g) != len(p):
        raise ValueError(f"ground set size {len(g)} != length {len(p)}")
    if any(a >= b for a, b in zip(g, g[1:])):
        raise ValueError("ground set must be strictly increasing")
    if sorted(p) != sorted(g):
        raise ValueError(f"{p} is not a bijection of {g}")
    return p


def inverse(p: Perm) -> Perm:
    """Inverse of a permutation of {1..n}."""
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def descent_set(p: Sequence[int]) -> frozenset[int]:
    """Positions i (1-based) where the value drops: p[i] > p[i+1].

    Works for any word; for a permutation on a ground set this is the
    positional descent set, independent of the ground-set labels.

    >>> sorted(descent_set((8, 2, 1, 3, 5, 6, 4, 9, 7)))
    [1, 2, 6, 8]
    """
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def fix_count(p: Perm, ground: Ground | None = None) -> int:
    """Number of fixed points sigma(j) = j over the ground set."""
    g = range(1, len(p) + 1) if ground is None else ground
    return sum(1 for j, v in zip(g, p) if v == j)


def exc_count(p: Perm, ground: Ground | None = None) -> int:
    """Number of excedances sigma(j) > j over the ground set.

    >>> exc_count((7, 4, 3, 1, 5, 6, 2, 8))
    2
    >>> exc_count((6, 3, 1, 2), ground=(1, 2, 3, 6))
    2
    """
    g = range(1, len(p) + 1) if ground is None else ground
    return sum(1 for j, v in zip(g, p) if v > j)


def sub_count(p: Perm, ground: Ground | None = None) -> int:
    """Number of subcedances sigma(j) < j."""
    g = range(1, len(p) + 1) if ground is None else ground
    return sum(1 for j, v in zip(g, p) if v < j)


def iexc(p: Perm) -> int:
    """exc of the inverse permutation (ground set {1..n} only)."""
    return sum(1 for i, v in enumerate(p, start=1) if v < i)


def dez(p: Perm) -> frozenset[int]:
    """Descent set of the word with every fixed point replaced by 0.

    Descents of the masked word are strict, so two adjacent zeros never
    form a descent.

    >>> sorted(dez((8, 2, 1, 3, 5, 6, 4, 9, 7)))
    [1, 4, 8]
    """
    masked = [0 if v == i else v for i, v in enumerate(p, start=1)]
    return descent_set(masked)


def des_maj(p: Sequence[int]) -> tuple[int, int]:
    """(number of descents, sum of descent positions)."""
    d = descent_set(p)
    return len(d), sum(d)


def inv_count(w: Sequence[int]) -> int:
    """Number of inversions: pairs i < j with w[i] > w[j]."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def word_support(w: Sequence[int]) -> int:
    """Largest letter m, after checking support is exactly {1..m}."""
    if not w:
        return 0
    m = max(w)
    if min(w) < 1:
        raise ValueError("letters must be positive")
    if len(set(w)) != m:
        raise ValueError(f"letter support of {tuple(w)} has a gap below {m}")
    return m


def ides(w: Sequence[int]) -> frozenset[int]:
    """Descents of the inverse, extended to words.

    For a word on full support {1..m}: i is counted when the rightmost i
    stands to the right of the rightmost i+1.  For a permutation this is
    exactly descent_set(inverse(w)).

    >>> sorted(ides((2, 3, 1, 5, 4)))
    [1, 4]
    >>> sorted(ides((1, 2, 1)))
    [1]
    """
    m = word_support(w)
    last = {}
    for pos, letter in enumerate(w):
        last[letter] = pos
    return frozenset(i for i in range(1, m) if last[i] > last[i + 1])


def block_decomposition(J: frozenset[int] | set[int]) -> tuple[int, ...]:
    """Sizes of the maximal runs of consecutive integers in J, in order.

    >>> block_decomposition({1, 2, 3, 6})
    (3, 1)
    >>> block_decomposition({1, 3, 5})
    (1, 1, 1)
    """
    if not J:
        raise ValueError("empty descent set has no block decomposition")
    js = sorted(J)
    sizes = [1]
    for a, b in zip(js, js[1:]):
        if b == a + 1:
            sizes[-1] += 1
        else:
            sizes.append(1)
    return tuple(sizes)


def composition_of_descents(J: frozenset[int] | set[int], n: int) -> tuple[int, ...]:
    """The composition (m_1,...,m_r) of n whose partial sums are J.

    >>> composition_of_descents({1, 3}, 4)
    (1, 2, 1)
    >>> composition_of_descents(frozenset(), 3)
    (3,)
    """
    js = sorted(J)
    if js and (js[0] < 1 or js[-1] > n - 1):
        raise ValueError(f"{sorted(J)} is not a subset of [{n - 1}]")
    out, prev = [], 0
    for j in js:
        out.append(j - prev)
        prev = j
    out.append(n - prev)
    return tuple(out)


def descents_of_composition(m: Sequence[int]) -> frozenset[int]:
    """Partial sums s_1 < ... < s_{r-1} of a composition, as a descent set."""
    if not m or any(part < 1 for part in m):
        raise ValueError(f"parts must be positive: {tuple(m)}")
    out, acc = [], 0
    for part in m[:-1]:
        acc += part
        out.append(acc)
    return frozenset(out)


def standardize(w: Sequence[int]) -> Perm:
    """Relabel a word into a permutation, ties broken left to right.

    Occurrences of the smallest letter become 1, 2, ... in reading
    order, then the next letter continues the numbering, and so on.
    Letters need not form an interval.  Preserves the
    hook-factorization shape (see hooks module).

    >>> standardize((1, 2, 1, 1))
    (1, 4, 2, 3)
    >>> standardize((2, 2, 1))
    (2, 3, 1)
    >>> standardize((3, 6, 1, 10, 7))
    (2, 3, 1, 5, 4)
    """
    if any(letter < 1 for letter in w):
        raise ValueError("letters must be positive")
    counts: dict[int, int] = {}
    for letter in w:
        counts[letter] = counts.get(letter, 0) + 1
    start, acc = {}, 0
    for letter in sorted(counts):
        start[letter] = acc
        acc += counts[letter]
    seen = dict.fromkeys(counts, 0)
    out = []
    for letter in w:
        out.append(start[letter] + seen[letter] + 1)
        seen[letter] += 1
    return tuple(out)


def destandardize(p: Perm, m: Sequence[int]) -> tuple[int, ...]:
    """The unique word in the rearrangement class of m standardizing to p.

    Values 1..m_1 become letter 1, the next m_2 values letter 2, etc.
    Inverse of standardize on the class R(m).

    >>> destandardize((1, 4, 2, 3), (3, 1))
    (1, 2, 1, 1)
    """
    if sum(m) != len(p):
        raise ValueError(f"composition total {sum(m)} != permutation length {len(p)}")
    letter_of = [0] * (len(p) + 1)
    v = 1
    for letter, part in enumerate(m, start=1):
        for _ in range(part):
            letter_of[v] = letter
            v += 1
    return tuple(letter_of[x] for x in p)


def rearrangements(m: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All words with m_i copies of letter i, in lexicographic order."""
    if any(part < 1 for part in m):
        raise ValueError(f"parts must be positive: {tuple(m)}")
    pool = []
    for letter, part in enumerate(m, start=1):
        pool.extend([letter] * part)
    n = len(pool)

    def rec(remaining: list[int], prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for letter in sorted(set(remaining)):
            rest = list(remaining)
            rest.remove(letter)
            prefix.append(letter)
            yield from rec(rest, prefix)
            prefix.pop()

    return rec(pool, [])


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    """All compositions of a positive integer, in bitmask-cut order."""
    if total < 1:
        raise ValueError("total must be positive")
    for mask in range(1 << (total - 1)):
        parts, size = [], 1
        for i in range(total - 1):
            if mask >> i & 1:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        yield tuple(parts)
