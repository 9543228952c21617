"""Exhaustive enumeration over symmetric groups and descent classes.

Everything here is exact and finite: generators for permutation
families cut out by descent conditions, the paired sets whose counting
polynomials the verifiers compare, and statistic tabulation.  Families
are always iterated in lexicographic one-line order, so two runs
produce identical streams.

Named statistics come in two flavors: lowercase names ("fix", "exc",
"lec", ...) are numeric, uppercase names ("DES", "DEZ", "IDES") are
descent sets.
"""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .hooks import lec, pix
from .kernels import mask_of, scan_sn
from .perms import (
    Perm,
    check_permutation,
    des_maj,
    descent_set,
    dez,
    exc_count,
    fix_count,
    ides,
    iexc,
    inv_count,
    standardize,
)
from .poly import MPoly, poly_from_counter

FILTER_BOUND = 8
MAX_N = 10

NUM_STATS: Mapping[str, Callable] = {
    "fix": fix_count,
    "exc": exc_count,
    "iexc": iexc,
    "des": lambda p: len(descent_set(p)),
    "maj": lambda p: des_maj(p)[1],
    "inv": inv_count,
    "lec": lec,
    "pix": pix,
}

SET_STATS: Mapping[str, Callable] = {
    "DES": descent_set,
    "DEZ": dez,
    "IDES": ides,
}


def resolve_stat(stat) -> Callable:
    """Look up a statistic by name, or pass a callable through."""
    if callable(stat):
        return stat
    if stat in NUM_STATS:
        return NUM_STATS[stat]
    if stat in SET_STATS:
        return SET_STATS[stat]
    raise KeyError(f"unknown statistic {stat!r}")


def _check_bounds(n: int, J: Iterable[int] | None = None) -> frozenset:
    if n < 0 or n > MAX_N:
        raise ValueError(f"n={n} outside the supported range 0..{MAX_N}")
    J = frozenset(J or ())
    if not all(1 <= j <= n - 1 for j in J):
        raise ValueError(f"descent set {sorted(J)} not contained in [n-1] for n={n}")
    return J


def all_perms(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order.

    >>> sum(1 for _ in all_perms(4))
    24
    """
    _check_bounds(n)
    return permutations(range(1, n + 1))


def _descent_backtrack(n: int, J: frozenset) -> Iterator[Perm]:
    """Build DES=J permutations letter by letter, in lexicographic order.

    The relation between consecutive letters is forced by J, so every
    partial word extends only along the required ascents and descents.
    """
    used = [False] * (n + 1)
    prefix: list[int] = []

    def extend(i: int) -> Iterator[Perm]:
        if i == n:
            yield tuple(prefix)
            return
        if i == 0:
            lo, hi = 1, n
        elif i in J:
            lo, hi = 1, prefix[-1] - 1
        else:
            lo, hi = prefix[-1] + 1, n
        for v in range(lo, hi + 1):
            if not used[v]:
                used[v] = True
                prefix.append(v)
                yield from extend(i + 1)
                prefix.pop()
                used[v] = False

    return extend(0)


def perms_with_des(n: int, J: Iterable[int]) -> Iterator[Perm]:
    """Permutations of [n] with descent set exactly J.

    Filtering S_n is the trusted path up to n=8; larger n switch to the
    backtracking generator, which the tests hold to agreement with the
    filter on the shared range.

    >>> list(perms_with_des(3, {2}))
    [(1, 3, 2), (2, 3, 1)]
    """
    J = _check_bounds(n, J)
    if n <= FILTER_BOUND:
        return (p for p in all_perms(n) if descent_set(p) == J)
    return _descent_backtrack(n, J)


def perms_with_dez(n: int, J: Iterable[int]) -> Iterator[Perm]:
    """Permutations of [n] whose descent set after zeroing fixed points is J."""
    J = _check_bounds(n, J)
    return (p for p in all_perms(n) if dez(p) == J)


def perms_with_ides(n: int, J: Iterable[int], mode: str = "equal") -> Iterator[Perm]:
    """Permutations of [n] with inverse descent set equal to (or inside) J."""
    J = _check_bounds(n, J)
    if mode == "equal":
        return (p for p in all_perms(n) if ides(p) == J)
    if mode == "subset":
        return (p for p in all_perms(n) if ides(p) <= J)
    raise ValueError(f"mode must be 'equal' or 'subset', not {mode!r}")


def F_set(n: int, J: Iterable[int]) -> set[Perm]:
    """Permutations with descent set J and the maximal number n-|J| of fixed points."""
    J = _check_bounds(n, J)
    bound = n - len(J)
    return {p for p in perms_with_des(n, J) if fix_count(p) == bound}


def F_prime_set(n: int, J: Iterable[int]) -> set[Perm]:
    """Same as F_set with the zeroed descent set in place of the descent set."""
    J = _check_bounds(n, J)
    bound = n - len(J)
    return {p for p in perms_with_dez(n, J) if fix_count(p) == bound}


def G_set(J: Iterable[int]) -> set[Perm]:
    """Derangements of the ground set J, descending across consecutive entries.

    Members are value tuples over the increasingly sorted ground set;
    the map sends the i-th smallest element of J to the i-th value.  A
    tuple qualifies when no element maps to itself and the values
    decrease at every adjacent pair of J whose elements differ by 1.

    >>> sorted(G_set({1, 2, 3, 6}))
    [(6, 3, 1, 2), (6, 3, 2, 1)]
    >>> G_set({1})
    set()
    """
    ground = tuple(sorted(J))
    k = len(ground)
    out = set()
    for vals in permutations(ground):
        if any(v == g for v, g in zip(vals, ground)):
            continue
        if any(
            ground[i + 1] == ground[i] + 1 and vals[i] < vals[i + 1]
            for i in range(k - 1)
        ):
            continue
        out.add(vals)
    return out


def gen_poly(items: Iterable[Perm], stats, names=None) -> MPoly:
    """Counting polynomial of ``items`` in the given statistics.

    ``stats`` is one statistic or a sequence of them (names or
    callables); ``names`` gives the matching variable names and
    defaults to "s" for a single statistic.

    >>> print(gen_poly(perms_with_des(3, {2}), "exc"))
    s^2 + s
    """
    if callable(stats) or isinstance(stats, str):
        stats = (stats,)
    funs = [resolve_stat(s) for s in stats]
    if names is None:
        names = ("s",) if len(funs) == 1 else tuple(f"x{i}" for i in range(len(funs)))
    elif isinstance(names, str):
        names = (names,)
    if len(names) != len(funs):
        raise ValueError("one variable name per statistic required")
    counter: dict = {}
    for p in items:
        key = tuple(f(p) for f in funs)
        counter[key] = counter.get(key, 0) + 1
    return poly_from_counter(tuple(names), counter)


def stat_distribution(items: Iterable[Perm], stats: Sequence) -> dict:
    """Joint distribution {statistic-value tuple: count} over ``items``."""
    funs = [resolve_stat(s) for s in stats]
    counter: dict = {}
    for p in items:
        key = tuple(f(p) for f in funs)
        counter[key] = counter.get(key, 0) + 1
    return counter


def equidistribution_check(n: int, left: Sequence, right: Sequence) -> bool:
    """Whether two statistic tuples share their joint distribution on S_n.

    >>> equidistribution_check(5, ("fix", "exc", "DEZ"), ("fix", "exc", "DES"))
    True
    >>> equidistribution_check(3, ("fix",), ("exc",))
    False
    """
    if n > FILTER_BOUND:
        raise ValueError(f"equidistribution check limited to n<={FILTER_BOUND}")
    perms = list(all_perms(n))
    return stat_distribution(perms, left) == stat_distribution(perms, right)


def alternating_descents(n: int, reverse: bool = False) -> frozenset:
    """Descent set of alternating ({1,3,...}) or reverse ({2,4,...}) shape."""
    start = 2 if reverse else 1
    return frozenset(range(start, n, 2))


def alternating_counts(n: int) -> tuple[dict, dict]:
    """Fixed-point profiles {fix: count} of both alternating families in S_n.

    >>> alternating_counts(4)
    ({0: 2, 1: 2, 2: 1}, {0: 2, 1: 2, 2: 1})
    """
    profiles = []
    for reverse in (False, True):
        J = alternating_descents(n, reverse)
        prof: dict = {}
        for p in perms_with_des(n, J):
            f = fix_count(p)
            prof[f] = prof.get(f, 0) + 1
        profiles.append(dict(sorted(prof.items())))
    return profiles[0], profiles[1]


def prop7_map(p: Perm) -> Perm:
    """Halve an eligible permutation of [2n] to a derangement of [n].

    Eligible means exactly one of each pair {2i-1, 2i} is fixed, the
    odd one only together with a subcedance at the even one, the even
    one only together with an excedance at the odd one.  Dropping the
    fixed points and standardizing what remains gives the derangement.

    >>> prop7_map((3, 2, 6, 4, 5, 1, 10, 8, 9, 7))
    (2, 3, 1, 5, 4)
    """
    check_permutation(p)
    if len(p) % 2:
        raise ValueError("length must be even")
    n = len(p) // 2
    for i in range(1, n + 1):
        a, b = 2 * i - 1, 2 * i
        fix_a, fix_b = p[a - 1] == a, p[b - 1] == b
        if fix_a == fix_b:
            raise ValueError(f"exactly one of positions {a}, {b} must be fixed")
        if fix_a and p[b - 1] > b:
            raise ValueError(f"position {b} must be a subcedance")
        if fix_b and p[a - 1] < a:
            raise ValueError(f"position {a} must be an excedance")
    word = tuple(v for pos, v in enumerate(p, start=1) if v != pos)
    return standardize(word)


def prop7_inverse(t: Perm) -> Perm:
    """Rebuild the eligible permutation of [2n] from a derangement of [n].

    Index i occupies position 2i-1 when t(i)>i and position 2i when
    t(i)<i; the untouched partner position stays fixed.

    >>> prop7_inverse((2, 3, 1, 5, 4))
    (3, 2, 6, 4, 5, 1, 10, 8, 9, 7)
    """
    check_permutation(t)
    n = len(t)
    for i, v in enumerate(t, start=1):
        if v == i:
            raise ValueError(f"fixed point at position {i}: input must be a derangement")
    spot = [0] * (n + 1)
    for i in range(1, n + 1):
        spot[i] = 2 * i - 1 if t[i - 1] > i else 2 * i
    out = list(range(1, 2 * n + 1))
    for i in range(1, n + 1):
        out[spot[i] - 1] = spot[t[i - 1]]
    return tuple(out)


def max_fix_over_descent_class(n: int, J: Iterable[int]) -> int:
    """Largest number of fixed points among permutations with descent set J.

    >>> max_fix_over_descent_class(8, {1, 2, 3, 6})
    4
    """
    J = _check_bounds(n, J)
    if n > FILTER_BOUND:
        raise ValueError(f"descent-class maximum limited to n<={FILTER_BOUND}")
    jm = mask_of(J)
    best = -1
    for (dm, _zm, f, _e, _s), _c in scan_sn(n).items():
        if dm == jm and f > best:
            best = f
    if best < 0:
        raise ValueError(f"no permutation of [{n}] has descent set {sorted(J)}")
    return best
