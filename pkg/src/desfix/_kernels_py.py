"""Pure-Python scan kernels.

Same API as the compiled extension _kernels; see kernels.py for the
selection logic.  Each scan walks a family of permutations or words
once and tallies a tuple of statistics into a dict, so every verifier
downstream is a cheap aggregation over a scan result.

Class tags: 0 none, 1 A0, 2 B0, 3 A1, 4 B1.
"""

from __future__ import annotations

from itertools import permutations

BACKEND = "python"

CLS_NONE, CLS_A0, CLS_B0, CLS_A1, CLS_B1 = range(5)


def _lec_pix(w: tuple[int, ...]) -> tuple[int, int]:
    """(lec, pix) in one pass, without materializing the factorization."""
    total = 0
    end = len(w)
    while end:
        i = end - 1
        while i and w[i - 1] <= w[i]:
            i -= 1
        if i == 0:
            return total, end
        head = w[i - 1]
        for j in range(i, end):
            if w[j] < head:
                total += 1
        end = i - 1
    return total, 0


def _is_desarrangement(w: tuple[int, ...]) -> bool:
    if not w:
        return False
    run = 1
    while run < len(w) and w[run - 1] > w[run]:
        run += 1
    return run % 2 == 0


def _classify(w: tuple[int, ...], desarr: bool, lec_w: int) -> int:
    if desarr:
        drop = lec_w - _lec_pix(w[-1:] + w[:-1])[0]
        return CLS_A0 if drop == 0 else (CLS_B0 if drop == 1 else CLS_NONE)
    v = w[1:] + w[:1]
    if _is_desarrangement(v):
        drop = _lec_pix(v)[0] - lec_w
        return CLS_A1 if drop == 0 else (CLS_B1 if drop == 1 else CLS_NONE)
    return CLS_NONE


def _sn_chunk(n: int, first: int):
    """Permutations of {1..n} starting with ``first`` (all of S_n if 0)."""
    if n == 0:
        yield ()
        return
    if first == 0:
        yield from permutations(range(1, n + 1))
        return
    others = [v for v in range(1, n + 1) if v != first]
    head = (first,)
    for rest in permutations(others):
        yield head + rest


def scan_sn_chunk(n: int, first: int) -> dict:
    """Tally (des_mask, dez_mask, fix, exc, iexc) over one chunk of S_n."""
    counts: dict = {}
    for p in _sn_chunk(n, first):
        des = dez = fix = exc = sub = 0
        prev_masked = -1
        for i in range(n):
            v = p[i]
            pos = i + 1
            if v == pos:
                fix += 1
                masked = 0
            else:
                masked = v
                if v > pos:
                    exc += 1
                else:
                    sub += 1
            if i:
                if p[i - 1] > v:
                    des |= 1 << i
                if prev_masked > masked:
                    dez |= 1 << i
            prev_masked = masked
        key = (des >> 1, dez >> 1, fix, exc, sub)
        counts[key] = counts.get(key, 0) + 1
    return counts


def scan_sn_hook_chunk(n: int, first: int) -> dict:
    """Tally (ides_mask, fix, iexc, lec, pix, cls) over one chunk of S_n."""
    counts: dict = {}
    for p in _sn_chunk(n, first):
        fix = sub = 0
        pos_of = [0] * (n + 1)
        for i in range(n):
            v = p[i]
            pos_of[v] = i
            if v == i + 1:
                fix += 1
            elif v < i + 1:
                sub += 1
        im = 0
        for v in range(1, n):
            if pos_of[v] > pos_of[v + 1]:
                im |= 1 << (v - 1)
        lec_w, pix_w = _lec_pix(p)
        cls = _classify(p, _is_desarrangement(p), lec_w)
        key = (im, fix, sub, lec_w, pix_w, cls)
        counts[key] = counts.get(key, 0) + 1
    return counts


def scan_rm(m: tuple[int, ...]) -> dict:
    """Tally (ides_mask, lec, pix, cls) over all rearrangements of m."""
    r = len(m)
    pool: list[int] = []
    for letter, part in enumerate(m, start=1):
        pool.extend([letter] * part)
    n = len(pool)
    counts: dict = {}
    seen: set = set()
    for p in permutations(pool):
        if p in seen:
            continue
        seen.add(p)
        last = [0] * (r + 1)
        for i in range(n):
            last[p[i]] = i
        im = 0
        for v in range(1, r):
            if last[v] > last[v + 1]:
                im |= 1 << (v - 1)
        lec_w, pix_w = _lec_pix(p)
        cls = _classify(p, _is_desarrangement(p), lec_w)
        key = (im, lec_w, pix_w, cls)
        counts[key] = counts.get(key, 0) + 1
    return counts
