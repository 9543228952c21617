# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled scan kernels.

Twin of _kernels_py: same functions, same key layouts, same counts.
Permutations still come from itertools; the per-element statistic
loops run on C ints.  Array bounds are fixed at 16, well above the
supported scan sizes.
"""

from itertools import permutations

BACKEND = "cython"

cdef enum:
    _NONE = 0
    _A0 = 1
    _B0 = 2
    _A1 = 3
    _B1 = 4

CLS_NONE = _NONE
CLS_A0 = _A0
CLS_B0 = _B0
CLS_A1 = _A1
CLS_B1 = _B1


cdef int _lec_pix_buf(int* w, int n, int* pix_out):
    cdef int total = 0, end = n, i, j, head
    while end:
        i = end - 1
        while i and w[i - 1] <= w[i]:
            i -= 1
        if i == 0:
            pix_out[0] = end
            return total
        head = w[i - 1]
        for j in range(i, end):
            if w[j] < head:
                total += 1
        end = i - 1
    pix_out[0] = 0
    return total


cdef bint _is_desarr_buf(int* w, int n):
    cdef int run = 1
    if n == 0:
        return False
    while run < n and w[run - 1] > w[run]:
        run += 1
    return run % 2 == 0


cdef int _classify_buf(int* w, int n, bint desarr, int lec_w):
    cdef int rot[16]
    cdef int i, drop, pix_tmp
    if n == 0:
        return _NONE
    if desarr:
        rot[0] = w[n - 1]
        for i in range(n - 1):
            rot[i + 1] = w[i]
        drop = lec_w - _lec_pix_buf(rot, n, &pix_tmp)
        return _A0 if drop == 0 else (_B0 if drop == 1 else _NONE)
    for i in range(n - 1):
        rot[i] = w[i + 1]
    rot[n - 1] = w[0]
    if _is_desarr_buf(rot, n):
        drop = _lec_pix_buf(rot, n, &pix_tmp) - lec_w
        return _A1 if drop == 0 else (_B1 if drop == 1 else _NONE)
    return _NONE


def _sn_chunk(int n, int first):
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


def scan_sn_chunk(int n, int first):
    """Tally (des_mask, dez_mask, fix, exc, iexc) over one chunk of S_n."""
    cdef int i, v, pos, fix, exc, sub, prev_masked, masked
    cdef long des, dez
    if n >= 16:
        raise ValueError("scan size too large for the compiled kernel")
    counts = {}
    for p in _sn_chunk(n, first):
        fix = exc = sub = 0
        des = dez = 0
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
        if key in counts:
            counts[key] += 1
        else:
            counts[key] = 1
    return counts


def scan_sn_hook_chunk(int n, int first):
    """Tally (ides_mask, fix, iexc, lec, pix, cls) over one chunk of S_n."""
    cdef int wbuf[16]
    cdef int pos_of[17]
    cdef int i, v, fix, sub, lec_w, pix_w, cls
    cdef long im
    if n >= 16:
        raise ValueError("scan size too large for the compiled kernel")
    counts = {}
    for p in _sn_chunk(n, first):
        fix = sub = 0
        for i in range(n):
            v = p[i]
            wbuf[i] = v
            pos_of[v] = i
            if v == i + 1:
                fix += 1
            elif v < i + 1:
                sub += 1
        im = 0
        for v in range(1, n):
            if pos_of[v] > pos_of[v + 1]:
                im |= 1 << (v - 1)
        lec_w = _lec_pix_buf(wbuf, n, &pix_w)
        cls = _classify_buf(wbuf, n, _is_desarr_buf(wbuf, n), lec_w)
        key = (im, fix, sub, lec_w, pix_w, cls)
        if key in counts:
            counts[key] += 1
        else:
            counts[key] = 1
    return counts


def scan_rm(m):
    """Tally (ides_mask, lec, pix, cls) over all rearrangements of m."""
    cdef int wbuf[16]
    cdef int last[17]
    cdef int i, v, n, r, lec_w, pix_w, cls
    cdef long im
    r = len(m)
    pool = []
    for letter, part in enumerate(m, start=1):
        pool.extend([letter] * part)
    n = len(pool)
    if n >= 16 or r >= 16:
        raise ValueError("rearrangement class too large for the compiled kernel")
    counts = {}
    seen = set()
    for p in permutations(pool):
        if p in seen:
            continue
        seen.add(p)
        for i in range(n):
            v = p[i]
            wbuf[i] = v
            last[v] = i
        im = 0
        for v in range(1, r):
            if last[v] > last[v + 1]:
                im |= 1 << (v - 1)
        lec_w = _lec_pix_buf(wbuf, n, &pix_w)
        cls = _classify_buf(wbuf, n, _is_desarr_buf(wbuf, n), lec_w)
        key = (im, lec_w, pix_w, cls)
        if key in counts:
            counts[key] += 1
        else:
            counts[key] = 1
    return counts
