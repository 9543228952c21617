"""Scan-kernel selection and caching.

The hot loops live twice: in the compiled extension _kernels (Cython)
and in the pure-Python fallback _kernels_py.  Both expose the same
chunked scan API and produce identical dicts; this module picks one at
import time (set DESFIX_PURE=1 to force the fallback) and adds caching
plus an optional thread-parallel merge.

Chunking is by the first letter of the permutation, and chunk results
are merged in first-letter order whatever the thread count, so scan
output is a pure function of its arguments.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

if os.environ.get("DESFIX_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
CLS_NONE, CLS_A0, CLS_B0, CLS_A1, CLS_B1 = range(5)
CLS_NAMES = {CLS_NONE: None, CLS_A0: "A0", CLS_B0: "B0", CLS_A1: "A1", CLS_B1: "B1"}

MAX_SCAN_N = 10


def mask_of(J) -> int:
    """Bitmask of a descent set: position i occupies bit i-1."""
    m = 0
    for i in J:
        m |= 1 << (i - 1)
    return m


def unmask(m: int) -> frozenset:
    """Inverse of mask_of."""
    out = []
    i = 1
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return frozenset(out)


def merge_counts(dicts) -> dict:
    """Sum count dicts; associative and commutative, so order-immaterial."""
    out: dict = {}
    for d in dicts:
        for key, c in d.items():
            out[key] = out.get(key, 0) + c
    return out


def _chunked(chunk_fn, n: int, jobs: int) -> dict:
    if n > MAX_SCAN_N:
        raise ValueError(f"scan size {n} exceeds the supported bound {MAX_SCAN_N}")
    if n == 0 or jobs <= 1:
        return chunk_fn(n, 0)
    firsts = range(1, n + 1)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(lambda f: chunk_fn(n, f), firsts))
    return merge_counts(parts)


@lru_cache(maxsize=None)
def _scan_sn_cached(n: int) -> dict:
    return _chunked(_impl.scan_sn_chunk, n, 1)


@lru_cache(maxsize=None)
def _scan_sn_hook_cached(n: int) -> dict:
    return _chunked(_impl.scan_sn_hook_chunk, n, 1)


def scan_sn(n: int, jobs: int = 1) -> dict:
    """{(des_mask, dez_mask, fix, exc, iexc): count} over S_n."""
    if jobs <= 1:
        return _scan_sn_cached(n)
    return _chunked(_impl.scan_sn_chunk, n, jobs)


def scan_sn_hook(n: int, jobs: int = 1) -> dict:
    """{(ides_mask, fix, iexc, lec, pix, cls): count} over S_n."""
    if jobs <= 1:
        return _scan_sn_hook_cached(n)
    return _chunked(_impl.scan_sn_hook_chunk, n, jobs)


@lru_cache(maxsize=None)
def scan_rm(m: tuple[int, ...]) -> dict:
    """{(ides_mask, lec, pix, cls): count} over the rearrangement class of m."""
    if sum(m) > MAX_SCAN_N:
        raise ValueError(f"rearrangement total {sum(m)} exceeds {MAX_SCAN_N}")
    return _impl.scan_rm(tuple(m))
