"""Pure-numpy fallbacks for the enumeration kernels.

Same signatures and semantics as the JIT kernels.  Binary enumeration uses
chunked Gray-code XOR scans (np.bitwise_xor.accumulate); general prime
fields build codeword tables in memory-bounded blocks.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

SENTINEL = 1 << 30

_CHUNK = 1 << 20


def _gray_blocks(k: int):
    total = 1 << k
    for start in range(1, total, _CHUNK):
        end = min(start + _CHUNK, total)
        idx = np.arange(start, end, dtype=np.int64)
        # toggled row per Gray step: trailing-zero count of the step index
        tz = np.log2(idx & -idx).astype(np.int64)
        yield idx, tz


def min_hamming_gf2(rows: np.ndarray) -> tuple[int, int]:
    k, _w = rows.shape
    carry = np.zeros(_w, np.uint64)
    best = SENTINEL
    for _idx, tz in _gray_blocks(k):
        blk = rows[tz]
        blk[0] ^= carry
        np.bitwise_xor.accumulate(blk, axis=0, out=blk)
        wts = np.bitwise_count(blk).sum(axis=1)
        m = int(wts.min())
        if m < best:
            best = m
        carry = blk[-1].copy()
    return best, (1 << k) - 1


def min_symplectic_gf2(lo: np.ndarray, hi: np.ndarray) -> tuple[int, int]:
    k, _w = lo.shape
    cl = np.zeros(_w, np.uint64)
    ch = np.zeros(_w, np.uint64)
    best = SENTINEL
    for _idx, tz in _gray_blocks(k):
        bl = lo[tz]
        bh = hi[tz]
        bl[0] ^= cl
        bh[0] ^= ch
        np.bitwise_xor.accumulate(bl, axis=0, out=bl)
        np.bitwise_xor.accumulate(bh, axis=0, out=bh)
        wts = np.bitwise_count(bl | bh).sum(axis=1)
        m = int(wts.min())
        if m < best:
            best = m
        cl = bl[-1].copy()
        ch = bh[-1].copy()
    return best, (1 << k) - 1


def min_symplectic_split_gf2(lo: np.ndarray, hi: np.ndarray, r0: int) -> tuple[int, int, int]:
    k, _w = lo.shape
    cl = np.zeros(_w, np.uint64)
    ch = np.zeros(_w, np.uint64)
    best_out = SENTINEL
    best_in = SENTINEL
    for idx, tz in _gray_blocks(k):
        bl = lo[tz]
        bh = hi[tz]
        bl[0] ^= cl
        bh[0] ^= ch
        np.bitwise_xor.accumulate(bl, axis=0, out=bl)
        np.bitwise_xor.accumulate(bh, axis=0, out=bh)
        wts = np.bitwise_count(bl | bh).sum(axis=1)
        gray = idx ^ (idx >> 1)
        outside = (gray >> r0) != 0
        if outside.any():
            m = int(wts[outside].min())
            if m < best_out:
                best_out = m
        if (~outside).any():
            m = int(wts[~outside].min())
            if m < best_in:
                best_in = m
        cl = bl[-1].copy()
        ch = bh[-1].copy()
    return best_out, best_in, (1 << k) - 1


def iset_min_gf2(rows: np.ndarray, wmax: int, budget: int) -> tuple[int, int, int]:
    k, _w = rows.shape
    best = SENTINEL
    enumerated = 0
    finished = 0
    for w in range(1, wmax + 1):
        level = math.comb(k, w)
        if enumerated + level > budget:
            break
        if w == 1:
            m = int(np.bitwise_count(rows).sum(axis=1).min())
            if m < best:
                best = m
        else:
            for prefix in itertools.combinations(range(k), w - 1):
                first_last = prefix[-1] + 1
                if first_last >= k:
                    continue
                acc = rows[prefix[0]].copy()
                for j in prefix[1:]:
                    acc ^= rows[j]
                blk = acc[None, :] ^ rows[first_last:]
                m = int(np.bitwise_count(blk).sum(axis=1).min())
                if m < best:
                    best = m
        enumerated += level
        finished = w
        if w + 1 >= best:
            break
    return best, finished, enumerated


def _table_blocks(rows: np.ndarray, p: int):
    """Yield blocks of all F_p combinations of the rows (message index ascending)."""
    k, length = rows.shape
    k_low = k
    while p ** k_low > (1 << 16) and k_low > 1:
        k_low -= 1
    low = np.zeros((1, length), np.int64)
    for j in range(k_low):
        low = np.concatenate([(low + c * rows[j].astype(np.int64)) % p for c in range(p)])
    if k_low == k:
        yield low
        return
    high = np.zeros((1, length), np.int64)
    for j in range(k_low, k):
        high = np.concatenate([(high + c * rows[j].astype(np.int64)) % p for c in range(p)])
    for h in high:
        yield (low + h) % p


def min_hamming_gfp(rows: np.ndarray, p: int) -> tuple[int, int]:
    k = rows.shape[0]
    best = SENTINEL
    first = True
    for blk in _table_blocks(rows, p):
        wts = (blk != 0).sum(axis=1)
        if first:
            wts[0] = SENTINEL  # the all-zero message
            first = False
        m = int(wts.min())
        if m < best:
            best = m
    return best, p**k - 1


def min_symplectic_gfp(rows: np.ndarray, p: int, half: int) -> tuple[int, int]:
    k = rows.shape[0]
    best = SENTINEL
    first = True
    for blk in _table_blocks(rows, p):
        wts = ((blk[:, :half] != 0) | (blk[:, half:] != 0)).sum(axis=1)
        if first:
            wts[0] = SENTINEL
            first = False
        m = int(wts.min())
        if m < best:
            best = m
    return best, p**k - 1


def iset_min_gfp(rows: np.ndarray, p: int, wmax: int, budget: int) -> tuple[int, int, int]:
    k, _length = rows.shape
    best = SENTINEL
    enumerated = 0
    finished = 0
    pm1 = p - 1
    for w in range(1, wmax + 1):
        level = math.comb(k, w) * pm1 ** (w - 1)
        if enumerated + level > budget:
            break
        for support in itertools.combinations(range(k), w):
            sub = rows[list(support)].astype(np.int64)
            for coef in itertools.product(range(1, p), repeat=w - 1):
                vec = (sub[0] + np.tensordot(np.array(coef, np.int64), sub[1:], axes=1)) % p
                m = int((vec != 0).sum())
                if m < best:
                    best = m
        enumerated += level
        finished = w
        if w + 1 >= best:
            break
    return best, finished, enumerated
