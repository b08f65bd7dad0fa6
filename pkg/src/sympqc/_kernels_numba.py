"""JIT-compiled enumeration kernels.

Binary codewords live in packed uint64 words; general prime fields use
uint8 vectors walked with a loopless reflected p-ary Gray code so each
step updates the running codeword by a single row.  These loops dominate
the runtime of every distance computation, hence the compilation.
"""

from __future__ import annotations

import numpy as np
from numba import njit

SENTINEL = 1 << 30

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)
_BIG = np.uint64(SENTINEL)


@njit(cache=True, inline="always")
def _pc64(x):
    x = x - ((x >> _S1) & _M1)
    x = (x & _M2) + ((x >> _S2) & _M2)
    x = (x + (x >> _S4)) & _M4
    return (x * _H01) >> _S56


@njit(cache=True)
def min_hamming_gf2(rows):
    k, W = rows.shape
    cur = np.zeros(W, np.uint64)
    best = _BIG
    total = 1 << k
    for i in range(1, total):
        x = i
        j = 0
        while x & 1 == 0:
            x >>= 1
            j += 1
        wt = np.uint64(0)
        for t in range(W):
            cur[t] ^= rows[j, t]
            wt += _pc64(cur[t])
        if wt < best:
            best = wt
    return int(best), total - 1


@njit(cache=True)
def min_symplectic_gf2(lo, hi):
    k, W = lo.shape
    cl = np.zeros(W, np.uint64)
    ch = np.zeros(W, np.uint64)
    best = _BIG
    total = 1 << k
    for i in range(1, total):
        x = i
        j = 0
        while x & 1 == 0:
            x >>= 1
            j += 1
        wt = np.uint64(0)
        for t in range(W):
            cl[t] ^= lo[j, t]
            ch[t] ^= hi[j, t]
            wt += _pc64(cl[t] | ch[t])
        if wt < best:
            best = wt
    return int(best), total - 1


@njit(cache=True)
def min_symplectic_split_gf2(lo, hi, r0):
    """Minimum symplectic weights over a split row space.

    Rows [0, r0) span a subspace; returns (best over messages touching a row
    >= r0, best over nonzero messages confined to rows < r0, steps).
    """
    k, W = lo.shape
    cl = np.zeros(W, np.uint64)
    ch = np.zeros(W, np.uint64)
    best_out = _BIG
    best_in = _BIG
    total = 1 << k
    for i in range(1, total):
        x = i
        j = 0
        while x & 1 == 0:
            x >>= 1
            j += 1
        wt = np.uint64(0)
        for t in range(W):
            cl[t] ^= lo[j, t]
            ch[t] ^= hi[j, t]
            wt += _pc64(cl[t] | ch[t])
        if ((i ^ (i >> 1)) >> r0) != 0:
            if wt < best_out:
                best_out = wt
        else:
            if wt < best_in:
                best_in = wt
    return int(best_out), int(best_in), total - 1


@njit(cache=True, inline="always")
def _comb_clamped(k, w, cap):
    # C(k, w) clamped to cap + 1; float64 is exact far beyond any usable cap
    r = 1.0
    for i in range(w):
        r = r * (k - i) / (i + 1)
        if r > cap:
            return cap + 1
    return np.int64(r + 0.5)


@njit(cache=True)
def iset_min_gf2(rows, wmax, budget):
    """Minimum weight over messages of ascending Hamming weight.

    Enumerates all weight-w information vectors level by level, XOR-folding a
    prefix accumulator.  Stops once a level would exceed the message budget,
    when finishing level w proves the best codeword minimal (w + 1 >= best),
    or after wmax.  Returns (best, finished_level, messages_examined).
    """
    k, W = rows.shape
    best = _BIG
    enumerated = 0
    finished = 0
    c = np.empty(k + 1, np.int64)
    acc = np.zeros((k + 2, W), np.uint64)
    for w in range(1, wmax + 1):
        level = _comb_clamped(k, w, budget)
        if enumerated + level > budget:
            break
        for d in range(w):
            c[d] = d
            for t in range(W):
                acc[d + 1, t] = acc[d, t] ^ rows[d, t]
        while True:
            wt = np.uint64(0)
            for t in range(W):
                wt += _pc64(acc[w, t])
            if wt < best:
                best = wt
            d = w - 1
            while d >= 0 and c[d] == k - w + d:
                d -= 1
            if d < 0:
                break
            c[d] += 1
            for e in range(d, w):
                if e > d:
                    c[e] = c[e - 1] + 1
                for t in range(W):
                    acc[e + 1, t] = acc[e, t] ^ rows[c[e], t]
        enumerated += level
        finished = w
        if np.uint64(w + 1) >= best:
            break
    return int(best), finished, enumerated


@njit(cache=True)
def min_hamming_gfp(rows, p):
    # loopless reflected p-ary Gray walk: one +/- row update per message
    k, L = rows.shape
    a = np.zeros(k, np.int64)
    f = np.arange(k + 1)
    o = np.ones(k, np.int64)
    cur = np.zeros(L, np.int64)
    best = SENTINEL
    steps = 0
    while True:
        j = f[0]
        f[0] = 0
        if j == k:
            break
        if o[j] == 1:
            for t in range(L):
                v = cur[t] + rows[j, t]
                cur[t] = v - p if v >= p else v
        else:
            for t in range(L):
                v = cur[t] - rows[j, t]
                cur[t] = v + p if v < 0 else v
        a[j] += o[j]
        if a[j] == 0 or a[j] == p - 1:
            o[j] = -o[j]
            f[j] = f[j + 1]
            f[j + 1] = j + 1
        steps += 1
        wt = 0
        for t in range(L):
            if cur[t] != 0:
                wt += 1
        if wt < best:
            best = wt
    return best, steps


@njit(cache=True)
def min_symplectic_gfp(rows, p, half):
    k, L = rows.shape
    a = np.zeros(k, np.int64)
    f = np.arange(k + 1)
    o = np.ones(k, np.int64)
    cur = np.zeros(L, np.int64)
    best = SENTINEL
    steps = 0
    while True:
        j = f[0]
        f[0] = 0
        if j == k:
            break
        if o[j] == 1:
            for t in range(L):
                v = cur[t] + rows[j, t]
                cur[t] = v - p if v >= p else v
        else:
            for t in range(L):
                v = cur[t] - rows[j, t]
                cur[t] = v + p if v < 0 else v
        a[j] += o[j]
        if a[j] == 0 or a[j] == p - 1:
            o[j] = -o[j]
            f[j] = f[j + 1]
            f[j + 1] = j + 1
        steps += 1
        wt = 0
        for t in range(half):
            if cur[t] != 0 or cur[half + t] != 0:
                wt += 1
        if wt < best:
            best = wt
    return best, steps


@njit(cache=True, inline="always")
def _comb_level_gfp(k, w, pm1, cap):
    r = 1.0
    for i in range(w):
        r = r * (k - i) / (i + 1)
        if r > cap:
            return cap + 1
    for _ in range(w - 1):
        r = r * pm1
        if r > cap:
            return cap + 1
    return np.int64(r + 0.5)


@njit(cache=True)
def iset_min_gfp(rows, p, wmax, budget):
    """Level enumeration over F_p; leading coefficient fixed to 1 per support."""
    k, L = rows.shape
    best = SENTINEL
    enumerated = 0
    finished = 0
    c = np.empty(k + 1, np.int64)
    coef = np.empty(k + 1, np.int64)
    vec = np.empty(L, np.int64)
    for w in range(1, wmax + 1):
        level = _comb_level_gfp(k, w, p - 1, budget)
        if enumerated + level > budget:
            break
        for d in range(w):
            c[d] = d
        while True:
            for d in range(w):
                coef[d] = 1
            while True:
                for t in range(L):
                    vec[t] = 0
                for d in range(w):
                    cd = coef[d]
                    rj = c[d]
                    for t in range(L):
                        vec[t] += cd * rows[rj, t]
                wt = 0
                for t in range(L):
                    if vec[t] % p != 0:
                        wt += 1
                if wt < best:
                    best = wt
                # odometer over coef[1..w-1] in 1..p-1 (coef[0] pinned to 1)
                d = w - 1
                while d >= 1 and coef[d] == p - 1:
                    coef[d] = 1
                    d -= 1
                if d < 1:
                    break
                coef[d] += 1
            d = w - 1
            while d >= 0 and c[d] == k - w + d:
                d -= 1
            if d < 0:
                break
            c[d] += 1
            for e in range(d + 1, w):
                c[e] = c[e - 1] + 1
        enumerated += level
        finished = w
        if w + 1 >= best:
            break
    return best, finished, enumerated
