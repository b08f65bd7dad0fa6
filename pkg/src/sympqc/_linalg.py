"""Dense linear algebra over F_p on small uint8 matrices.

Everything here runs at desk scale (a few hundred rows/columns), so a
straightforward vectorised Gaussian elimination is plenty.  Pivoting is
deterministic leftmost-first, which keeps reduced forms and recorded
permutations reproducible.
"""

from __future__ import annotations

import numpy as np


def _inv_mod(a: int, p: int) -> int:
    return pow(int(a), p - 2, p)


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form.

    Returns (rows, pivots) where rows holds only the nonzero rows, one per
    pivot, and pivots lists their leftmost-nonzero column indices ascending.
    """
    m = np.array(mat, dtype=np.int64) % p
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        hits = np.nonzero(m[r:, c])[0]
        if hits.size == 0:
            continue
        i = r + int(hits[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        if m[r, c] != 1:
            m[r] = (m[r] * _inv_mod(m[r, c], p)) % p
        col = m[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            m[mask] = (m[mask] - np.outer(col[mask], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r].astype(np.uint8), pivots


def rank(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    return len(rref(mat, p)[1])


def reduce_against(rows: np.ndarray, pivots: list[int], vec: np.ndarray, p: int) -> np.ndarray:
    """Reduce vec by an RREF basis; the result is zero iff vec is in the span."""
    v = np.array(vec, dtype=np.int64) % p
    for row, c in zip(rows, pivots):
        if v[c]:
            v = (v - int(v[c]) * row.astype(np.int64)) % p
    return v.astype(np.uint8)


def in_span(rows: np.ndarray, pivots: list[int], vec: np.ndarray, p: int) -> bool:
    return not reduce_against(rows, pivots, vec, p).any()


def extend_basis(rows: np.ndarray, pivots: list[int], candidates: np.ndarray, p: int) -> np.ndarray:
    """Candidate rows that are independent of the basis and of each other.

    Returns the selected candidates in input order (original, unreduced form).
    """
    cur = np.array(rows, dtype=np.uint8)
    piv = list(pivots)
    chosen = []
    for cand in candidates:
        red = reduce_against(cur, piv, cand, p)
        nz = np.nonzero(red)[0]
        if nz.size == 0:
            continue
        c = int(nz[0])
        if red[c] != 1:
            red = (red.astype(np.int64) * _inv_mod(red[c], p) % p).astype(np.uint8)
        # keep the internal basis reduced so later checks stay cheap
        idx = 0
        while idx < len(piv) and piv[idx] < c:
            idx += 1
        cur = np.insert(cur, idx, red, axis=0)
        piv.insert(idx, c)
        chosen.append(cand)
    return np.array(chosen, dtype=np.uint8).reshape(len(chosen), rows.shape[1] if rows.size else candidates.shape[1])


def systematic_form(mat: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """RREF followed by the column permutation that fronts the pivot columns.

    Returns (sys, perm) with sys = [I | A] of shape (rank, ncols) and perm the
    applied column order (sys[:, j] = rref[:, perm[j]]).  Column permutations
    preserve codeword weights, so distance searches may use sys directly.
    """
    rows, pivots = rref(mat, p)
    ncols = mat.shape[1]
    rest = [c for c in range(ncols) if c not in set(pivots)]
    perm = np.array(list(pivots) + rest, dtype=np.int64)
    return rows[:, perm], perm


def symplectic_gram(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Pairwise symplectic products of the rows of a against the rows of b.

    Both matrices must have an even number 2N of columns; entry (i, j) is
    sum_k a[i,k] b[j,N+k] - a[i,N+k] b[j,k] mod p.
    """
    if a.shape[1] != b.shape[1] or a.shape[1] % 2:
        raise ValueError("row length mismatch or odd length")
    half = a.shape[1] // 2
    al, ar = a[:, :half].astype(np.int64), a[:, half:].astype(np.int64)
    bl, br = b[:, :half].astype(np.int64), b[:, half:].astype(np.int64)
    return (al @ br.T - ar @ bl.T) % p
