"""Backend dispatch for the enumeration kernels.

The environment flag ``QCS_BACKEND`` selects the implementation:

* ``numba`` (default when importable) -- JIT-compiled kernels
* ``numpy`` -- pure-numpy fallbacks, bit-identical results

Callers use the field-generic wrappers at the bottom; packed binary
representations are an implementation detail of this layer.
"""

from __future__ import annotations

import math
import os

import numpy as np

SENTINEL = 1 << 30


def _load_backend(name: str):
    if name == "numpy":
        from . import _kernels_numpy as impl
        return impl
    if name == "numba":
        from . import _kernels_numba as impl
        return impl
    raise ValueError(f"unknown kernel backend {name!r} (expected 'numba' or 'numpy')")


def _resolve():
    requested = os.environ.get("QCS_BACKEND", "").strip().lower()
    if requested == "numpy":
        return _load_backend("numpy"), "numpy"
    if requested == "numba":
        return _load_backend("numba"), "numba"
    if requested:
        raise ValueError(f"QCS_BACKEND={requested!r} not recognised (use 'numba' or 'numpy')")
    try:
        return _load_backend("numba"), "numba"
    except ImportError:
        return _load_backend("numpy"), "numpy"


_impl, BACKEND = _resolve()


def available_backends() -> tuple[str, ...]:
    names = []
    for name in ("numba", "numpy"):
        try:
            _load_backend(name)
        except ImportError:
            continue
        names.append(name)
    return tuple(names)


def get_backend(name: str):
    """Load a specific backend module (used by the benchmark harness)."""
    return _load_backend(name)


def pack_gf2(mat: np.ndarray) -> np.ndarray:
    """Pack binary rows into little-endian uint64 words."""
    mat = np.asarray(mat, dtype=np.uint8) % 2
    k, n = mat.shape
    words = max(1, (n + 63) // 64)
    out = np.zeros((k, words), np.uint64)
    for j in range(n):
        col = mat[:, j].astype(np.uint64)
        out[:, j >> 6] |= col << np.uint64(j & 63)
    return out


def _finish(best: int) -> float | int:
    return math.inf if best >= SENTINEL else int(best)


def min_hamming(rows: np.ndarray, p: int) -> tuple[float | int, int]:
    """Exact minimum Hamming weight of the row space (rows must be a basis)."""
    rows = np.asarray(rows, dtype=np.uint8)
    if rows.shape[0] == 0:
        return math.inf, 0
    if p == 2:
        best, steps = _impl.min_hamming_gf2(pack_gf2(rows))
    else:
        best, steps = _impl.min_hamming_gfp(rows, p)
    return _finish(best), steps


def min_symplectic(rows: np.ndarray, p: int) -> tuple[float | int, int]:
    """Exact minimum symplectic weight of the row space (rows must be a basis)."""
    rows = np.asarray(rows, dtype=np.uint8)
    if rows.shape[0] == 0:
        return math.inf, 0
    half = rows.shape[1] // 2
    if p == 2:
        lo = pack_gf2(rows[:, :half])
        hi = pack_gf2(rows[:, half:])
        best, steps = _impl.min_symplectic_gf2(lo, hi)
    else:
        best, steps = _impl.min_symplectic_gfp(rows, p, half)
    return _finish(best), steps


def min_symplectic_split(rows: np.ndarray, r0: int) -> tuple[float | int, float | int, int]:
    """Binary-only: minimum symplectic weights outside/inside a leading subspace.

    Rows [0, r0) span the subspace; "outside" covers exactly the words of the
    full row space not in that subspace.
    """
    rows = np.asarray(rows, dtype=np.uint8)
    if rows.shape[0] == 0:
        return math.inf, math.inf, 0
    half = rows.shape[1] // 2
    lo = pack_gf2(rows[:, :half])
    hi = pack_gf2(rows[:, half:])
    out, inside, steps = _impl.min_symplectic_split_gf2(lo, hi, r0)
    return _finish(out), _finish(inside), steps


def iset_min(rows: np.ndarray, p: int, wmax: int, budget: int) -> tuple[int, int, int]:
    """Information-set level search: (best, finished_level, messages_examined)."""
    rows = np.asarray(rows, dtype=np.uint8)
    wmax = min(wmax, rows.shape[0])
    if p == 2:
        return _impl.iset_min_gf2(pack_gf2(rows), wmax, budget)
    return _impl.iset_min_gfp(rows, p, wmax, budget)
