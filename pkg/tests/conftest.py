"""Shared fixtures: worked-example codes, divisor enumeration, oracles.

sympy is used only as an independent oracle (factoring x^n - 1 to enumerate
divisors, cross-checking gcd/division); the package itself never needs it.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np
import pytest
import sympy
from sympy.abc import x as X

from sympqc.gfpoly import GF2, PlainPoly, PrimeField, RingElement


def poly(field, support):
    """Polynomial with coefficient 1 at the given exponents."""
    top = max(support) if support else 0
    return PlainPoly.from_coeffs(field, [1 if i in support else 0 for i in range(top + 1)])


def ring(field, n, support):
    return RingElement.from_coeffs(field, n, [1 if i in support else 0 for i in range(n)])


@lru_cache(maxsize=None)
def divisors_of_xn1(p: int, n: int) -> tuple[PlainPoly, ...]:
    """All monic divisors of x^n - 1 over F_p (sympy factorization oracle)."""
    factors = sympy.Poly(X**n - 1, X, modulus=p).factor_list()[1]
    out = []
    for exps in itertools.product(*[range(m + 1) for _, m in factors]):
        prod = sympy.Poly(1, X, modulus=p)
        for (f, _), e in zip(factors, exps):
            prod = prod * f**e
        coeffs = [int(c) % p for c in reversed(prod.all_coeffs())]
        out.append(PlainPoly.from_coeffs(PrimeField(p), coeffs))
    return tuple(out)


def brute_symplectic_distance(rows: np.ndarray, p: int) -> float:
    """Minimum symplectic weight over nonzero words of the row space
    (message-space enumeration oracle, independent of the kernels)."""
    rows = np.asarray(rows, dtype=np.int64)
    k, length = rows.shape
    half = length // 2
    best = float("inf")
    for msg in itertools.product(range(p), repeat=k):
        word = np.zeros(length, np.int64)
        for c, row in zip(msg, rows):
            if c:
                word += c * row
        word %= p
        if not word.any():
            continue
        w = int(((word[:half] != 0) | (word[half:] != 0)).sum())
        best = min(best, w)
    return best


def brute_hamming_distance(rows: np.ndarray, p: int) -> float:
    rows = np.asarray(rows, dtype=np.int64)
    best = float("inf")
    for msg in itertools.product(range(p), repeat=rows.shape[0]):
        word = np.zeros(rows.shape[1], np.int64)
        for c, row in zip(msg, rows):
            if c:
                word += c * row
        word %= p
        if word.any():
            best = min(best, int((word != 0).sum()))
    return best


# ---- the four worked record constructions used throughout the tests ----

EX1 = dict(
    n=40,
    g={5, 4, 1, 0},
    f0={34, 33, 32, 30, 29, 28, 26, 24, 23, 22, 19, 16, 15, 14, 12, 10, 9, 8, 6, 5, 4},
    f1={37, 35, 34, 30, 29, 23, 20, 18, 15, 9, 8, 4, 3, 1},
)
EX2 = dict(
    n=21,
    g={6, 5, 4, 2, 0},
    f0={11, 6, 5, 2, 1, 0},
    f1={12, 7, 6, 5, 2, 1, 0},
)
EX3 = dict(
    n=31,
    g={5, 2, 0},
    f0={25, 24, 23, 22, 21, 20, 19, 16, 13, 11, 9, 8, 7, 6, 0},
    f1={21, 20, 15, 13, 8, 5, 4, 3},
)
EX4 = dict(
    n=15,
    g={4, 1, 0},
    f0={13, 12, 11, 8, 7, 4, 3, 2, 0},
    f1={13, 9, 8, 7, 6, 2, 0},
)


def example_code(spec: dict):
    from sympqc.qcsym import QcOneGen

    n = spec["n"]
    return QcOneGen.build(
        GF2, n, poly(GF2, spec["g"]), [ring(GF2, n, spec["f0"]), ring(GF2, n, spec["f1"])]
    )


@pytest.fixture(scope="session")
def ex1_code():
    return example_code(EX1)


@pytest.fixture(scope="session")
def ex2_code():
    return example_code(EX2)


@pytest.fixture(scope="session")
def ex3_code():
    return example_code(EX3)


@pytest.fixture(scope="session")
def ex4_code():
    return example_code(EX4)


@pytest.fixture(scope="session")
def catalog():
    from sympqc.shell import load_catalog

    return load_catalog()


@pytest.fixture(scope="session")
def warm_kernels():
    """Trigger JIT compilation outside any timed region."""
    from sympqc import kernels

    rows = np.eye(3, 4, dtype=np.uint8)
    kernels.min_hamming(rows, 2)
    kernels.min_hamming(rows, 3)
    kernels.min_symplectic(rows, 2)
    kernels.min_symplectic(rows, 3)
    kernels.min_symplectic_split(rows, 1)
    kernels.iset_min(rows, 2, 2, 10**6)
    kernels.iset_min(rows, 3, 2, 10**6)
    return kernels.BACKEND
