"""Cyclic codes over prime fields with exact minimum-distance engines.

A cyclic code of length n is the ideal of F_p[x]/(x^n - 1) generated by a
monic divisor g of x^n - 1; its dimension is n - deg(g), with the zero code
(g = x^n - 1) permitted.  Distances come from two engines:

* :func:`min_hamming_exhaustive` -- enumerate the full message space.
* :func:`min_hamming_iset` -- systematise one information set and sweep
  messages by ascending weight; finishing weight level w certifies that any
  unseen codeword weighs at least w + 1.

The zero code has distance INFINITY so that minima over families of
component codes silently ignore empty ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import kernels
from ._linalg import systematic_form
from .config import default_budget
from .gfpoly import (
    PlainPoly,
    PrimeField,
    RingElement,
    StructureError,
    divides,
    exact_div,
    plain_gcd,
)

INFINITY = math.inf


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the allowed message budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"enumeration needs {required} messages but the budget is {budget}"
        )
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a minimum-distance computation.

    ``value`` is the distance when ``exact``, otherwise the best (smallest)
    codeword weight found so far; ``lower``/``upper`` always bracket the true
    distance.  The zero code reports INFINITY exactly.
    """

    value: Union[int, float]
    exact: bool
    lower: Union[int, float]
    upper: Union[int, float]
    enumerated: int

    @classmethod
    def exact_value(cls, value, enumerated: int) -> "DistanceResult":
        return cls(value, True, value, value, enumerated)

    @classmethod
    def bounded(cls, lower, upper, enumerated: int) -> "DistanceResult":
        return cls(upper, False, lower, upper, enumerated)

    def to_json(self) -> dict:
        def enc(v):
            return "inf" if v == INFINITY else int(v)

        return {
            "value": enc(self.value),
            "exact": self.exact,
            "lower": enc(self.lower),
            "upper": enc(self.upper),
            "enumerated": self.enumerated,
        }


@dataclass(frozen=True)
class CyclicCode:
    """The cyclic code of length n generated by a monic divisor g of x^n - 1."""

    field: PrimeField
    n: int
    g: PlainPoly

    def __post_init__(self) -> None:
        if self.g.field != self.field:
            raise StructureError("generator polynomial over the wrong field")
        if self.g.is_zero or self.g.coeffs[-1] != 1:
            raise StructureError("generator polynomial must be monic")
        if not divides(self.g, PlainPoly.modulus(self.field, self.n)):
            raise StructureError(f"{self.g} does not divide x^{self.n}-1")

    @property
    def dim(self) -> int:
        return self.n - self.g.degree

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def parity_check(self) -> PlainPoly:
        return exact_div(PlainPoly.modulus(self.field, self.n), self.g)

    def generator_rows(self) -> np.ndarray:
        """The dim x n matrix of shifted generator coefficient vectors."""
        if self.is_zero:
            return np.zeros((0, self.n), np.uint8)
        return circulant_rows(RingElement.from_poly(self.g, self.n), self.dim)

    def params(self) -> tuple[int, int]:
        return self.n, self.dim


def cyclic_from_element(f: Union[RingElement, PlainPoly], n: int) -> CyclicCode:
    """The cyclic code generated by an arbitrary ring element.

    The generated ideal equals the one generated by gcd(f, x^n - 1), so the
    argument need not divide x^n - 1; f = 0 yields the zero code.
    """
    if isinstance(f, RingElement):
        if f.n != n:
            raise StructureError("ring element length differs from requested n")
        poly = f.to_poly()
        field = f.field
    else:
        poly = f
        field = f.field
    mod = PlainPoly.modulus(field, n)
    if poly.is_zero:
        return CyclicCode(field, n, mod.monic())
    return CyclicCode(field, n, plain_gcd(poly % mod, mod))


def circulant_rows(f: RingElement, t: int) -> np.ndarray:
    """Rows x^i * f for i = 0..t-1 as a t x n uint8 matrix."""
    if not 1 <= t <= f.n:
        raise StructureError(f"row count {t} outside 1..{f.n}")
    out = np.empty((t, f.n), np.uint8)
    cur = f
    for i in range(t):
        out[i] = cur.to_vector()
        cur = cur.shift(1)
    return out


def min_hamming_exhaustive(code: CyclicCode, message_budget: int | None = None) -> DistanceResult:
    """Exact minimum Hamming distance by full message-space enumeration."""
    if message_budget is None:
        message_budget = default_budget()
    if code.is_zero:
        return DistanceResult.exact_value(INFINITY, 0)
    required = code.field.p ** code.dim
    if required > message_budget:
        raise BudgetExceededError(required, message_budget)
    best, steps = kernels.min_hamming(code.generator_rows(), code.field.p)
    return DistanceResult.exact_value(best, steps)


def min_hamming_iset(
    code: CyclicCode,
    weight_cap: int | None = None,
    work_budget: int | None = None,
) -> DistanceResult:
    """Information-set distance search; always returns a sound result.

    The generator matrix is row-reduced to systematic form (a column
    permutation, which preserves weights) and messages are swept by ascending
    Hamming weight.  The result is exact when a finished level certifies
    minimality or the sweep covered every message weight.
    """
    if code.is_zero:
        raise StructureError("information-set search requires a nonzero code")
    if weight_cap is None:
        weight_cap = code.dim
    weight_cap = min(weight_cap, code.dim)
    if work_budget is None:
        work_budget = default_budget()
    sys_rows, _perm = systematic_form(code.generator_rows(), code.field.p)
    best, finished, enumerated = kernels.iset_min(
        sys_rows, code.field.p, weight_cap, work_budget
    )
    if finished >= code.dim or finished + 1 >= best:
        return DistanceResult.exact_value(best, enumerated)
    return DistanceResult.bounded(finished + 1, best, enumerated)


