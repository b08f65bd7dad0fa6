"""Quasi-cyclic codes, symplectic algebra, and self-orthogonality tests.

A 1-generator quasi-cyclic code of index ell is the R-module generated by
([g f_0], ..., [g f_{ell-1}]) with g | x^n - 1 and gcd(f_0, ..., f_{ell-1},
(x^n - 1)/g) = 1; its dimension is n - deg(g).  Multi-generator codes stack
several such rows.

Self-orthogonality under the symplectic inner product reduces to exact
polynomial divisibility: with m = ell/2 and

    pairing = sum_j (f_j * bar(f_{m+j}) - f_{m+j} * bar(f_j)),

the code is symplectic self-orthogonal iff gdual | g * pairing, where gdual
is the Euclidean dual generator of g.  The multi-generator test runs the
same divisibility over all ordered row pairs.  Divisibility is evaluated on
the canonical residue, which is well defined because gdual | x^n - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from . import kernels
from ._linalg import rank, rref, symplectic_gram
from .config import default_budget
from .cyclic import (
    INFINITY,
    BudgetExceededError,
    CyclicCode,
    DistanceResult,
    circulant_rows,
)
from .gfpoly import (
    PlainPoly,
    PrimeField,
    RingElement,
    StructureError,
    divides,
    euclidean_dual_generator,
    exact_div,
    plain_gcd,
)


class HypothesisError(ValueError):
    """A construction's stated hypothesis does not hold for the input."""


class InternalConsistencyError(RuntimeError):
    """A structural identity that must hold for valid inputs failed."""


@dataclass(frozen=True)
class SympVector:
    """A vector of length 2N split as (left | right) halves."""

    field: PrimeField
    half: int
    entries: tuple[int, ...]

    @classmethod
    def from_entries(cls, field: PrimeField, entries: Sequence[int]) -> "SympVector":
        vals = tuple(field.reduce(int(e)) for e in entries)
        if len(vals) % 2:
            raise StructureError("symplectic vectors have even length")
        return cls(field, len(vals) // 2, vals)

    def __post_init__(self) -> None:
        if len(self.entries) != 2 * self.half:
            raise StructureError("entry count differs from 2N")


def symplectic_inner(u: SympVector, v: SympVector) -> int:
    """sum_i (u_i v_{N+i} - u_{N+i} v_i) mod p."""
    if u.field != v.field or u.half != v.half:
        raise StructureError("symplectic vectors of different shapes")
    p = u.field.p
    half = u.half
    total = 0
    for i in range(half):
        total += u.entries[i] * v.entries[half + i] - u.entries[half + i] * v.entries[i]
    return total % p


def symplectic_weight(c: Union[SympVector, Sequence[int], np.ndarray]) -> int:
    """Count of positions i < N with (c_i, c_{N+i}) != (0, 0)."""
    entries = c.entries if isinstance(c, SympVector) else tuple(int(x) for x in c)
    if len(entries) % 2:
        raise StructureError("symplectic vectors have even length")
    half = len(entries) // 2
    return sum(
        1 for i in range(half) if entries[i] != 0 or entries[half + i] != 0
    )


def _as_ring(field: PrimeField, n: int, value) -> RingElement:
    if isinstance(value, RingElement):
        if value.field != field or value.n != n:
            raise StructureError("ring element from the wrong ring")
        return value
    if isinstance(value, PlainPoly):
        return RingElement.from_poly(value, n)
    return RingElement.from_coeffs(field, n, value)


@dataclass(frozen=True)
class QcOneGen:
    """A 1-generator quasi-cyclic code of even index ell.

    ``definition_ok`` records whether the gcd condition held at construction;
    it can only be False when the caller passed ``allow_gcd_violation=True``,
    and the distance-bound machinery refuses such codes.
    """

    field: PrimeField
    n: int
    ell: int
    g: PlainPoly
    f: tuple[RingElement, ...]
    definition_ok: bool = True

    @classmethod
    def build(
        cls,
        field: PrimeField,
        n: int,
        g,
        fs: Sequence,
        *,
        allow_gcd_violation: bool = False,
    ) -> "QcOneGen":
        if len(fs) < 2 or len(fs) % 2:
            raise StructureError("index must be an even integer >= 2")
        gp = g if isinstance(g, PlainPoly) else PlainPoly.from_coeffs(field, g)
        gp = gp.monic()
        mod = PlainPoly.modulus(field, n)
        if not divides(gp, mod):
            raise StructureError(f"{gp} does not divide x^{n}-1")
        ring_fs = tuple(_as_ring(field, n, f) for f in fs)
        h = exact_div(mod, gp)
        acc = h
        for f in ring_fs:
            rep = f.to_poly()
            if rep.is_zero:
                continue
            acc = plain_gcd(acc, rep)
        ok = acc.degree == 0
        if not ok and not allow_gcd_violation:
            raise StructureError(
                "gcd(f_0, ..., f_{ell-1}, (x^n-1)/g) != 1; "
                "pass allow_gcd_violation=True to experiment anyway"
            )
        return cls(field, n, len(ring_fs), gp, ring_fs, ok)

    @classmethod
    def normalized(cls, field: PrimeField, n: int, g, fs: Sequence) -> "QcOneGen":
        """Build the code, folding any shared gcd factor into the generator.

        If e = gcd(f_0, ..., f_{ell-1}, h) is nontrivial, the same module is
        generated by (g*e, f_0/e, ..., f_{ell-1}/e), and that tuple satisfies
        the gcd condition.  Lets published generator tuples that were not
        gcd-reduced construct a compliant code with the true dimension.
        """
        gp = g if isinstance(g, PlainPoly) else PlainPoly.from_coeffs(field, g)
        gp = gp.monic()
        mod = PlainPoly.modulus(field, n)
        if not divides(gp, mod):
            raise StructureError(f"{gp} does not divide x^{n}-1")
        ring_fs = [_as_ring(field, n, f) for f in fs]
        h = exact_div(mod, gp)
        acc = h
        for f in ring_fs:
            rep = f.to_poly()
            if rep.is_zero:
                continue
            acc = plain_gcd(acc, rep)
        if acc.degree > 0:
            gp = (gp * acc).monic()
            ring_fs = [
                RingElement.from_poly(exact_div(f.to_poly(), acc), n)
                if not f.is_zero
                else f
                for f in ring_fs
            ]
        return cls.build(field, n, gp, ring_fs)

    @property
    def m(self) -> int:
        return self.ell // 2

    @property
    def dim(self) -> int:
        return self.n - self.g.degree

    def parity_check(self) -> PlainPoly:
        return exact_div(PlainPoly.modulus(self.field, self.n), self.g)

    def dual_generator(self) -> PlainPoly:
        return euclidean_dual_generator(self.g, self.n)

    def g_ring(self) -> RingElement:
        return RingElement.from_poly(self.g, self.n)

    def block_polys(self) -> tuple[RingElement, ...]:
        """The per-block generators [g * f_j]."""
        gr = self.g_ring()
        return tuple(gr * f for f in self.f)


@dataclass(frozen=True)
class QcMultiGen:
    """A stack of 1-generator rows sharing (field, n, ell)."""

    field: PrimeField
    n: int
    ell: int
    rows: tuple[QcOneGen, ...]

    @classmethod
    def build(cls, rows: Sequence[QcOneGen]) -> "QcMultiGen":
        if not rows:
            raise StructureError("multi-generator code needs at least one row")
        field, n, ell = rows[0].field, rows[0].n, rows[0].ell
        for row in rows:
            if (row.field, row.n, row.ell) != (field, n, ell):
                raise StructureError("rows disagree on field, length, or index")
        return cls(field, n, ell, tuple(rows))

    @property
    def h(self) -> int:
        return len(self.rows)

    def dim(self) -> int:
        return rank(generator_matrix(self), self.field.p)


@dataclass(frozen=True)
class SsoResult:
    """Outcome of a self-orthogonality divisibility test."""

    ok: bool
    witness: Optional[PlainPoly] = None
    pair: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.ok


def _pairing_poly(row_s: QcOneGen, row_r: QcOneGen) -> RingElement:
    """sum_j (f_{s,j} * bar(f_{r,m+j}) - f_{s,m+j} * bar(f_{r,j}))."""
    m = row_s.m
    acc = RingElement.zero(row_s.field, row_s.n)
    for j in range(m):
        acc = acc + (row_s.f[j] * row_r.f[m + j].bar() - row_s.f[m + j] * row_r.f[j].bar())
    return acc


def check_sso_one_gen(code: QcOneGen) -> SsoResult:
    """Divisibility test for symplectic self-orthogonality of a 1-generator code.

    On failure the witness is the nonzero remainder of the residue of
    g * pairing modulo the dual generator.
    """
    pairing = _pairing_poly(code, code)
    residue = (code.g_ring() * pairing).to_poly()
    rem = residue % code.dual_generator()
    return SsoResult(rem.is_zero, None if rem.is_zero else rem)


def check_sso_multi_gen(code: QcMultiGen) -> SsoResult:
    """All-pairs divisibility test for a multi-generator code."""
    for r in range(code.h):
        gdual_r = code.rows[r].dual_generator()
        for s in range(code.h):
            pairing = _pairing_poly(code.rows[s], code.rows[r])
            residue = (code.rows[s].g_ring() * pairing).to_poly()
            rem = residue % gdual_r
            if not rem.is_zero:
                return SsoResult(False, rem, (r + 1, s + 1))
    return SsoResult(True)


def generator_matrix(code: Union[QcOneGen, QcMultiGen], reduced: bool = False) -> np.ndarray:
    """Stacked circulant blocks; with reduced=True, an RREF basis instead."""
    rows = code.rows if isinstance(code, QcMultiGen) else (code,)
    blocks = []
    for row in rows:
        blocks.append(np.hstack([circulant_rows(b, row.n) for b in row.block_polys()]))
    full = np.vstack(blocks)
    if not reduced:
        return full
    return rref(full, code.field.p)[0]


def gram_sso_oracle(code: Union[QcOneGen, QcMultiGen]) -> bool:
    """Independent self-orthogonality check: all generator-row pairs must
    have vanishing symplectic product."""
    mat = generator_matrix(code)
    return not symplectic_gram(mat, mat, code.field.p).any()


@dataclass(frozen=True)
class Decomposition:
    """Block decomposition of an index-2 code: a direct sum of two one-sided
    cyclic pieces plus a both-sides-nonzero circulant block."""

    c1: CyclicCode
    c2: CyclicCode
    circ_rows: np.ndarray
    t: int
    t_a: int
    t_b: int
    matrix: np.ndarray


def decompose_index2(code: QcOneGen) -> Decomposition:
    """Split an index-2 code into one-sided cyclic blocks plus a mixed block.

    c1 (left slot, right zero) is generated by (x^n-1)/gcd(h, f1) and has
    dimension t_a = deg gcd(h, f1); c2 (right slot) by (x^n-1)/gcd(h, f0)
    with dimension t_b = deg gcd(h, f0).  The mixed block keeps
    t = dim - t_a - t_b shifted copies of ([g f0], [g f1]).  The assembled
    matrix must have rank dim and the same row space as the generator
    matrix; violations signal an invalid input.
    """
    if code.ell != 2:
        raise StructureError("decomposition is defined for index 2")
    field, n = code.field, code.n
    mod = PlainPoly.modulus(field, n)
    h = code.parity_check()
    f0, f1 = code.f
    gcd_h_f0 = plain_gcd(h, f0.to_poly()) if not f0.is_zero else h
    gcd_h_f1 = plain_gcd(h, f1.to_poly()) if not f1.is_zero else h
    t_a = gcd_h_f1.degree
    t_b = gcd_h_f0.degree
    t = code.dim - t_a - t_b
    c1 = CyclicCode(field, n, exact_div(mod, gcd_h_f1).monic())
    c2 = CyclicCode(field, n, exact_div(mod, gcd_h_f0).monic())

    gf0, gf1 = code.block_polys()
    parts = []
    if t > 0:
        mixed = np.hstack([circulant_rows(gf0, t), circulant_rows(gf1, t)])
        parts.append(mixed)
    else:
        mixed = np.zeros((0, 2 * n), np.uint8)
        parts.append(mixed)
    zeros = np.zeros((0, n), np.uint8)
    if t_b > 0:
        right = circulant_rows(RingElement.from_poly(c2.g, n), t_b)
        parts.append(np.hstack([np.zeros((t_b, n), np.uint8), right]))
    if t_a > 0:
        left = circulant_rows(RingElement.from_poly(c1.g, n), t_a)
        parts.append(np.hstack([left, np.zeros((t_a, n), np.uint8)]))
    matrix = np.vstack(parts)

    p = field.p
    if rank(matrix, p) != code.dim:
        raise InternalConsistencyError("decomposition rank differs from code dimension")
    gen = generator_matrix(code, reduced=True)
    if rank(np.vstack([gen, matrix]), p) != code.dim:
        raise InternalConsistencyError("decomposition spans a different row space")
    return Decomposition(c1, c2, mixed, t, t_a, t_b, matrix)


@dataclass(frozen=True)
class DualTwoGen:
    """The symplectic dual of an index-2 code as a 2-generator structure.

    gen1 = ([bar f0], [bar f1]) contributes a full circulant pair; gen2 =
    ([0], [gdual]) contributes the dual cyclic block.  The stacked matrix has
    rank n + deg(g).
    """

    field: PrimeField
    n: int
    gen1: tuple[RingElement, RingElement]
    gen2: tuple[RingElement, RingElement]
    expected_dim: int
    rows: np.ndarray
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


def symplectic_dual(code: QcOneGen) -> DualTwoGen:
    """The symplectic dual of an index-2 code with gcd(bar f0, g) = 1.

    The construction is only available under that hypothesis; the dual is
    validated to be rank-complementary (rank n + deg g) and symplectically
    orthogonal to the primal.
    """
    if code.ell != 2:
        raise StructureError("dual construction is defined for index 2")
    f0, f1 = code.f
    f0b, f1b = f0.bar(), f1.bar()
    if not f0b.is_zero:
        hyp = plain_gcd(f0b.to_poly(), code.g) if code.g.degree > 0 else PlainPoly.one(code.field)
        if code.g.degree > 0 and hyp.degree != 0:
            raise HypothesisError(
                f"gcd(bar f0, g) = {hyp} != 1; the dual construction requires coprimality"
            )
    elif code.g.degree > 0:
        raise HypothesisError("bar f0 = 0 shares every factor with g")

    n = code.n
    gdual = code.dual_generator()
    gdual_ring = RingElement.from_poly(gdual, n)
    zero = RingElement.zero(code.field, n)
    top = np.hstack([circulant_rows(f0b, n), circulant_rows(f1b, n)])
    bottom = np.hstack([np.zeros((n, n), np.uint8), circulant_rows(gdual_ring, n)])
    rows = np.vstack([top, bottom])

    p = code.field.p
    basis, _piv = rref(rows, p)
    expected = n + code.g.degree
    if basis.shape[0] != expected:
        # The coprimality of bar f0 and g alone does not force the two
        # generators to span the whole dual: a factor of x^n - 1 shared by
        # bar f0 and bar f1 (necessarily outside gdual) collapses the span.
        raise HypothesisError(
            f"dual construction spans rank {basis.shape[0]} < {expected}; "
            "the generator pair does not reach the full symplectic dual"
        )
    primal = generator_matrix(code, reduced=True)
    if symplectic_gram(primal, basis, p).any():
        raise InternalConsistencyError("dual is not symplectically orthogonal to the code")
    return DualTwoGen(code.field, n, (f0b, f1b), (zero, gdual_ring), expected, rows, basis)


def symplectic_distance_exhaustive(rows: np.ndarray, p: int, budget: int | None = None) -> DistanceResult:
    """Exact minimum symplectic weight over the row space of ``rows``.

    The rows are reduced to a basis first; the enumeration then walks all
    p^rank - 1 nonzero combinations.
    """
    if budget is None:
        budget = default_budget()
    rows = np.asarray(rows, dtype=np.uint8)
    if rows.shape[1] % 2:
        raise StructureError("row length must be even")
    basis, _ = rref(rows, p)
    k = basis.shape[0]
    if k == 0:
        return DistanceResult.exact_value(INFINITY, 0)
    required = p**k
    if required > budget:
        raise BudgetExceededError(required, budget)
    best, steps = kernels.min_symplectic(basis, p)
    return DistanceResult.exact_value(best, steps)


def bar_adjoint_identity(fa: RingElement, fb: RingElement, fc: RingElement) -> bool:
    """Check <[fa*fb], [fc]>_e == <[fa], [bar(fb)*fc]>_e (bar moves factors
    across the Euclidean pairing)."""
    fa._check(fb)
    fa._check(fc)
    return (fa * fb).inner_e(fc) == fa.inner_e(fb.bar() * fc)
