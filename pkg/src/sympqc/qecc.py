"""From binary symplectic self-orthogonal codes to quantum code parameters.

A self-orthogonal [2n, k] binary code yields an [[n, n-k, d]] quantum code
whose distance is the minimum symplectic weight over the words of the
symplectic dual that lie outside the code itself.  The enumeration orders a
dual basis as (code basis | complement) so that "outside the code" is
exactly "some complement coordinate is nonzero"; the complement is obtained
by reducing dual basis rows against the precomputed echelon form of the
code.  When the dual is too large to enumerate, the distance is reported as
the dual sandwich interval instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import kernels
from ._linalg import extend_basis, rref
from .bounds import dual_distance_bounds
from .config import default_budget
from .cyclic import INFINITY
from .gfpoly import StructureError
from .qcsym import (
    InternalConsistencyError,
    QcOneGen,
    check_sso_one_gen,
    generator_matrix,
    symplectic_dual,
)


@dataclass(frozen=True)
class QeccParams:
    """Quantum code parameters [[n, k, d]] with an honest distance interval.

    ``exact`` marks d_lower == d_upper; ``pure`` states whether the distance
    over dual-minus-code words equals the plain dual distance (None when the
    enumeration was out of budget).
    """

    n: int
    k: int
    d_lower: int
    d_upper: int
    exact: bool
    pure: Optional[bool]
    provenance: str
    parent: Optional[tuple[int, int, int]] = None

    def __post_init__(self) -> None:
        if not 0 <= self.k <= self.n:
            raise StructureError(f"invalid logical dimension {self.k} for length {self.n}")
        if self.d_lower < 1 or self.d_upper < self.d_lower:
            raise StructureError("invalid distance interval")

    @property
    def d(self) -> Optional[int]:
        return self.d_lower if self.exact else None

    @classmethod
    def known(cls, n: int, k: int, d: int, provenance: str = "claimed") -> "QeccParams":
        return cls(n, k, d, d, True, None, provenance)

    def triple(self) -> tuple[int, int, Optional[int]]:
        return (self.n, self.k, self.d)

    def __str__(self) -> str:
        d = str(self.d_lower) if self.exact else f"{self.d_lower}..{self.d_upper}"
        return f"[[{self.n},{self.k},{d}]]"

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "d_lower": self.d_lower,
            "d_upper": self.d_upper,
            "exact": self.exact,
            "pure": self.pure,
            "provenance": self.provenance,
        }
        if self.parent is not None:
            out["parent"] = list(self.parent)
        return out


def crss_map(code: QcOneGen, distance_budget: int | None = None) -> QeccParams:
    """Map a binary SSO index-2 code of length 2n to [[n, n - dim, d]].

    d is the minimum symplectic weight over dual words outside the code.
    Within budget the value is exact and the purity flag compares it with
    the plain dual distance; beyond budget the dual sandwich interval is
    reported with purity unknown.
    """
    if code.field.p != 2:
        raise StructureError("the quantum mapping is stated for binary codes")
    if not check_sso_one_gen(code):
        raise StructureError("code is not symplectic self-orthogonal")
    if distance_budget is None:
        distance_budget = default_budget()

    dual = symplectic_dual(code)
    n_q = code.n
    k_q = n_q - code.dim

    if 2**dual.dim > distance_budget:
        report = dual_distance_bounds(code)
        lower = 1 if report.lower == INFINITY else max(1, int(report.lower))
        upper = n_q if report.upper == INFINITY else min(n_q, int(report.upper))
        return QeccParams(n_q, k_q, lower, max(lower, upper), False, None, "constructed")

    primal_rows, primal_pivots = rref(generator_matrix(code), 2)
    complement = extend_basis(primal_rows, primal_pivots, dual.basis, 2)
    if primal_rows.shape[0] + complement.shape[0] != dual.dim:
        raise InternalConsistencyError(
            "code basis does not extend to the dual (self-orthogonality broken?)"
        )
    stacked = np.vstack([primal_rows, complement]) if primal_rows.size else complement
    best_out, best_in, _steps = kernels.min_symplectic_split(stacked, primal_rows.shape[0])
    if best_out == INFINITY:
        # maximal isotropic code: the dual IS the code and k = 0; by the usual
        # zero-logical-qubit convention d is the stabilizer's own minimum weight
        return QeccParams(n_q, 0, int(best_in), int(best_in), True, True, "constructed")
    pure = best_out <= best_in
    return QeccParams(n_q, k_q, int(best_out), int(best_out), True, pure, "constructed")


_RULES = (
    ("drop-logical", lambda n, k, d: (n, k - 1, d) if k >= 1 else None),
    ("add-qubit", lambda n, k, d: (n + 1, k, d) if k > 0 else None),
    ("trade-qubit", lambda n, k, d: (n - 1, k + 1, d - 1) if n >= 2 and d >= 2 else None),
)


def propagate(params: QeccParams) -> list[QeccParams]:
    """All quantum codes derivable in one step from known parameters.

    Rules: [[n, k-1, d]] for k >= 1, [[n+1, k, d]] for k > 0, and
    [[n-1, k+1, d-1]] for n >= 2 (suppressed when d = 1, which would give a
    meaningless distance 0).
    """
    if not params.exact:
        raise StructureError("propagation requires an exact distance")
    n, k, d = params.n, params.k, params.d_lower
    out = []
    for rule, fn in _RULES:
        res = fn(n, k, d)
        if res is None:
            continue
        out.append(
            QeccParams(res[0], res[1], res[2], res[2], True, None,
                       f"propagated:{rule}", (n, k, d))
        )
    return out


def propagate_closure(
    starts: Iterable[QeccParams], depth: int
) -> dict[tuple[int, int, int], QeccParams]:
    """Breadth-first closure of the propagation rules up to the given depth.

    Returns a map (n, k, d) -> parameters, keeping the first derivation found
    (shallowest).  Start parameters are included at depth 0.
    """
    frontier = list(starts)
    seen: dict[tuple[int, int, int], QeccParams] = {}
    for params in frontier:
        seen.setdefault((params.n, params.k, params.d_lower), params)
    for _ in range(depth):
        nxt: list[QeccParams] = []
        for params in frontier:
            for child in propagate(params):
                key = (child.n, child.k, child.d_lower)
                if key in seen:
                    continue
                seen[key] = child
                nxt.append(child)
        if not nxt:
            break
        frontier = nxt
    return seen


def claim_check(params: QeccParams, claim: tuple[int, int, int]) -> str:
    """Compare computed parameters against a claimed [[n, k, d]].

    Verdicts: "matches", "exceeds" (computed distance beats the claim),
    "below" (claim not met), "untestable-at-budget" (claim inside an
    undecided interval).
    """
    cn, ck, cd = claim
    if (params.n, params.k) != (cn, ck):
        return "below"
    if params.exact:
        d = params.d_lower
        if d == cd:
            return "matches"
        return "exceeds" if d > cd else "below"
    if params.d_upper < cd:
        return "below"
    if params.d_lower > cd:
        return "exceeds"
    return "untestable-at-budget"
