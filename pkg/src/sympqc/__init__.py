"""Symplectic self-orthogonal quasi-cyclic codes.

Construction and verification of quasi-cyclic codes over small prime
fields, exact divisibility tests for symplectic self-orthogonality,
minimum-symplectic-distance sandwich bounds, exact distance engines at
desk scale, and the map from binary self-orthogonal codes to quantum
error-correction code parameters.
"""

from .gfpoly import (
    GF2,
    GF3,
    GF5,
    GF7,
    DivisibilityError,
    PlainPoly,
    PrimeField,
    RingElement,
    StructureError,
    UndefinedInputError,
    bar,
    divides,
    euclidean_dual_generator,
    exact_div,
    plain_gcd,
    plain_lcm,
    ring_mul,
)
from .cyclic import (
    INFINITY,
    BudgetExceededError,
    CyclicCode,
    DistanceResult,
    circulant_rows,
    cyclic_from_element,
    min_hamming_exhaustive,
    min_hamming_iset,
)
from .qcsym import (
    DualTwoGen,
    HypothesisError,
    QcMultiGen,
    QcOneGen,
    SsoResult,
    SympVector,
    bar_adjoint_identity,
    check_sso_multi_gen,
    check_sso_one_gen,
    decompose_index2,
    generator_matrix,
    gram_sso_oracle,
    symplectic_distance_exhaustive,
    symplectic_dual,
    symplectic_inner,
    symplectic_weight,
)
from .bounds import BoundReport, dual_distance_bounds, primal_distance_bounds
from .qecc import QeccParams, claim_check, crss_map, propagate, propagate_closure
from .shell import (
    CatalogEntry,
    ClaimRow,
    ParseError,
    SearchConfig,
    emit_abbrev,
    load_catalog,
    parse_abbrev,
    search,
    verify_catalog,
)

__version__ = "0.1.0"
