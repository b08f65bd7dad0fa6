"""Catalog of published record constructions, batch verification, and search.

The packaged catalog stores three groups, with every polynomial kept
verbatim in the abbreviated run-length notation so entries stay diffable
against their published form:

* one-generator construction entries (g, f0, f1 over F_2),
* two-generator entries whose rows are ([g1 f], [g1]) and ([g2], [g2 f]),
* 117 claim rows [[n, k, d]], each either anchored to one construction or
  marked "derived" (reachable from some anchor by the propagation rules).

Published generator tuples are not always gcd-reduced; construction goes
through :meth:`QcOneGen.normalized`, which folds any shared factor into
the generator so recomputed dimensions are the true ones.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Optional

import numpy as np

from .bounds import dual_distance_bounds, primal_distance_bounds
from .config import DEFAULT_COMPONENT_WORK, default_budget
from .cyclic import INFINITY, BudgetExceededError
from .gfpoly import PlainPoly, PrimeField, RingElement, StructureError, divides
from .notation import ParseError, emit_abbrev, parse_abbrev
from .qcsym import (
    HypothesisError,
    QcMultiGen,
    QcOneGen,
    check_sso_multi_gen,
    check_sso_one_gen,
    generator_matrix,
    gram_sso_oracle,
    symplectic_distance_exhaustive,
)
from .qecc import QeccParams, claim_check, crss_map, propagate_closure

__all__ = [
    "CatalogEntry",
    "ClaimRow",
    "Catalog",
    "CatalogError",
    "ParseError",
    "SearchConfig",
    "SearchHit",
    "emit_abbrev",
    "parse_abbrev",
    "load_catalog",
    "verify_catalog",
    "search",
]


class CatalogError(ValueError):
    """The packaged catalog data is unusable."""


_ACCEPTED_VERDICTS = ("matches", "exceeds", "untestable-at-budget", "hypothesis-not-applicable")


def _swapped(code: QcOneGen) -> QcOneGen:
    """The same code with its halves exchanged: symplectic weights, duality,
    and hence dual distances are preserved, but the dual-construction
    hypothesis may hold in only one orientation."""
    return QcOneGen.build(code.field, code.n, code.g, [code.f[1], code.f[0]])


@dataclass(frozen=True)
class CatalogEntry:
    """One construction row: either one-generator or two-generator."""

    id: str
    q: int
    n: int
    ell: int
    kind: str  # "one-generator" | "two-generator"
    polys: dict[str, str]  # abbreviated notation, as published
    claimed_code: tuple[int, int]
    claimed_dual: tuple[int, int, int]
    claimed_qecc: tuple[int, int, int]

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.q)

    def one_gen_code(self) -> QcOneGen:
        if self.kind != "one-generator":
            raise CatalogError(f"{self.id} is not a one-generator entry")
        f = self.field
        g = PlainPoly.from_coeffs(f, parse_abbrev(self.polys["g"], self.q))
        f0 = RingElement.from_coeffs(f, self.n, parse_abbrev(self.polys["f0"], self.q))
        f1 = RingElement.from_coeffs(f, self.n, parse_abbrev(self.polys["f1"], self.q))
        return QcOneGen.normalized(f, self.n, g, [f0, f1])

    def two_gen_code(self) -> QcMultiGen:
        if self.kind != "two-generator":
            raise CatalogError(f"{self.id} is not a two-generator entry")
        f = self.field
        g1 = PlainPoly.from_coeffs(f, parse_abbrev(self.polys["g1"], self.q))
        g2 = PlainPoly.from_coeffs(f, parse_abbrev(self.polys["g2"], self.q))
        fx = RingElement.from_coeffs(f, self.n, parse_abbrev(self.polys["f"], self.q))
        one = RingElement.one(f, self.n)
        row1 = QcOneGen.build(f, self.n, g1, [fx, one])
        row2 = QcOneGen.build(f, self.n, g2, [one, fx])
        return QcMultiGen.build([row1, row2])


@dataclass(frozen=True)
class ClaimRow:
    """One claimed record [[n, k, d]] with its derivation marker."""

    no: int
    params: tuple[int, int, int]
    previous: Optional[tuple[int, int, int]]
    source: str  # construction id or "derived"


@dataclass(frozen=True)
class Catalog:
    constructions: tuple[CatalogEntry, ...]
    claims: tuple[ClaimRow, ...]

    @property
    def one_generator(self) -> tuple[CatalogEntry, ...]:
        return tuple(e for e in self.constructions if e.kind == "one-generator")

    @property
    def two_generator(self) -> tuple[CatalogEntry, ...]:
        return tuple(e for e in self.constructions if e.kind == "two-generator")

    def entry(self, entry_id: str) -> CatalogEntry:
        for e in self.constructions:
            if e.id == entry_id:
                return e
        raise KeyError(entry_id)


def _validate_entry(entry: CatalogEntry) -> None:
    mod = PlainPoly.modulus(entry.field, entry.n)
    for name, text in entry.polys.items():
        coeffs = parse_abbrev(text, entry.q)
        if len(coeffs) > entry.n:
            raise CatalogError(f"{entry.id}: {name} has {len(coeffs)} coefficients for n={entry.n}")
        if name.startswith("g"):
            g = PlainPoly.from_coeffs(entry.field, coeffs)
            if not divides(g, mod):
                raise CatalogError(f"{entry.id}: {name} does not divide x^{entry.n}-1")
    # constructing the codes enforces the gcd conditions
    if entry.kind == "one-generator":
        entry.one_gen_code()
    else:
        entry.two_gen_code()


def load_catalog() -> Catalog:
    """Load and validate the packaged catalog."""
    try:
        raw = json.loads(
            resources.files("sympqc").joinpath("data/catalog.json").read_text()
        )
    except FileNotFoundError as exc:
        raise CatalogError("packaged catalog data file is missing") from exc
    entries: list[CatalogEntry] = []
    for item in raw["one_generator"]:
        entries.append(
            CatalogEntry(
                item["id"], item["q"], item["n"], item["ell"], "one-generator",
                {"g": item["g"], "f0": item["f0"], "f1": item["f1"]},
                tuple(item["claimed_code"]), tuple(item["claimed_dual"]),
                tuple(item["claimed_qecc"]),
            )
        )
    for item in raw["two_generator"]:
        entries.append(
            CatalogEntry(
                item["id"], item["q"], item["n"], item["ell"], "two-generator",
                {"g1": item["g1"], "g2": item["g2"], "f": item["f"]},
                tuple(item["claimed_code"]), tuple(item["claimed_dual"]),
                tuple(item["claimed_qecc"]),
            )
        )
    claims = tuple(
        ClaimRow(
            item["no"], tuple(item["params"]),
            tuple(item["previous"]) if item["previous"] else None,
            item["source"],
        )
        for item in raw["claims"]
    )
    for entry in entries:
        try:
            _validate_entry(entry)
        except (ParseError, StructureError) as exc:
            raise CatalogError(f"catalog entry {entry.id} is corrupt: {exc}") from exc
    known_ids = {e.id for e in entries}
    for claim in claims:
        if claim.source != "derived" and claim.source not in known_ids:
            raise CatalogError(f"claim {claim.no} references unknown entry {claim.source}")
    return Catalog(tuple(entries), claims)


def _entry_report(
    entry: CatalogEntry,
    budget: int,
    work_budget: int,
    with_bounds: bool,
    with_exact: bool,
) -> dict:
    rep: dict = {"id": entry.id, "kind": entry.kind, "n": entry.n, "q": entry.q}
    ok = True
    if entry.kind == "one-generator":
        code = entry.one_gen_code()
        sso = check_sso_one_gen(code)
        dim = code.dim
        if with_bounds:
            dual_rep = None
            oriented = code
            for candidate in (code, _swapped(code)):
                try:
                    dual_rep = dual_distance_bounds(candidate, work_budget=work_budget)
                    oriented = candidate
                    break
                except HypothesisError:
                    continue
            if dual_rep is None:
                # neither orientation meets the dual-construction hypothesis;
                # the published dual distance is not re-derivable here
                rep["dual_bounds"] = None
                rep["qecc_claim_verdict"] = "hypothesis-not-applicable"
                rep["dual_distance_verdict"] = "hypothesis-not-applicable"
            else:
                if oriented is not code:
                    rep["swapped"] = True
                rep["dual_bounds"] = {
                    "lower": _enc(dual_rep.lower),
                    "upper": _enc(dual_rep.upper),
                }
                qecc = crss_map(oriented, distance_budget=budget)
                rep["qecc"] = qecc.to_json()
                rep["qecc_claim_verdict"] = claim_check(qecc, entry.claimed_qecc)
                dual_claimed = entry.claimed_dual[2]
                if dual_rep.exact and dual_rep.lower == dual_rep.upper:
                    rep["dual_distance_verdict"] = (
                        "matches" if dual_rep.lower == dual_claimed
                        else ("exceeds" if dual_rep.lower > dual_claimed else "below")
                    )
                elif dual_rep.lower <= dual_claimed <= dual_rep.upper:
                    rep["dual_distance_verdict"] = "untestable-at-budget"
                elif dual_claimed < dual_rep.lower:
                    rep["dual_distance_verdict"] = "exceeds"
                else:
                    rep["dual_distance_verdict"] = "below"
                ok &= rep["qecc_claim_verdict"] in _ACCEPTED_VERDICTS
                ok &= rep["dual_distance_verdict"] in _ACCEPTED_VERDICTS
        if with_exact and entry.q ** dim <= budget:
            dist = symplectic_distance_exhaustive(generator_matrix(code, reduced=True), entry.q, budget)
            rep["exact_code_distance"] = _enc(dist.value)
    else:
        code = entry.two_gen_code()
        sso = check_sso_multi_gen(code)
        dim = code.dim()
    rep["sso"] = bool(sso)
    rep["dim"] = dim
    rep["dim_claimed"] = entry.claimed_code[1]
    rep["dim_ok"] = dim == entry.claimed_code[1]
    # the claimed quantum parameters must agree structurally with the code
    rep["qecc_shape_ok"] = entry.claimed_qecc[:2] == (entry.n, entry.n - dim)
    ok &= rep["sso"] and rep["dim_ok"] and rep["qecc_shape_ok"]
    rep["ok"] = bool(ok)
    return rep


def _enc(v):
    return "inf" if v == INFINITY else int(v)


def verify_catalog(
    budget: int | None = None,
    *,
    work_budget: int = DEFAULT_COMPONENT_WORK,
    with_bounds: bool = False,
    with_exact: bool = False,
    propagation_depth: int = 10,
    only: Iterable[str] | None = None,
    catalog: Catalog | None = None,
) -> dict:
    """Re-verify the catalog: SSO, dimensions, claim verdicts, propagation.

    Always checks self-orthogonality and recomputed dimensions, and that
    every derived claim row is reachable from the anchored constructions by
    propagation.  ``with_bounds`` adds dual sandwiches and quantum-parameter
    claim verdicts; ``with_exact`` adds exact code distances where the
    message budget allows.  Failures are data in the report, not exceptions.
    """
    if budget is None:
        budget = default_budget()
    cat = catalog if catalog is not None else load_catalog()
    wanted = set(only) if only is not None else None
    entries = [e for e in cat.constructions if wanted is None or e.id in wanted]
    reports = [
        _entry_report(e, budget, work_budget, with_bounds, with_exact) for e in entries
    ]

    anchors = [
        QeccParams.known(*e.claimed_qecc, provenance=f"catalog:{e.id}")
        for e in cat.constructions
    ]
    closure = propagate_closure(anchors, propagation_depth)
    missing = [
        claim.no
        for claim in cat.claims
        if claim.source == "derived" and claim.params not in closure
    ]
    propagation_ok = not missing

    all_ok = propagation_ok and all(r["ok"] for r in reports)
    return {
        "ok": bool(all_ok),
        "entries": reports,
        "claims_total": len(cat.claims),
        "derived_claims_unreached": missing,
        "propagation_ok": propagation_ok,
    }


@dataclass(frozen=True)
class SearchConfig:
    """Reproducible random search over (f0, f1) pairs for a fixed divisor g."""

    q: int
    n: int
    g: PlainPoly
    trials: int
    seed: int
    require_sso: bool = True
    min_lower: Optional[int] = None
    exact_budget: Optional[int] = None
    with_dual_bounds: bool = False

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise StructureError("trials must be >= 1")
        if not divides(self.g, PlainPoly.modulus(PrimeField(self.q), self.n)):
            raise StructureError("g must divide x^n - 1")


@dataclass(frozen=True)
class SearchHit:
    trial: int
    f0: str
    f1: str
    sso: bool
    lower: float
    upper: float
    dual_lower: Optional[float]
    dual_upper: Optional[float]
    exact_distance: Optional[int]
    gram_verified: bool

    def to_json(self) -> dict:
        out = {
            "trial": self.trial,
            "f0": self.f0,
            "f1": self.f1,
            "sso": self.sso,
            "lower": _enc(self.lower),
            "upper": _enc(self.upper),
            "gram_verified": self.gram_verified,
        }
        if self.dual_lower is not None:
            out["dual_lower"] = _enc(self.dual_lower)
            out["dual_upper"] = _enc(self.dual_upper)
        if self.exact_distance is not None:
            out["exact_distance"] = self.exact_distance
        return out


def search(cfg: SearchConfig) -> tuple[list[SearchHit], dict]:
    """Run the randomized search; returns (hits, statistics).

    Deterministic for a fixed seed: trial t draws from an independent stream
    keyed by (seed, t), so results do not depend on scheduling or on how the
    trial range is partitioned.  f1 is sampled first; f0 is rejection-sampled
    until the gcd condition holds.  Every emitted hit is re-verified through
    the independent all-pairs Gram oracle.
    """
    field = PrimeField(cfg.q)
    stats = {"trials": cfg.trials, "rejections": 0, "sso_pass": 0, "hits": 0}
    hits: list[SearchHit] = []
    for trial in range(cfg.trials):
        rng = np.random.default_rng(np.random.SeedSequence(cfg.seed, spawn_key=(trial,)))
        f1 = RingElement.from_coeffs(field, cfg.n, rng.integers(0, cfg.q, cfg.n))
        while True:
            f0 = RingElement.from_coeffs(field, cfg.n, rng.integers(0, cfg.q, cfg.n))
            try:
                code = QcOneGen.build(field, cfg.n, cfg.g, [f0, f1])
                break
            except StructureError:
                stats["rejections"] += 1
        sso = bool(check_sso_one_gen(code))
        if sso:
            stats["sso_pass"] += 1
        elif cfg.require_sso:
            continue
        report = primal_distance_bounds(code)
        if cfg.min_lower is not None and report.lower < cfg.min_lower:
            continue
        dual_lo = dual_hi = None
        if cfg.with_dual_bounds:
            try:
                dual_rep = dual_distance_bounds(code)
                dual_lo, dual_hi = dual_rep.lower, dual_rep.upper
            except HypothesisError:
                pass
        exact = None
        if cfg.exact_budget is not None:
            try:
                dist = symplectic_distance_exhaustive(
                    generator_matrix(code, reduced=True), cfg.q, cfg.exact_budget
                )
                exact = int(dist.value) if dist.value != INFINITY else None
            except BudgetExceededError:
                exact = None
        if gram_sso_oracle(code) != sso:
            # the divisibility test and the Gram oracle must agree; a mismatch
            # would be a library bug, so refuse to emit the hit
            raise StructureError(f"trial {trial}: Gram oracle contradicts divisibility test")
        hits.append(
            SearchHit(
                trial,
                emit_abbrev(f0.coeffs),
                emit_abbrev(f1.coeffs),
                sso,
                report.lower,
                report.upper,
                dual_lo,
                dual_hi,
                exact,
                True,
            )
        )
        stats["hits"] += 1
    return hits, stats
