"""Command-line interface.

Subcommands: check-sso, bounds, dual, distance, qecc, verify-catalog,
search, parse.  Polynomials are accepted in abbreviated run-length notation
(``101^3``) or as comma-separated coefficients (``1,0,1,1,1``).  With
``--json`` every report is a single JSON object per line with a fixed key
order; exit status is 0 when all checks passed, 1 when a verification
failed, and 2 on usage or input-parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .bounds import dual_distance_bounds, primal_distance_bounds
from .config import default_budget
from .cyclic import INFINITY, BudgetExceededError
from .gfpoly import PlainPoly, PrimeField, RingElement, StructureError, poly_str
from .notation import ParseError, emit_abbrev, parse_abbrev
from .qcsym import (
    HypothesisError,
    QcMultiGen,
    QcOneGen,
    check_sso_multi_gen,
    check_sso_one_gen,
    generator_matrix,
    symplectic_distance_exhaustive,
    symplectic_dual,
)
from .qecc import claim_check, crss_map
from .shell import SearchConfig, search, verify_catalog

USAGE_ERROR = 2


class CliInputError(Exception):
    pass


def _coeffs(text: str, p: int) -> list[int]:
    text = text.strip()
    if not text:
        raise CliInputError("empty polynomial")
    if "," in text:
        try:
            return [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise CliInputError(f"bad coefficient list {text!r}") from exc
    try:
        return parse_abbrev(text, p)
    except ParseError as exc:
        raise CliInputError(str(exc)) from exc


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(human)


def _enc(v):
    return "inf" if v == INFINITY else int(v)


def _build_one_gen(args) -> QcOneGen:
    field = PrimeField(args.q)
    if args.n is None:
        raise CliInputError("--n is required")
    g = PlainPoly.from_coeffs(field, _coeffs(args.g, args.q))
    fs = [
        RingElement.from_coeffs(field, args.n, _coeffs(text, args.q))
        for text in (args.f0, args.f1)
    ]
    return QcOneGen.normalized(field, args.n, g, fs)


def _build_two_gen(args) -> QcMultiGen:
    field = PrimeField(args.q)
    if args.n is None:
        raise CliInputError("--n is required")
    g1 = PlainPoly.from_coeffs(field, _coeffs(args.g1, args.q))
    g2 = PlainPoly.from_coeffs(field, _coeffs(args.g2, args.q))
    f = RingElement.from_coeffs(field, args.n, _coeffs(args.f, args.q))
    one = RingElement.one(field, args.n)
    return QcMultiGen.build(
        [
            QcOneGen.build(field, args.n, g1, [f, one]),
            QcOneGen.build(field, args.n, g2, [one, f]),
        ]
    )


def _cmd_parse(args) -> int:
    coeffs = parse_abbrev(args.text, args.q)
    payload = {
        "input": args.text,
        "coeffs": coeffs,
        "poly": poly_str(coeffs),
        "canonical": emit_abbrev(coeffs),
    }
    _emit(args, payload, poly_str(coeffs))
    return 0


def _cmd_check_sso(args) -> int:
    if args.g1 or args.g2 or args.f:
        if not (args.g1 and args.g2 and args.f):
            raise CliInputError("two-generator mode needs --g1, --g2 and --f")
        code = _build_two_gen(args)
        result = check_sso_multi_gen(code)
        dim = code.dim()
    else:
        if not (args.g and args.f0 and args.f1):
            raise CliInputError("one-generator mode needs --g, --f0 and --f1")
        code = _build_one_gen(args)
        result = check_sso_one_gen(code)
        dim = code.dim
    payload = {"sso": bool(result), "length": 2 * args.n, "dim": dim}
    if result.witness is not None:
        payload["witness"] = emit_abbrev(result.witness.coeffs)
    if result.pair is not None:
        payload["failing_pair"] = list(result.pair)
    verdict = "symplectic self-orthogonal" if result else "NOT symplectic self-orthogonal"
    _emit(args, payload, f"[{2*args.n},{dim}]_{args.q}: {verdict}")
    return 0 if result else 1


def _cmd_bounds(args) -> int:
    code = _build_one_gen(args)
    fn = dual_distance_bounds if args.dual else primal_distance_bounds
    report = fn(code, work_budget=args.work_budget)
    payload = report.to_json()
    side = "dual" if args.dual else "code"
    _emit(
        args,
        payload,
        f"{side} symplectic distance in [{_enc(report.lower)}, {_enc(report.upper)}] "
        f"(case {report.case_tag})",
    )
    return 0


def _cmd_dual(args) -> int:
    code = _build_one_gen(args)
    dual = symplectic_dual(code)
    payload = {
        "length": 2 * code.n,
        "dim": dual.dim,
        "gen1": [emit_abbrev(dual.gen1[0].coeffs), emit_abbrev(dual.gen1[1].coeffs)],
        "gen2": [emit_abbrev(dual.gen2[0].coeffs), emit_abbrev(dual.gen2[1].coeffs)],
    }
    _emit(args, payload, f"dual is a [{2*code.n},{dual.dim}]_{args.q} two-generator code")
    return 0


def _cmd_distance(args) -> int:
    code = _build_one_gen(args)
    if args.dual:
        rows = symplectic_dual(code).basis
    else:
        rows = generator_matrix(code, reduced=True)
    result = symplectic_distance_exhaustive(rows, args.q, args.budget)
    payload = {
        "side": "dual" if args.dual else "code",
        "distance": _enc(result.value),
        "exact": result.exact,
        "enumerated": result.enumerated,
    }
    _emit(args, payload, f"minimum symplectic distance = {_enc(result.value)}")
    return 0


def _cmd_qecc(args) -> int:
    code = _build_one_gen(args)
    params = crss_map(code, distance_budget=args.budget)
    payload = params.to_json()
    rc = 0
    human = str(params)
    if args.claim:
        try:
            claim = tuple(int(x) for x in args.claim.split(","))
        except ValueError as exc:
            raise CliInputError("--claim must be n,k,d") from exc
        if len(claim) != 3:
            raise CliInputError("--claim must be n,k,d")
        verdict = claim_check(params, claim)
        payload["claim"] = list(claim)
        payload["verdict"] = verdict
        human += f" vs claim [[{claim[0]},{claim[1]},{claim[2]}]]: {verdict}"
        rc = 0 if verdict in ("matches", "exceeds", "untestable-at-budget") else 1
    _emit(args, payload, human)
    return rc


def _cmd_verify_catalog(args) -> int:
    report = verify_catalog(
        args.budget,
        with_bounds=args.bounds,
        with_exact=args.exact,
        work_budget=args.work_budget,
        only=args.only or None,
    )
    if args.json:
        for entry in report["entries"]:
            print(json.dumps(entry))
        summary = {k: v for k, v in report.items() if k != "entries"}
        print(json.dumps(summary))
    else:
        for entry in report["entries"]:
            status = "ok" if entry["ok"] else "FAIL"
            print(f"{entry['id']}: sso={entry['sso']} dim={entry['dim']}/{entry['dim_claimed']} {status}")
        print(
            f"propagation: {'ok' if report['propagation_ok'] else 'FAIL'}; "
            f"{report['claims_total']} claims"
        )
    return 0 if report["ok"] else 1


def _cmd_search(args) -> int:
    field = PrimeField(args.q)
    if args.n is None:
        raise CliInputError("--n is required")
    if args.seed is None:
        raise CliInputError("--seed is required for a reproducible search")
    g = PlainPoly.from_coeffs(field, _coeffs(args.g, args.q))
    cfg = SearchConfig(
        q=args.q,
        n=args.n,
        g=g,
        trials=args.trials,
        seed=args.seed,
        require_sso=not args.keep_non_sso,
        min_lower=args.min_lower,
        exact_budget=args.exact_budget,
        with_dual_bounds=args.dual_bounds,
    )
    hits, stats = search(cfg)
    if args.json:
        for hit in hits:
            print(json.dumps(hit.to_json()))
        print(json.dumps(stats))
    else:
        for hit in hits:
            print(
                f"trial {hit.trial}: f0={hit.f0} f1={hit.f1} "
                f"bounds [{_enc(hit.lower)}, {_enc(hit.upper)}]"
            )
        print(f"{stats['hits']} hits / {stats['trials']} trials ({stats['rejections']} rejections)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--q", type=int, default=2, help="field order (prime; default 2)")
    shared.add_argument("--n", type=int, default=None, help="ring length n")
    shared.add_argument("--budget", type=int, default=default_budget(),
                        help="exhaustive enumeration budget (QCS_BUDGET overrides the default)")
    shared.add_argument("--work-budget", type=int, default=1 << 22,
                        help="per-component message budget for bound evaluation")
    shared.add_argument("--json", action="store_true", help="emit JSON lines")
    shared.add_argument("--seed", type=int, default=None, help="search seed")

    parser = argparse.ArgumentParser(
        prog="sympqc",
        description="Symplectic self-orthogonal quasi-cyclic codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[shared], help="expand abbreviated notation")
    p.add_argument("text")
    p.set_defaults(fn=_cmd_parse)

    p = sub.add_parser("check-sso", parents=[shared], help="self-orthogonality test")
    p.add_argument("--g")
    p.add_argument("--f0")
    p.add_argument("--f1")
    p.add_argument("--g1")
    p.add_argument("--g2")
    p.add_argument("--f")
    p.set_defaults(fn=_cmd_check_sso)

    p = sub.add_parser("bounds", parents=[shared], help="symplectic distance sandwich")
    p.add_argument("--g", required=True)
    p.add_argument("--f0", required=True)
    p.add_argument("--f1", required=True)
    p.add_argument("--dual", action="store_true", help="bound the symplectic dual instead")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("dual", parents=[shared], help="symplectic dual structure")
    p.add_argument("--g", required=True)
    p.add_argument("--f0", required=True)
    p.add_argument("--f1", required=True)
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("distance", parents=[shared], help="exhaustive symplectic distance")
    p.add_argument("--g", required=True)
    p.add_argument("--f0", required=True)
    p.add_argument("--f1", required=True)
    p.add_argument("--dual", action="store_true")
    p.set_defaults(fn=_cmd_distance)

    p = sub.add_parser("qecc", parents=[shared], help="quantum code parameters")
    p.add_argument("--g", required=True)
    p.add_argument("--f0", required=True)
    p.add_argument("--f1", required=True)
    p.add_argument("--claim", help="claimed n,k,d to compare against")
    p.set_defaults(fn=_cmd_qecc)

    p = sub.add_parser("verify-catalog", parents=[shared], help="re-verify packaged constructions")
    p.add_argument("--bounds", action="store_true", help="also evaluate dual sandwiches and claims")
    p.add_argument("--exact", action="store_true", help="also compute in-budget exact distances")
    p.add_argument("--only", action="append", help="restrict to an entry id (repeatable)")
    p.set_defaults(fn=_cmd_verify_catalog)

    p = sub.add_parser("search", parents=[shared], help="seeded random construction search")
    p.add_argument("--g", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--min-lower", type=int, default=None)
    p.add_argument("--exact-budget", type=int, default=None)
    p.add_argument("--dual-bounds", action="store_true")
    p.add_argument("--keep-non-sso", action="store_true")
    p.set_defaults(fn=_cmd_search)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.fn(args)
    except (CliInputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (StructureError, HypothesisError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
