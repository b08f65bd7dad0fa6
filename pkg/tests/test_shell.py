"""Abbreviated notation, catalog loading/verification, randomized search."""

import random

import pytest

from sympqc.gfpoly import GF2, PlainPoly
from sympqc.notation import ParseError, emit_abbrev, parse_abbrev
from sympqc.shell import (
    CatalogEntry,
    CatalogError,
    SearchConfig,
    _validate_entry,
    search,
    verify_catalog,
)

from conftest import poly


class TestParseAbbrev:
    def test_published_example(self):
        assert parse_abbrev("101^3", 2) == [1, 0, 1, 1, 1]

    def test_braced_runs(self):
        coeffs = parse_abbrev("1^{2}0^{2}1^2", 2)
        assert coeffs == [1, 1, 0, 0, 1, 1]
        assert PlainPoly.from_coeffs(GF2, coeffs) == poly(GF2, {5, 4, 1, 0})

    def test_single_digit(self):
        assert parse_abbrev("1", 2) == [1]

    def test_larger_field_digits(self):
        assert parse_abbrev("2^{3}01", 3) == [2, 2, 2, 0, 1]

    def test_digit_out_of_range(self):
        with pytest.raises(ParseError):
            parse_abbrev("12", 2)

    def test_malformed(self):
        for bad in ["", "^3", "1^", "1^{}", "1^{2", "x", "1^0"]:
            with pytest.raises(ParseError):
                parse_abbrev(bad, 2)

    def test_emit_canonical(self):
        assert emit_abbrev([1, 0, 1, 1, 1]) == "101^{3}"
        assert emit_abbrev([1]) == "1"
        assert emit_abbrev([]) == ""

    def test_round_trip_fuzz(self):
        rng = random.Random(31)
        for _ in range(10_000):
            p = rng.choice([2, 3, 5, 7])
            vec = [rng.randrange(p) for _ in range(rng.randint(1, 60))]
            text = emit_abbrev(vec)
            assert parse_abbrev(text, p) == vec
            assert emit_abbrev(parse_abbrev(text, p)) == text

    def test_noncanonical_text_canonicalizes(self):
        # unbraced exponents and split runs parse to the same vector, and
        # re-emission is idempotent
        rng = random.Random(32)
        for _ in range(2000):
            p = rng.choice([2, 3, 5])
            vec = [rng.randrange(p) for _ in range(rng.randint(1, 30))]
            pieces = []
            for v in vec:
                style = rng.randrange(3)
                if style == 0:
                    pieces.append(str(v))
                elif style == 1:
                    pieces.append(f"{v}^1")
                else:
                    pieces.append(f"{v}^{{1}}")
            text = "".join(pieces)
            assert parse_abbrev(text, p) == vec
            canonical = emit_abbrev(vec)
            assert emit_abbrev(parse_abbrev(canonical, p)) == canonical


class TestCatalog:
    def test_counts(self, catalog):
        assert len(catalog.one_generator) == 24
        assert len(catalog.two_generator) == 5
        assert len(catalog.claims) == 117

    def test_two_generator_row_dimensions(self, catalog):
        entry = catalog.entry("tg-01")
        assert entry.claimed_code == (80, 34)
        assert entry.two_gen_code().dim() == 34

    def test_claim_markers(self, catalog):
        anchored = [c for c in catalog.claims if c.source != "derived"]
        assert len(anchored) == 29
        assert {c.source for c in anchored} == {e.id for e in catalog.constructions}

    def test_corrupt_entry_rejected(self):
        bad = CatalogEntry(
            "bad-01", 2, 8, 2, "one-generator",
            {"g": "1^{2}1", "f0": "1", "f1": "1"},  # 1 + x + x^2 does not divide x^8-1
            (16, 5), (16, 11, 2), (8, 3, 2),
        )
        with pytest.raises(CatalogError):
            _validate_entry(bad)

    def test_verify_fast_path(self, catalog):
        report = verify_catalog(catalog=catalog)
        assert report["ok"]
        assert report["propagation_ok"]
        assert len(report["entries"]) == 29
        assert all(e["sso"] and e["dim_ok"] for e in report["entries"])

    def test_verify_idempotent_at_fixed_budget(self, catalog):
        a = verify_catalog(budget=1 << 20, with_bounds=True, only=["og-05", "tg-02"], catalog=catalog)
        b = verify_catalog(budget=1 << 20, with_bounds=True, only=["og-05", "tg-02"], catalog=catalog)
        assert a == b

    def test_budget_env_override(self, monkeypatch):
        from sympqc.config import default_budget

        monkeypatch.setenv("QCS_BUDGET", "65536")
        assert default_budget() == 65536
        monkeypatch.setenv("QCS_BUDGET", "0x100")
        assert default_budget() == 256
        monkeypatch.setenv("QCS_BUDGET", "three")
        with pytest.raises(ValueError):
            default_budget()
        monkeypatch.delenv("QCS_BUDGET")
        assert default_budget() == 1 << 28

    def test_verify_single_entry_with_bounds(self, catalog):
        report = verify_catalog(with_bounds=True, only=["og-01"], catalog=catalog)
        [entry] = report["entries"]
        assert entry["dual_distance_verdict"] == "untestable-at-budget"
        assert entry["qecc_claim_verdict"] == "untestable-at-budget"
        lo, hi = entry["dual_bounds"]["lower"], entry["dual_bounds"]["upper"]
        assert lo <= 10 <= hi

    def test_verify_entry_outside_dual_hypothesis(self, catalog):
        report = verify_catalog(with_bounds=True, only=["og-22"], catalog=catalog)
        [entry] = report["entries"]
        assert entry["ok"]
        assert entry["dual_bounds"] is None
        assert entry["qecc_claim_verdict"] == "hypothesis-not-applicable"


class TestSearch:
    def _config(self, trials, **kw):
        return SearchConfig(q=2, n=15, g=poly(GF2, {4, 1, 0}), trials=trials, seed=20240515, **kw)

    def test_deterministic(self):
        hits1, stats1 = search(self._config(400))
        hits2, stats2 = search(self._config(400))
        assert [h.to_json() for h in hits1] == [h.to_json() for h in hits2]
        assert stats1 == stats2
        assert stats1["hits"] == len(hits1)

    def test_hits_are_verified_and_nonempty(self):
        # 10^5 trials over n = 15 with g = x^4 + x + 1; every emitted hit
        # must survive the independent all-pairs Gram oracle
        hits, stats = search(self._config(100_000))
        assert stats["trials"] == 100_000
        assert stats["hits"] > 0
        assert all(h.gram_verified for h in hits)

    def test_unsatisfiable_filter_returns_empty(self):
        hits, stats = search(self._config(200, min_lower=2 * 15 + 1))
        assert hits == []
        assert stats["hits"] == 0

    def test_exact_distance_confirms_bounds(self):
        hits, _ = search(self._config(300, exact_budget=1 << 16))
        for h in hits:
            if h.exact_distance is not None:
                assert h.lower <= h.exact_distance <= (h.upper if h.upper != float("inf") else 2 * 15)

    def test_keep_non_sso_hits(self):
        hits, stats = search(self._config(150, require_sso=False))
        assert len(hits) == 150
        assert any(not h.sso for h in hits)
        assert any(h.sso for h in hits)
        assert stats["sso_pass"] == sum(1 for h in hits if h.sso)

    def test_invalid_config(self):
        from sympqc.gfpoly import StructureError

        with pytest.raises(StructureError):
            SearchConfig(q=2, n=15, g=poly(GF2, {1, 0}), trials=0, seed=1)
        with pytest.raises(StructureError):
            SearchConfig(q=2, n=15, g=poly(GF2, {2, 0}), trials=5, seed=1)
