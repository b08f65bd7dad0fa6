"""Quantum-parameter mapping, propagation rules, claim comparison."""

import itertools

import numpy as np
import pytest

from sympqc.gfpoly import GF2, PlainPoly, RingElement, StructureError
from sympqc.qcsym import QcOneGen, generator_matrix, symplectic_dual
from sympqc.qecc import QeccParams, claim_check, crss_map, propagate, propagate_closure

from conftest import poly


class TestCrssMap:
    def test_worked_example(self, ex4_code):
        params = crss_map(ex4_code)
        assert params.triple() == (15, 4, 4)
        assert params.exact
        assert params.pure is True
        assert params.provenance == "constructed"

    def test_dimension_identity(self, ex4_code, ex2_code):
        params = crss_map(ex4_code)
        assert params.k == ex4_code.n - ex4_code.dim
        # the n=21 construction is not self-orthogonal: error contract
        with pytest.raises(StructureError):
            crss_map(ex2_code)

    def test_budget_interval_path(self, ex1_code):
        params = crss_map(ex1_code)  # dual has dimension 45
        assert (params.n, params.k) == (40, 5)
        assert not params.exact
        assert params.pure is None
        assert params.d_lower <= 10 <= params.d_upper

    def test_purity_against_direct_enumeration(self, ex4_code):
        from sympqc.qcsym import symplectic_distance_exhaustive

        params = crss_map(ex4_code)
        dual = symplectic_dual(ex4_code)
        full = symplectic_distance_exhaustive(dual.basis, 2).value
        if params.pure:
            assert params.d_lower == full
        else:
            assert params.d_lower > full

    def test_self_dual_convention(self):
        # the diagonal {(a, a)} with g = 1 is maximal isotropic: k = 0 and the
        # distance is the stabilizer's own minimum weight
        n = 5
        one = RingElement.one(GF2, n)
        code = QcOneGen.build(GF2, n, PlainPoly.one(GF2), [one, one])
        params = crss_map(code)
        assert params.triple() == (5, 0, 1)
        assert params.pure is True

    def test_outside_minimum_by_brute_force(self):
        # small self-orthogonal code: verify d over dual-minus-code words
        n = 5
        one = RingElement.one(GF2, n)
        g = poly(GF2, {1, 0})
        code = QcOneGen.build(GF2, n, g, [one, one])
        params = crss_map(code)
        dual = symplectic_dual(code)
        primal_words = set()
        rows = generator_matrix(code, reduced=True)
        for msg in itertools.product((0, 1), repeat=rows.shape[0]):
            word = np.zeros(2 * n, np.int64)
            for c, row in zip(msg, rows):
                if c:
                    word ^= row
            primal_words.add(tuple(word % 2))
        best = None
        for msg in itertools.product((0, 1), repeat=dual.basis.shape[0]):
            word = np.zeros(2 * n, np.int64)
            for c, row in zip(msg, dual.basis):
                if c:
                    word ^= row
            word = word % 2
            if tuple(word) in primal_words:
                continue
            w = int(((word[:n] != 0) | (word[n:] != 0)).sum())
            best = w if best is None else min(best, w)
        assert params.d_lower == best
        assert params.k == n - code.dim


class TestPropagation:
    def test_three_rules(self):
        start = QeccParams.known(40, 5, 10)
        children = {p.triple() for p in propagate(start)}
        assert children == {(40, 4, 10), (41, 5, 10), (39, 6, 9)}
        for child in propagate(start):
            assert child.parent == (40, 5, 10)
            assert child.provenance.startswith("propagated:")

    def test_zero_logical_suppresses_lengthening(self):
        start = QeccParams.known(5, 0, 2)
        children = {p.triple() for p in propagate(start)}
        assert (6, 0, 2) not in children
        assert (4, 1, 1) in children

    def test_length_one_suppresses_shortening(self):
        start = QeccParams.known(1, 1, 1)
        children = {p.triple() for p in propagate(start)}
        assert children == {(1, 0, 1), (2, 1, 1)}

    def test_distance_one_suppresses_shortening(self):
        start = QeccParams.known(4, 2, 1)
        assert (3, 3, 0) not in {p.triple() for p in propagate(start)}

    def test_closure_reaches_known_family(self):
        closure = propagate_closure([QeccParams.known(40, 5, 10)], depth=6)
        for member in [(41, 5, 10), (42, 5, 10), (39, 6, 9), (40, 6, 9), (41, 6, 9)]:
            assert member in closure
        # provenance chains terminate at the start
        node = closure[(41, 6, 9)]
        hops = 0
        while node.parent is not None:
            node = closure[node.parent]
            hops += 1
        assert node.triple() == (40, 5, 10) and hops >= 2

    def test_inexact_rejected(self):
        bounded = QeccParams(40, 5, 8, 10, False, None, "constructed")
        with pytest.raises(StructureError):
            propagate(bounded)


class TestClaimCheck:
    def test_matches(self):
        assert claim_check(QeccParams.known(15, 4, 4), (15, 4, 4)) == "matches"

    def test_exceeds_and_below(self):
        assert claim_check(QeccParams.known(15, 4, 5), (15, 4, 4)) == "exceeds"
        assert claim_check(QeccParams.known(15, 4, 4), (15, 4, 99)) == "below"

    def test_interval_containment(self):
        bounded = QeccParams(40, 5, 8, 10, False, None, "constructed")
        assert claim_check(bounded, (40, 5, 10)) == "untestable-at-budget"
        assert claim_check(bounded, (40, 5, 11)) == "below"
        assert claim_check(bounded, (40, 5, 7)) == "exceeds"

    def test_shape_mismatch(self):
        assert claim_check(QeccParams.known(15, 4, 4), (15, 5, 4)) == "below"
