"""Graded verification: span matrices, ranks, minimal generator counts,
membership with certificates, ideal equality, budgets, and the redundancy
scan.  Exact linear algebra over the rationals is the authority; the modular
engine must agree with it on everything small enough to cross-check."""

import itertools
from fractions import Fraction
from math import comb

import pytest

from dpideals.gensets import (
    GeneratorSet,
    LabeledGenerator,
    column_elimination,
    family_set,
    first_reduction,
    principal_reduction,
    tanisaki,
)
from dpideals.linalg import ModularEchelon, SparseRowEchelon, choose_primes
from dpideals.partition import Partition, partitions_of
from dpideals.polyring import Polynomial, e_poly, h_poly, power_poly
from dpideals.verify import (
    BudgetError,
    betti_counts,
    check_conjecture,
    counterexample_family_member,
    ideal_contains,
    ideal_equal,
    membership,
    rank,
    scan,
    span_matrix,
)

P = Partition


def custom_set(n, polys):
    """A GeneratorSet over n variables from bare polynomials."""
    gens = [
        LabeledGenerator(p, p.degree(), 0, f"g{i}")
        for i, p in enumerate(polys)
    ]
    return GeneratorSet(P((1,) * n), "custom", gens)


def dense_rank(rows, ncols):
    """Test-local oracle: dense Gaussian elimination over Fraction."""
    mat = []
    for row in rows:
        r = [Fraction(0)] * ncols
        for c, v in row:
            r[c] = Fraction(v)
        mat.append(r)
    rk = 0
    for col in range(ncols):
        piv = next((i for i in range(rk, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        lead = mat[rk][col]
        for i in range(len(mat)):
            if i != rk and mat[i][col]:
                f = mat[i][col] / lead
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rk])]
        rk += 1
    return rk


class TestSpanMatrix:
    def test_maximal_ideal_fills_degree_two(self):
        for n in (2, 3, 4):
            gs = custom_set(n, [Polynomial.variable(v) for v in range(1, n + 1)])
            M = span_matrix(gs, 2)
            assert M.ncols == comb(n + 1, 2)
            assert rank(M, "exact") == comb(n + 1, 2)

    def test_symmetric_ideal_degree_three(self):
        # (e_1, e_2, e_3) in three variables: the quotient is the
        # coinvariant algebra with Hilbert series 1 + 2t + 2t^2 + t^3.
        full = (1, 2, 3)
        gs = custom_set(3, [e_poly(r, full) for r in (1, 2, 3)])
        M = span_matrix(gs, 3)
        assert M.ncols == comb(5, 2)
        assert rank(M, "exact") == comb(5, 2) - 1 == 9

    def test_empty_set(self):
        gs = GeneratorSet(P((1, 1)), "custom", [])
        M = span_matrix(gs, 2)
        assert rank(M, "exact") == 0 and M.rows == []

    def test_column_cap(self):
        gs = custom_set(4, [Polynomial.variable(1)])
        with pytest.raises(BudgetError):
            span_matrix(gs, 3, column_cap=5)


class TestRankEngines:
    def test_engines_agree_with_dense_oracle(self):
        for n in range(2, 6):
            for lam in partitions_of(n):
                gs = tanisaki(lam)
                for d in range(1, min(n, 4) + 1):
                    M = span_matrix(gs, d)
                    r_exact = rank(M, "exact")
                    assert r_exact == dense_rank(M.rows, M.ncols)
                    assert r_exact == rank(M, "modular")
                    assert r_exact == rank(M, "modular", seed=7)

    def test_modular_primes_are_distinct_and_deterministic(self):
        ps = choose_primes(4, 0)
        assert len(set(ps)) == 4
        assert ps == choose_primes(4, 0)
        assert ps != choose_primes(4, 1)

    def test_modular_echelon_detects_char_p_rank_drop(self):
        # The 1x1 matrix (p) has rank 0 mod p but rank 1 exactly.
        p = choose_primes(1, 0)[0]
        me = ModularEchelon(1, p)
        me.add_sparse_rows([[(0, p)]])
        assert me.rank == 0
        ech = SparseRowEchelon()
        ech.add({0: p})
        assert ech.rank == 1


class TestInclusionMatrices:
    """Rank facts behind the per-column subset elimination: the inclusion
    matrix of k-subsets versus (k+1)-subsets of {1,..,4} has full row rank
    already on the rows kept by the elimination."""

    def _inclusion_rows(self, rows, cols):
        out = []
        for I in rows:
            out.append({j: 1 for j, J in enumerate(cols) if set(I) <= set(J)})
        return out

    def test_singletons_versus_pairs(self):
        rows = [(2,), (3,), (4,), (1,)]
        cols = list(itertools.combinations(range(1, 5), 2))
        ech = SparseRowEchelon()
        for r in self._inclusion_rows(rows, cols):
            ech.add(dict(r))
        assert ech.rank == 4

    def test_pairs_versus_triples(self):
        rows = [(2, 3), (2, 4), (3, 4), (1, 2), (1, 3), (1, 4)]
        cols = list(itertools.combinations(range(1, 5), 3))
        ech = SparseRowEchelon()
        kept = rows[:4]  # the elimination keeps exactly these
        for r in self._inclusion_rows(kept, cols):
            ech.add(dict(r))
        assert ech.rank == 4
        for r in self._inclusion_rows(rows[4:], cols):
            ech.add(dict(r))
        assert ech.rank == 4  # the dropped rows add nothing


class TestMembership:
    def test_partial_elementary_identity(self):
        # e_2 on a subset: e_2(S\U) - h_2(U) = e_2(S) - e_1(S) h_1(U)
        # lies in the ideal (e_1(S), e_2(S)).
        S = (1, 2, 3, 4, 5, 6)
        U = (5, 6)
        gs = custom_set(6, [e_poly(1, S), e_poly(2, S)])
        f = e_poly(2, (1, 2, 3, 4)) - h_poly(2, U)
        assert membership(f, gs, engine="exact")
        assert membership(f, gs, engine="modular")
        assert not membership(h_poly(2, U), gs, engine="exact")

    def test_certificate_reconstructs(self):
        S = (1, 2, 3, 4)
        gs = custom_set(4, [e_poly(1, S), e_poly(2, S)])
        f = e_poly(2, (1, 2, 3)) - h_poly(2, (4,))
        res = membership(f, gs, certificate=True)
        assert res and res.certificate is not None
        by_label = {g.label(): g.poly for g in gs}
        total = Polynomial.zero()
        for label, mult, coeff in res.certificate:
            total = total + by_label[label] * Polynomial.from_monomial(mult, coeff)
        assert total == f

    def test_non_member_has_no_certificate(self):
        gs = custom_set(3, [e_poly(1, (1, 2, 3))])
        res = membership(Polynomial.variable(1) * Polynomial.variable(2), gs,
                         certificate=True)
        assert not res and res.certificate is None

    def test_inhomogeneous_rejected(self):
        gs = custom_set(2, [e_poly(1, (1, 2))])
        with pytest.raises(ValueError):
            membership(Polynomial.variable(1) + Polynomial.parse("x1^2"), gs)

    def test_eliminated_generators_still_members(self):
        # Generators dropped by the subset elimination stay in the ideal.
        for lam in (P((3, 2)), P((4, 2)), P((3, 2, 1))):
            small = column_elimination(lam)
            have = {frozenset(g.poly.terms.items()) for g in small}
            dropped = [
                (g.label(), g.poly)
                for g in principal_reduction(lam)
                if frozenset(g.poly.terms.items()) not in have
            ]
            assert dropped  # the elimination really removed something
            failures, checked = ideal_contains(small, dropped)
            assert failures == [] and checked == len(dropped)


class TestIdealEqual:
    def test_unequal_sets_detected(self):
        lam = P((2, 1))
        rep = ideal_equal(tanisaki(lam), custom_set(3, [e_poly(1, (1, 2, 3))]))
        assert not rep.equal and rep.failures

    def test_equal_sets_report(self):
        lam = P((3, 2))
        rep = ideal_equal(tanisaki(lam), column_elimination(lam))
        assert rep.equal and not rep.failures and rep.checked > 0

    def test_identical_sets_short_circuit(self):
        gs = tanisaki(P((2, 2)))
        rep = ideal_equal(gs, gs)
        assert rep.equal and rep.checked == 0


class TestBettiCounts:
    def test_single_column(self):
        rep = betti_counts(tanisaki(P((1, 1, 1))), engine="exact")
        assert rep.betas == {1: 1, 2: 1, 3: 1}

    def test_hook(self):
        rep = betti_counts(tanisaki(P((2, 1))), engine="exact")
        assert rep.betas == {1: 1, 2: 3, 3: 0}

    def test_two_row(self):
        rep = betti_counts(tanisaki(P((3, 2))), max_degree=3, engine="exact")
        assert rep.betas == {1: 1, 2: 5, 3: 0}

    def test_builder_invariance_small(self):
        for n in range(2, 6):
            for lam in partitions_of(n):
                ref = betti_counts(tanisaki(lam), max_degree=n).betas
                for builder in (first_reduction, principal_reduction,
                                column_elimination):
                    got = betti_counts(builder(lam), max_degree=n).betas
                    assert got == ref, (lam, builder.__name__)
                fam = family_set(lam)
                if fam is not None:
                    got = betti_counts(fam, max_degree=n).betas
                    assert got == ref, (lam, "family")

    def test_exact_matches_modular(self):
        for lam in (P((2, 2)), P((3, 1)), P((2, 2, 1)), P((3, 2))):
            gs = tanisaki(lam)
            ex = betti_counts(gs, engine="exact")
            mo = betti_counts(gs, engine="modular")
            assert ex.betas == mo.betas

    def test_degrees_selection_and_report_fields(self):
        rep = betti_counts(tanisaki(P((2, 2))), degrees=[2, 3])
        assert set(rep.betas) == {2, 3}
        js = rep.to_json()
        assert js["schema_version"] == 1
        assert js["partition"] == [2, 2]
        assert js["primes"] and js["seed"] == 0

    def test_budget_skip_and_raise(self):
        gs = tanisaki(P((3, 3)))
        with pytest.raises(BudgetError):
            betti_counts(gs, max_degree=4, column_cap=3)
        rep = betti_counts(gs, max_degree=3, column_cap=10, on_budget="skip")
        assert rep.skipped and all(d >= 2 for d in rep.skipped)

    def test_seed_does_not_change_counts(self):
        gs = tanisaki(P((3, 2)))
        a = betti_counts(gs, seed=0).betas
        b = betti_counts(gs, seed=12345).betas
        assert a == b


class TestConjectureScan:
    def test_small_shapes_not_flagged(self):
        for lam in (P((2, 2)), P((3, 1)), P((4,)), P((2, 1, 1))):
            v = check_conjecture(lam)
            assert not v.counterexample, lam

    def test_431_is_flagged(self):
        v = check_conjecture(P((4, 3, 1)))
        assert v.counterexample and v.flagged
        for (_, p) in v.flagged:
            assert v.actual[p] < v.conjectured[p]

    def test_scan_matches_family_small(self):
        for n in range(2, 8):
            flagged = {v.partition for v in scan(n) if v.counterexample}
            fam = {lam for lam in partitions_of(n)
                   if counterexample_family_member(lam)}
            assert flagged == fam == set()

    def test_family_enumeration(self):
        expected = {
            4: set(), 5: set(), 6: set(), 7: set(),
            8: {(4, 3, 1)},
            9: {(4, 4, 1)},
            10: {(5, 4, 1)},
            11: {(6, 4, 1), (5, 5, 1), (5, 4, 1, 1), (4, 3, 3, 1)},
            12: {(7, 4, 1), (6, 5, 1), (5, 5, 1, 1), (4, 4, 3, 1)},
        }
        for n, want in expected.items():
            got = {lam.parts for lam in partitions_of(n)
                   if counterexample_family_member(lam)}
            assert got == want, n
