"""Acceptance suite.  Each test covers one criterion and prints a single
PASS/FAIL line; criterion 4 is a stretch run behind the RUN_STRETCH
environment variable and reports SKIPPED when the budget refuses it."""

import os
import random
import sys
from math import comb

import pytest

from dpideals.gensets import (
    algorithm_g,
    column_elimination,
    count_table,
    family_set,
    first_reduction,
    principal_reduction,
    tanisaki,
)
from dpideals.partition import (
    Partition,
    partitions_of,
    top_cells,
    weyman_cardinalities,
)
from dpideals.polyring import Polynomial, e_poly, h_poly
from dpideals.verify import (
    BudgetError,
    betti_counts,
    check_conjecture,
    counterexample_family_member,
    ideal_equal,
    membership,
    rank,
    scan,
    span_matrix,
)

P = Partition


def report(num, verdict, detail):
    line = f"CRITERION {num}: {verdict} - {detail}"
    print(line)
    sys.stderr.write(line + "\n")


def test_criterion_1_betti_4421():
    lam = P((4, 4, 2, 1))
    rep = betti_counts(tanisaki(lam), max_degree=7)
    expected = {1: 1, 2: 1, 3: 1, 4: 11, 5: 0, 6: 44, 7: 110}
    ok = rep.betas == expected and rep.total() == 168
    report(1, "PASS" if ok else "FAIL",
           f"(4,4,2,1) minimal counts {rep.betas}, total {rep.total()}")
    assert ok


def test_criterion_2_algorithm_541():
    lam = P((5, 4, 1))
    state = algorithm_g(lam)
    assert state.status == "completed"
    # The reduced set is e_1, e_2, the cubes and the squared pair products.
    assert state.G.counts_by_degree() == {1: 1, 2: 1, 3: 10, 4: 45}

    eq = ideal_equal(state.G, principal_reduction(lam))
    assert eq.equal, eq.failures[:3]

    # The eliminated column-3 and column-4 generators remain members.
    m5 = membership(e_poly(5, tuple(range(1, 8))), state.G)
    m6 = membership(e_poly(6, tuple(range(1, 7))), state.G)
    assert m5 and m6

    verdict = check_conjecture(lam)
    ok = verdict.counterexample and sorted(verdict.flagged) == [(3, 5), (4, 6)]
    report(2, "PASS" if ok else "FAIL",
           f"(5,4,1) algorithm == principal ({eq.checked} memberships), "
           f"flagged cells {sorted(verdict.flagged)}")
    assert ok


def test_criterion_3_betti_5511():
    lam = P((5, 5, 1, 1))
    rep = betti_counts(tanisaki(lam), max_degree=7)
    expected = {1: 1, 2: 1, 3: 1, 4: 12, 5: 54, 6: 154, 7: 0}
    ok = rep.betas == expected
    report(3, "PASS" if ok else "FAIL", f"(5,5,1,1) minimal counts {rep.betas}")
    assert ok


@pytest.mark.skipif(
    not os.environ.get("RUN_STRETCH"),
    reason="stretch run; set RUN_STRETCH=1 to attempt it",
)
def test_criterion_4_betti_651011_stretch():
    lam = P((6, 5, 1, 1, 1))
    try:
        rep = betti_counts(tanisaki(lam), max_degree=9)
    except BudgetError as exc:
        report(4, "SKIPPED", f"budget refusal: {exc}")
        pytest.skip(f"budget refusal: {exc}")
    expected = {1: 1, 2: 1, 3: 1, 4: 1, 5: 14, 6: 77, 7: 273, 8: 637, 9: 0}
    ok = rep.betas == expected
    report(4, "PASS" if ok else "FAIL", f"(6,5,1,1,1) minimal counts {rep.betas}")
    assert ok


def test_criterion_5_counting():
    ct = count_table(P((5, 4, 4, 3)))
    assert ct["principal_total"] == 2519
    assert ct["family_eliminated_total"] == 1384
    assert len(column_elimination(P((4, 4, 2, 1)))) == 177

    # Closed forms for every partition of every n <= 30, integers only.
    for n in range(1, 31):
        for lam in partitions_of(n):
            tc = top_cells(lam)
            ct = count_table(lam)
            for k in range(1, tc.t + 1):
                assert ct["principal"][k] == comb(n, k)
                assert ct["eliminated"][k] == (n if k == 1 else comb(n - 1, k) - 1)
            if tc.b_s is not None and tc.s >= 1:
                dropped = comb(n - tc.s + tc.t, tc.t) if tc.t >= 1 else 0
                assert ct["eliminated"][tc.s] == comb(n, tc.s) - dropped
            for cell in ct["cells"]:
                i = cell["column"]
                below = comb(n, i - 1) if i >= 1 else 0
                assert cell["V"] == comb(n, i) ** 2
                assert cell["V_tilde"] == comb(n, i)
                assert cell["U"] == comb(n, i) ** 2 - below ** 2
                assert cell["U_tilde"] == comb(n, i) - below
    report(5, "PASS",
           "(5,4,4,3) totals 2519/1384, (4,4,2,1) eliminated total 177, "
           "closed forms verified for all partitions with n <= 30")


def _random_subset_instance(rng):
    n = rng.randint(3, 10)
    S = rng.sample(range(1, 21), n)
    j = rng.randint(1, n - 1)
    return S, j


def test_criterion_6_property_suite():
    # (a) >= 1000 randomized instances of the partial-elementary identities.
    rng = random.Random(20260826)
    instances = 0
    for _ in range(300):
        S, j = _random_subset_instance(rng)
        y = rng.choice(S)
        Sx = [v for v in S if v != y]
        assert e_poly(j, S) == e_poly(j, Sx) + Polynomial.variable(y) * e_poly(j - 1, Sx)
        lhs = sum((e_poly(j, [v for v in S if v != z]) for z in S), Polynomial.zero())
        assert lhs == e_poly(j, S) * (len(S) - j)
        lhs = sum(
            (Polynomial.variable(z) * e_poly(j - 1, [v for v in S if v != z]) for z in S),
            Polynomial.zero(),
        )
        assert lhs == e_poly(j, S) * j
        usize = rng.randint(1, len(S) - 1)
        U = S[:usize]
        i = rng.randint(1, len(S) - usize)
        rhs = sum(
            (e_poly(k, S) * h_poly(i - k, U) * ((-1) ** (i - k)) for k in range(i + 1)),
            Polynomial.zero(),
        )
        assert e_poly(i, S[usize:]) == rhs
        instances += 4

    # (b) ideal equality of every builder against the classical set, all
    # partitions of every n <= 8.
    equal_checks = 0
    for n in range(2, 9):
        for lam in partitions_of(n):
            base = tanisaki(lam)
            others = [first_reduction(lam), principal_reduction(lam),
                      column_elimination(lam)]
            fam = family_set(lam)
            if fam is not None:
                others.append(fam)
            state = algorithm_g(lam)
            if state.status == "completed":
                others.append(state.G)
            for gs in others:
                eq = ideal_equal(base, gs)
                assert eq.equal, (lam, gs.builder, eq.failures[:3])
                equal_checks += 1

    # (c) minimal counts do not depend on the builder, n <= 7.
    for n in range(2, 8):
        for lam in partitions_of(n):
            ref = betti_counts(tanisaki(lam), max_degree=n).betas
            for builder in (first_reduction, principal_reduction, column_elimination):
                assert betti_counts(builder(lam), max_degree=n).betas == ref

    # (d) exact and modular ranks agree, n <= 6.
    for n in range(2, 7):
        for lam in partitions_of(n):
            gs = tanisaki(lam)
            for d in range(1, n + 1):
                M = span_matrix(gs, d)
                assert rank(M, "exact") == rank(M, "modular")

    report(6, "PASS",
           f"{instances} randomized identity instances, {equal_checks} ideal "
           "equalities (n <= 8), builder-independent counts (n <= 7), "
           "rank agreement (n <= 6), zero failures")


def test_criterion_7_scan_9():
    flagged = {v.partition for v in scan(9) if v.counterexample}
    family = {lam for lam in partitions_of(9) if counterexample_family_member(lam)}
    ok = flagged == family == {P((4, 4, 1))}
    report(7, "PASS" if ok else "FAIL",
           f"scan(9) flagged {sorted(p.parts for p in flagged)}, family set "
           f"{sorted(p.parts for p in family)}")
    assert ok
