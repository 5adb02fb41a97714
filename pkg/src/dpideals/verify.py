"""Graded verification: ranks, minimal generator counts, ideal equality and
the redundancy scan for the diagonal conjecture.

Everything is linear algebra on graded pieces.  For a homogeneous ideal I
with generating set G, the number of minimal generators in degree d is

    beta_d = dim I_d - dim (R_+ I)_d

which is independent of the presentation; (R_+ I)_d is spanned by m*g over
generators g of degree < d and monomials m of degree d - deg g, and I_d
additionally by the degree-d generators themselves.

Two exact reductions keep the matrices small:

  * if the degree-one piece of the ideal contains e_1 = x_1 + ... + x_n,
    then e_1*R_{d-1} sits inside (R_+ I)_d for d >= 2, so both ranks can be
    computed after substituting x_n -> -(x_1 + ... + x_{n-1}); the rank
    difference is unchanged and the ambient dimension drops to n-1 vars;
  * a generator that is a single monomial of degree < d puts every multiple
    of that monomial inside (R_+ I)_d, so the corresponding coordinates can
    be deleted from every row ("capped" columns) without changing either
    rank difference.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .gensets import GeneratorSet, tanisaki
from .linalg import ModularEchelon, SparseRowEchelon, choose_primes
from .partition import Partition, conjectured_cells, partitions_of
from .polyring import (
    Polynomial,
    mono_divides,
    mono_mul,
    monomials_of_degree,
)

DEFAULT_COLUMN_CAP = 600_000
DEFAULT_MEMORY_CAP = 3_200_000_000  # bytes for the dense reduced matrix
SCHEMA_VERSION = 1


class BudgetError(Exception):
    """A graded piece is too large for the configured budget."""

    def __init__(self, nvars, degree, ncols, reason):
        self.nvars = nvars
        self.degree = degree
        self.ncols = ncols
        self.reason = reason
        super().__init__(
            f"degree {degree} piece in {nvars} variables has {ncols} columns: {reason}"
        )


# ---------------------------------------------------------------------------
# Preparation: substitution and caps


def _e1_polynomial(nvars: int) -> Polynomial:
    out = Polynomial()
    for v in range(1, nvars + 1):
        out = out + Polynomial.variable(v)
    return out


def e1_in_degree_one(polys, n: int) -> bool:
    """Is e_1(n) in the span of the degree-one members of polys?"""
    ech = SparseRowEchelon()
    for p in polys:
        if p and p.degree() == 1:
            ech.add({m[0][0]: c for m, c in p.terms.items()})
    return ech.contains({v: 1 for v in range(1, n + 1)})


def substitute_last(p: Polynomial, n: int) -> Polynomial:
    """x_n -> -(x_1 + ... + x_{n-1})."""
    repl = Polynomial()
    for v in range(1, n):
        repl = repl - Polynomial.variable(v)
    if n not in p.variables():
        return p
    return p.substitute({n: repl})


@dataclass
class PreparedSet:
    """A generator set readied for graded linear algebra.  Substitution is
    deferred until a generator's terms are first needed, so degree budgets
    can be checked before any expensive expansion."""

    n: int
    nvars: int
    use_subst: bool
    raw: list  # (degree, Polynomial) per generator
    cap_monos: list  # (degree, monomial) from single-term generators
    labels: list  # label strings aligned with raw
    _cache: dict = field(default_factory=dict, repr=False)

    def entries(self, max_degree=None):
        """Yield (degree, terms) for nonzero (substituted) generators."""
        for i, (deg, poly) in enumerate(self.raw):
            if max_degree is not None and deg > max_degree:
                continue
            if i not in self._cache:
                q = substitute_last(poly, self.n) if self.use_subst else poly
                self._cache[i] = q.terms if q else None
            t = self._cache[i]
            if t is not None:
                yield deg, t


def prepare(gs: GeneratorSet, use_subst: bool | None = None) -> PreparedSet:
    n = gs.partition.n
    if use_subst is None:
        use_subst = n >= 2 and e1_in_degree_one(gs.polys(), n)
    nvars = n - 1 if use_subst else n
    raw, caps, labels = [], [], []
    for g in gs:
        raw.append((g.degree, g.poly))
        labels.append(g.label())
        # single-term generators that survive substitution unchanged cap
        # their multiples out of every graded piece
        if len(g.poly.terms) == 1:
            mono = next(iter(g.poly.terms))
            if not (use_subst and any(v == n for v, _ in mono)):
                caps.append((g.degree, mono))
    return PreparedSet(n, nvars, use_subst, raw, caps, labels)


class DegreeSpace:
    """Column index for the uncapped monomials of one degree."""

    def __init__(self, nvars, degree, cap_monos, column_cap, memory_cap):
        self.nvars = nvars
        self.degree = degree
        caps = [m for (dg, m) in cap_monos if dg <= degree]
        kept = []
        for mono in monomials_of_degree(nvars, degree):
            if any(mono_divides(c, mono) for c in caps):
                continue
            kept.append(mono)
        self.monomials = kept
        self.index = {m: i for i, m in enumerate(kept)}
        self.ncols = len(kept)
        if self.ncols > column_cap:
            raise BudgetError(nvars, degree, self.ncols, f"column cap {column_cap}")
        if self.ncols * self.ncols * 8 > memory_cap:
            raise BudgetError(
                nvars, degree, self.ncols, f"memory cap {memory_cap} bytes"
            )

    def row(self, terms: dict, mult) -> list:
        out = []
        for mono, coeff in terms.items():
            idx = self.index.get(mono_mul(mono, mult))
            if idx is not None:
                out.append((idx, coeff))
        return out


def _rows_for(prep: PreparedSet, space: DegreeSpace, min_mult: int, max_mult=None):
    """Yield rows m * g with min_mult <= deg m (<= max_mult)."""
    d = space.degree
    for deg_g, terms in prep.entries(d):
        md = d - deg_g
        if md < min_mult or (max_mult is not None and md > max_mult):
            continue
        for m in monomials_of_degree(space.nvars, md):
            row = space.row(terms, m)
            if row:
                yield row


# ---------------------------------------------------------------------------
# Plain degree-d span of an ideal, with row provenance.  No substitution and
# no column caps here: rows live in the full space of degree-d monomials, so
# ranks are directly comparable with an outside computation.


@dataclass
class SpanMatrix:
    n: int
    degree: int
    monomials: list  # column order
    rows: list  # list of list[(col, coeff)]
    provenance: list  # (generator label, multiplier monomial)

    @property
    def ncols(self) -> int:
        return len(self.monomials)

    def dense(self) -> list:
        out = []
        for row in self.rows:
            r = [0] * self.ncols
            for c, v in row:
                r[c] = v
            out.append(r)
        return out


def span_matrix(
    gs: GeneratorSet, d: int, column_cap: int = DEFAULT_COLUMN_CAP
) -> SpanMatrix:
    """Rows m*g over every generator of degree <= d; the row space is the
    degree-d piece of the ideal."""
    n = gs.partition.n
    monos = monomials_of_degree(n, d)
    if len(monos) > column_cap:
        raise BudgetError(n, d, len(monos), f"column cap {column_cap}")
    index = {m: i for i, m in enumerate(monos)}
    rows, prov = [], []
    for g in gs:
        if g.degree > d:
            continue
        for m in monomials_of_degree(n, d - g.degree):
            row = []
            for mono, coeff in g.poly.terms.items():
                row.append((index[mono_mul(mono, m)], coeff))
            rows.append(row)
            prov.append((g.label(), m))
    return SpanMatrix(n, d, monos, rows, prov)


def rank(
    M: SpanMatrix, mode: str = "exact", seed: int = 0, nprimes: int = 2
) -> int:
    """Rank of the span matrix.  Exact mode is authoritative; modular mode
    reduces modulo primes chosen from the seed and insists they agree."""
    if mode == "exact":
        ech = SparseRowEchelon()
        for row in M.rows:
            ech.add(dict(row))
        return ech.rank
    vals = []
    for p in choose_primes(nprimes, seed):
        me = ModularEchelon(M.ncols, p)
        me.add_sparse_rows(M.rows)
        vals.append(me.rank)
    if len(set(vals)) != 1:
        raise ArithmeticError(f"modular rank disagreement: {vals}")
    return vals[0]


# ---------------------------------------------------------------------------
# Minimal generator counts


@dataclass
class GradedReport:
    partition: Partition
    builder: str
    engine: str
    betas: dict  # degree -> minimal generator count
    dim_ideal: dict = field(default_factory=dict)  # degree -> dim I_d (reduced)
    dim_sub: dict = field(default_factory=dict)  # degree -> dim (R_+ I)_d (reduced)
    ncols: dict = field(default_factory=dict)
    primes: list = field(default_factory=list)
    seed: int = 0
    use_subst: bool = True
    seconds: float = 0.0
    skipped: dict = field(default_factory=dict)  # degree -> reason

    def total(self) -> int:
        return sum(self.betas.values())

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "partition": list(self.partition.parts),
            "builder": self.builder,
            "engine": self.engine,
            "primes": self.primes,
            "seed": self.seed,
            "use_subst": self.use_subst,
            "betas": {str(d): b for d, b in sorted(self.betas.items())},
            "dim_ideal": {str(d): v for d, v in sorted(self.dim_ideal.items())},
            "dim_sub": {str(d): v for d, v in sorted(self.dim_sub.items())},
            "ncols": {str(d): c for d, c in sorted(self.ncols.items())},
            "skipped": {str(d): r for d, r in sorted(self.skipped.items())},
            "total": self.total(),
        }

    def text(self) -> str:
        lines = [
            f"partition {self.partition}  builder {self.builder}  engine {self.engine}"
        ]
        lines.append("degree  minimal  dim_ideal  dim_sub")
        for d in sorted(self.betas):
            lines.append(
                f"{d:>6}  {self.betas[d]:>7}  {self.dim_ideal.get(d, 0):>9}  {self.dim_sub.get(d, 0):>7}"
            )
        for d in sorted(self.skipped):
            lines.append(f"{d:>6}  skipped: {self.skipped[d]}")
        lines.append(f" total  {self.total():>7}")
        return "\n".join(lines)


def _degree_one_rank(gensets: list[GeneratorSet], n: int) -> int:
    ech = SparseRowEchelon()
    for gs in gensets:
        for g in gs:
            if g.degree == 1:
                ech.add({m[0][0]: c for m, c in g.poly.terms.items()})
    return ech.rank


def betti_counts(
    gs: GeneratorSet,
    max_degree: int | None = None,
    degrees=None,
    supplement: GeneratorSet | None = None,
    engine: str = "modular",
    column_cap: int = DEFAULT_COLUMN_CAP,
    memory_cap: int = DEFAULT_MEMORY_CAP,
    seed: int = 0,
    nprimes: int = 2,
    on_budget: str = "raise",
) -> GradedReport:
    """Minimal-generator counts per degree.

    gs must generate the ideal; its generators provide the sub-ideal rows.
    supplement may add further known members of the same ideal whose
    degree-d elements join the degree-d piece (useful when gs has no
    generators in some degree and the count there must still be tested).
    on_budget: "raise" propagates BudgetError, "skip" records the degree as
    skipped in the report.
    """
    t0 = time.time()
    n = gs.partition.n
    if degrees is None:
        if max_degree is None:
            max_degree = max((g.degree for g in gs), default=0)
        degrees = list(range(1, max_degree + 1))
    prep = prepare(gs)
    prep_sup = None
    if supplement is not None:
        prep_sup = prepare(supplement, use_subst=prep.use_subst)
    primes = choose_primes(nprimes, seed) if engine == "modular" else []
    report = GradedReport(
        partition=gs.partition,
        builder=gs.builder if supplement is None else f"{gs.builder}+{supplement.builder}",
        engine=engine,
        betas={},
        primes=primes,
        seed=seed,
        use_subst=prep.use_subst,
    )
    for d in sorted(set(degrees)):
        if d == 1:
            sets = [gs] + ([supplement] if supplement else [])
            r1 = _degree_one_rank(sets, n)
            report.betas[1] = r1
            report.dim_ideal[1] = r1
            report.dim_sub[1] = 0
            report.ncols[1] = n
            continue
        try:
            caps = [(dg, m) for (dg, m) in prep.cap_monos if dg < d]
            space = DegreeSpace(prep.nvars, d, caps, column_cap, memory_cap)
        except BudgetError as exc:
            if on_budget == "skip":
                report.skipped[d] = str(exc)
                continue
            raise
        report.ncols[d] = space.ncols

        def b_rows():
            for pp in ([prep] if prep_sup is None else [prep, prep_sup]):
                for deg_g, terms in pp.entries(d):
                    if deg_g == d:
                        row = space.row(terms, ())
                        if row:
                            yield row

        if engine == "exact":
            ech = SparseRowEchelon()
            for row in _rows_for(prep, space, 1):
                ech.add(dict(row))
            ra = ech.rank
            for row in b_rows():
                ech.add(dict(row))
            pairs = [(ra, ech.rank)]
        else:
            pairs = []
            for p in primes:
                me = ModularEchelon(space.ncols, p)
                me.add_sparse_rows(_rows_for(prep, space, 1))
                ra = me.rank
                me.add_sparse_rows(b_rows())
                pairs.append((ra, me.rank))
                del me
            if len(set(pairs)) != 1:
                raise ArithmeticError(
                    f"modular rank disagreement at degree {d}: {pairs} (primes {primes})"
                )
        ra, rab = pairs[0]
        report.betas[d] = rab - ra
        report.dim_sub[d] = ra
        report.dim_ideal[d] = rab
    report.seconds = time.time() - t0
    return report


# ---------------------------------------------------------------------------
# Membership and equality


@dataclass
class EqualityReport:
    equal: bool
    checked: int
    failures: list  # labels of non-member generators
    engine: str
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "equal": self.equal,
            "checked": self.checked,
            "failures": self.failures[:20],
            "engine": self.engine,
        }


class IdealSpan:
    """Span of a homogeneous ideal's degree-d piece, built lazily per degree
    from a prepared generating set.  Supports exact or modular membership."""

    def __init__(self, prep, engine, primes, column_cap, memory_cap):
        self.prep = prep
        self.engine = engine
        self.primes = primes
        self.column_cap = column_cap
        self.memory_cap = memory_cap
        self._spaces = {}
        self._spans = {}

    def space(self, d) -> DegreeSpace:
        if d not in self._spaces:
            self._spaces[d] = DegreeSpace(
                self.prep.nvars, d, self.prep.cap_monos, self.column_cap, self.memory_cap
            )
        return self._spaces[d]

    def _build(self, d):
        space = self.space(d)
        if self.engine == "exact":
            ech = SparseRowEchelon()
            for row in _rows_for(self.prep, space, 0):
                ech.add(dict(row))
            self._spans[d] = [ech]
        else:
            spans = []
            for p in self.primes:
                me = ModularEchelon(space.ncols, p)
                me.add_sparse_rows(_rows_for(self.prep, space, 0))
                spans.append(me)
            self._spans[d] = spans
        return self._spans[d]

    def contains(self, poly: Polynomial) -> bool:
        q = substitute_last(poly, self.prep.n) if self.prep.use_subst else poly
        if not q:
            return True
        d = q.degree()
        space = self.space(d)
        row = space.row(q.terms, ())
        # terms that fell into capped columns are multiples of monomial
        # generators, hence members; only the projected part needs checking
        if not row:
            return True
        spans = self._spans.get(d) or self._build(d)
        if self.engine == "exact":
            return spans[0].contains(dict(row))
        return all(me.contains_sparse(row) for me in spans)

    def drop(self, d):
        self._spans.pop(d, None)
        self._spaces.pop(d, None)


@dataclass
class MembershipResult:
    member: bool
    engine: str
    certificate: list | None = None  # (generator label, multiplier, coeff)

    def __bool__(self):
        return self.member


def membership(
    f: Polynomial,
    gs: GeneratorSet,
    engine: str = "modular",
    certificate: bool = False,
    column_cap: int = DEFAULT_COLUMN_CAP,
    memory_cap: int = DEFAULT_MEMORY_CAP,
    seed: int = 0,
    nprimes: int = 2,
) -> MembershipResult:
    """Is f in the ideal generated by gs?  With certificate=True the check
    runs exact over the full monomial space and returns the combination."""
    if not f:
        return MembershipResult(True, engine, [] if certificate else None)
    if not f.is_homogeneous():
        raise ValueError("membership is defined for homogeneous polynomials")
    if not certificate:
        prep = prepare(gs)
        primes = choose_primes(nprimes, seed) if engine == "modular" else []
        span = IdealSpan(prep, engine, primes, column_cap, memory_cap)
        return MembershipResult(span.contains(f), engine)
    d = f.degree()
    M = span_matrix(gs, d, column_cap)
    pivots = {}  # leading col -> (row dict, combination dict)
    def reduce_tracked(r, combo):
        while r:
            c = min(r)
            hit = pivots.get(c)
            if hit is None:
                return r, combo
            prow, pcombo = hit
            coef = r[c]
            for cc, vv in prow.items():
                nv = r.get(cc, 0) - coef * vv
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
            for ri, vv in pcombo.items():
                nv = combo.get(ri, 0) - coef * vv
                if nv:
                    combo[ri] = nv
                else:
                    combo.pop(ri, None)
        return r, combo
    for ridx, row in enumerate(M.rows):
        r, combo = reduce_tracked({c: Fraction(v) for c, v in row}, {ridx: Fraction(1)})
        if r:
            c = min(r)
            lead = r[c]
            pivots[c] = (
                {cc: vv / lead for cc, vv in r.items()},
                {ri: vv / lead for ri, vv in combo.items()},
            )
    index = {m: i for i, m in enumerate(M.monomials)}
    target = {index[m]: Fraction(c) for m, c in f.terms.items()}
    r, combo = reduce_tracked(target, {})
    if r:
        return MembershipResult(False, "exact")
    cert = [
        (M.provenance[ri][0], M.provenance[ri][1], -coeff)
        for ri, coeff in sorted(combo.items())
    ]
    return MembershipResult(True, "exact", cert)


def ideal_contains(
    container: GeneratorSet,
    members,
    engine="modular",
    column_cap=DEFAULT_COLUMN_CAP,
    memory_cap=DEFAULT_MEMORY_CAP,
    seed=0,
    nprimes=2,
):
    """Check that every (label, Polynomial) in members lies in the ideal of
    container.  Returns (failures, checked)."""
    prep = prepare(container)
    primes = choose_primes(nprimes, seed) if engine == "modular" else []
    span = IdealSpan(prep, engine, primes, column_cap, memory_cap)
    failures = []
    checked = 0
    for label, poly in sorted(members, key=lambda t: t[1].degree()):
        checked += 1
        if not span.contains(poly):
            failures.append(label)
    return failures, checked


def ideal_equal(
    gsA: GeneratorSet,
    gsB: GeneratorSet,
    engine="modular",
    column_cap=DEFAULT_COLUMN_CAP,
    memory_cap=DEFAULT_MEMORY_CAP,
    seed=0,
    nprimes=2,
) -> EqualityReport:
    """Do the two sets generate the same ideal?  Generators appearing
    verbatim in the other set are skipped; the rest get a real membership
    check in the other ideal."""
    t0 = time.time()
    failures = []
    checked = 0
    for src, dst in ((gsA, gsB), (gsB, gsA)):
        have = {frozenset(g.poly.terms.items()) for g in dst}
        todo = [
            (f"{src.builder}:{g.label()}", g.poly)
            for g in src
            if frozenset(g.poly.terms.items()) not in have
        ]
        if not todo:
            continue
        fails, cnt = ideal_contains(
            dst, todo, engine=engine, column_cap=column_cap,
            memory_cap=memory_cap, seed=seed, nprimes=nprimes,
        )
        failures.extend(fails)
        checked += cnt
    return EqualityReport(
        equal=not failures,
        checked=checked,
        failures=failures,
        engine=engine,
        seconds=time.time() - t0,
    )


# ---------------------------------------------------------------------------
# The diagonal redundancy check


@dataclass
class ConjectureVerdict:
    partition: Partition
    cells: list  # conjectured (i, p) with i >= 1, sorted
    conjectured: dict  # degree -> predicted count
    actual: dict  # degree -> beta
    flagged: list  # cells whose degree has beta < predicted
    counterexample: bool
    engine: str = "modular"
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "partition": list(self.partition.parts),
            "cells": [list(c) for c in self.cells],
            "conjectured": {str(d): v for d, v in sorted(self.conjectured.items())},
            "actual": {str(d): v for d, v in sorted(self.actual.items())},
            "flagged": [list(c) for c in self.flagged],
            "counterexample": self.counterexample,
            "engine": self.engine,
        }

    def text(self) -> str:
        cells = ", ".join(f"({i},{p})" for i, p in self.cells) or "(none)"
        lines = [f"partition {self.partition}: conjectured cells {cells}"]
        for d in sorted(self.conjectured):
            lines.append(
                f"  degree {d}: conjectured {self.conjectured[d]}, actual {self.actual.get(d, '?')}"
            )
        if self.counterexample:
            flagged = ", ".join(f"({i},{p})" for i, p in self.flagged)
            lines.append(f"  COUNTEREXAMPLE: redundant cells {flagged}")
        else:
            lines.append("  conjecture holds")
        return "\n".join(lines)


def conjectured_counts(lam: Partition) -> tuple[list, dict]:
    """The cells the diagonal rule keeps and the per-degree generator counts
    they predict (one per column-0 degree up to the length, plus the U-tilde
    cardinality of every kept cell)."""
    n = lam.n
    cells = sorted(conjectured_cells(lam))
    counts = {}
    for d in range(1, lam.length + 1):
        counts[d] = counts.get(d, 0) + 1
    for i, p in cells:
        counts[p] = counts.get(p, 0) + max(comb(n, i) - comb(n, i - 1), 0)
    return cells, counts


def check_conjecture(
    lam: Partition,
    gs: GeneratorSet | None = None,
    engine="modular",
    column_cap=DEFAULT_COLUMN_CAP,
    memory_cap=DEFAULT_MEMORY_CAP,
    seed=0,
    nprimes=2,
) -> ConjectureVerdict:
    """Compare the diagonal rule's predicted generator counts against the
    actual minimal counts at the degrees of the predicted cells.  A cell is
    flagged (and the partition is a counterexample) when the actual count in
    its degree falls short of the prediction."""
    t0 = time.time()
    cells, counts = conjectured_counts(lam)
    cell_degrees = sorted({p for _, p in cells})
    actual = {}
    if cell_degrees:
        if gs is None:
            gs = tanisaki(lam)
        report = betti_counts(
            gs,
            degrees=cell_degrees,
            engine=engine,
            column_cap=column_cap,
            memory_cap=memory_cap,
            seed=seed,
            nprimes=nprimes,
        )
        actual = report.betas
    flagged = [(i, p) for (i, p) in cells if actual.get(p, 0) < counts.get(p, 0)]
    return ConjectureVerdict(
        partition=lam,
        cells=cells,
        conjectured={d: counts[d] for d in cell_degrees},
        actual=actual,
        flagged=flagged,
        counterexample=bool(flagged),
        engine=engine,
        seconds=time.time() - t0,
    )


def scan(
    n: int,
    engine="modular",
    column_cap=DEFAULT_COLUMN_CAP,
    memory_cap=DEFAULT_MEMORY_CAP,
    seed=0,
    nprimes=2,
    progress=None,
) -> list[ConjectureVerdict]:
    """check_conjecture over every partition of n."""
    out = []
    for lam in partitions_of(n):
        v = check_conjecture(
            lam, engine=engine, column_cap=column_cap,
            memory_cap=memory_cap, seed=seed, nprimes=nprimes,
        )
        out.append(v)
        if progress:
            progress(v)
    return out


def counterexample_family_member(lam: Partition) -> bool:
    """Does the shape defeat the diagonal rule by the two-family redundancy
    argument?

    The first family consists of the shapes (u^a, (u-1)^c, 1) with u >= 3 and
    g = a + c >= 2; the second of (u^a, (u-1)^c, 1, 1) with u >= 4 and
    g = a + c + 1 >= 3.  Their column heights read (g+1, g, ..., g, a) and
    (g+1, g-1, ..., g-1, a).  When the first l+1 columns of a shape coincide
    with those of a family member, the generators coming from columns 3..l
    (first family) or 4..l (second family) are redundant.  That makes the
    shape a counterexample precisely when one of those columns contributes a
    generator to the reduced set at all, i.e. has height >= 2 or is the final
    column.
    """
    h = lam.conjugate().parts
    if len(h) < 4 or h[1] < 2:
        return False
    s = lam[1] - 1  # index of the final column
    run = 1
    while run + 1 < len(h) and h[run + 1] == h[1]:
        run += 1  # columns 1..run all share height h[1]

    if h[0] == h[1] + 1 and h[1] >= 2:
        # First family, g = h[1]: redundant columns are 3..l.
        if run >= 3:
            return True
        if run == 2 and len(h) >= 4 and 1 <= h[3] < h[1]:
            # Prefix of the u = 4 member (g+1, g, g, a); column 3 is the
            # only redundant one.
            return h[3] >= 2 or s == 3
    if h[0] == h[1] + 2 and h[1] >= 2:
        # Second family, g = h[1] + 1: redundant columns are 4..l.
        if run >= 4:
            return True
        if run == 3 and len(h) >= 5 and 1 <= h[4] < h[1]:
            # Prefix of the u = 5 member (g+1, g-1, g-1, g-1, a).
            return h[4] >= 2 or s == 4
    return False
