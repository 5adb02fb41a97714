"""Generating sets for the ideals I_lambda attached to integer partitions.

Builders provided here:
  reading_process    generators read off an arbitrary filling
  tanisaki           the classical partially symmetric generators
  first_reduction    squarefree monomials + full elementaries + column tails
  principal_reduction  one family per column, indexed by top cells
  column_elimination   the per-column subset eliminations with closed counts
  family_set         closed forms for rectangles, two-row shapes and the
                     near-rectangular families
  algorithm_g        the candidate-set algorithm with its per-column trace

All builders return a GeneratorSet whose elements carry a provenance label,
so reports can say which rule produced each polynomial.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import comb

from .partition import Partition, Filling, antidiagonal_filling, regular_filling, top_cells, weyman_cardinalities
from .polyring import (
    Polynomial,
    e_poly,
    h_poly,
    m_poly,
    power_poly,
    squarefree_monomials,
)


@dataclass(frozen=True)
class LabeledGenerator:
    poly: Polynomial
    degree: int
    column: int
    rule: str
    subset: tuple | None = None

    def __post_init__(self):
        if not self.poly:
            raise ValueError("zero generator")
        if not self.poly.is_homogeneous() or self.poly.degree() != self.degree:
            raise ValueError("degree label does not match the polynomial")

    def label(self) -> str:
        s = "" if self.subset is None else "(" + ",".join(map(str, self.subset)) + ")"
        return f"{self.rule}{s} deg={self.degree} col={self.column}"


@dataclass
class GeneratorSet:
    partition: Partition
    builder: str
    generators: list[LabeledGenerator] = field(default_factory=list)

    def __post_init__(self):
        self.generators.sort(
            key=lambda g: (g.degree, g.column, g.rule, g.subset or ())
        )
        seen = set()
        for g in self.generators:
            key = (g.rule, g.subset, g.degree)
            if key in seen:
                raise ValueError(f"duplicate generator {key}")
            seen.add(key)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def polys(self) -> list[Polynomial]:
        return [g.poly for g in self.generators]

    def counts_by_column(self) -> dict[int, int]:
        out = {}
        for g in self.generators:
            out[g.column] = out.get(g.column, 0) + 1
        return out

    def counts_by_degree(self) -> dict[int, int]:
        out = {}
        for g in self.generators:
            out[g.degree] = out.get(g.degree, 0) + 1
        return out

    def to_json(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "builder": self.builder,
            "count": len(self.generators),
            "counts_by_column": {str(k): v for k, v in sorted(self.counts_by_column().items())},
            "generators": [
                {
                    "rule": g.rule,
                    "degree": g.degree,
                    "column": g.column,
                    "subset": list(g.subset) if g.subset is not None else None,
                    "poly": g.poly.to_json(),
                }
                for g in self.generators
            ],
        }

    def text(self, with_polys: bool = False) -> str:
        n = self.partition.n
        lines = [
            f"partition {self.partition}  builder {self.builder}  "
            f"{len(self.generators)} generators"
        ]
        for col, cnt in sorted(self.counts_by_column().items()):
            lines.append(f"  column {col}: {cnt}")
        if with_polys:
            for g in self.generators:
                lines.append(f"  {g.label()}: {g.poly.text(n)}")
        return "\n".join(lines)


def _all_subsets(n: int, size: int):
    return itertools.combinations(range(1, n + 1), size)


# ---------------------------------------------------------------------------


def reading_process(f: Filling) -> GeneratorSet:
    """For each column of the filling with bottom entry k, add e_r(S) for
    every entry r of that column and every k-subset S of the variables."""
    n = f.n
    gens = []
    for col in range(f.num_columns()):
        k = f.bottom_entry(col)
        for r in f.column(col):
            if r > k or r < 1:
                continue  # e_r(k) is empty
            for S in _all_subsets(n, k):
                gens.append(
                    LabeledGenerator(e_poly(r, S), r, col, f"e{r}", S)
                )
    # shape (0) gives nothing; builder name records the generic origin
    return GeneratorSet(Partition(f.shape.parts), "reading", gens)


def tanisaki(lam: Partition) -> GeneratorSet:
    """e_r(S) over all k-subsets S, for every k = 1..n and k >= r > k - d_k,
    where d is the delta sequence of the partition.  Coincides with the
    reading process of the antidiagonal filling."""
    n = lam.n
    delta = lam.delta()
    gens = []
    for k in range(1, n + 1):
        d = delta[k - 1]
        lo = max(1, k - d + 1)
        for r in range(lo, k + 1):
            for S in _all_subsets(n, k):
                gens.append(LabeledGenerator(e_poly(r, S), r, n - k, f"e{r}", S))
    gs = GeneratorSet(lam, "tanisaki", gens)
    return gs


def tanisaki_pairs(lam: Partition) -> set[tuple[int, int]]:
    """The admissible (r, k) pairs without building any polynomials."""
    delta = lam.delta()
    return {
        (r, k)
        for k in range(1, lam.n + 1)
        for r in range(max(1, k - delta[k - 1] + 1), k + 1)
    }


def reading_pairs(f: Filling) -> set[tuple[int, int]]:
    return {
        (r, f.bottom_entry(col))
        for col in range(f.num_columns())
        for r in f.column(col)
        if 1 <= r <= f.bottom_entry(col)
    }


def first_reduction(lam: Partition) -> GeneratorSet:
    """Three blocks: the squarefree monomials of degree n - lam_1 + 1, the
    full elementaries e_1(n)..e_{l-1}(n), and for each column j >= 1 of the
    regular filling the families e_r(n-j) read from the cells strictly above
    the bottom cell."""
    n = lam.n
    rf = regular_filling(lam)
    gens = []
    d = n - lam[1] + 1
    for m in squarefree_monomials(n, d):
        S = tuple(v for v, _ in m)
        gens.append(
            LabeledGenerator(Polynomial.from_monomial(m), d, lam[1] - 1, "mono", S)
        )
    full = tuple(range(1, n + 1))
    for r in range(1, lam.length):
        gens.append(LabeledGenerator(e_poly(r, full), r, 0, f"e{r}", full))
    for j in range(1, lam[1]):
        col = rf.column(j)
        k = n - j
        for r in col[1:]:
            for S in _all_subsets(n, k):
                gens.append(LabeledGenerator(e_poly(r, S), r, j, f"e{r}", S))
    return GeneratorSet(lam, "first", gens)


def principal_reduction(lam: Partition, power_form: bool = False) -> GeneratorSet:
    """One generator family per column, indexed by the top-cell entries:
    column 0 gives e_1(n)..e_{b_1-1}(n); column j (1 <= j <= t) gives the
    family e_{b_j}(n-j), with column 1 optionally replaced by the b_1-th
    powers of the variables; a height-one last column gives e_{n-s}(n-s).
    The single-column and single-row shapes get their special sets."""
    n = lam.n
    gens = []
    full = tuple(range(1, n + 1))
    ell = lam.length
    tc = top_cells(lam)
    for r in range(1, ell):
        gens.append(LabeledGenerator(e_poly(r, full), r, 0, f"e{r}", full))
    if lam.parts and lam[1] == 1:
        # single column: the top degree element must be kept as well
        gens.append(LabeledGenerator(e_poly(n, full), n, 0, f"e{n}", full))
        return GeneratorSet(lam, "principal", gens)
    for j in range(1, tc.t + 1):
        b = tc.b[j - 1]
        if j == 1 and power_form:
            for v in range(1, n + 1):
                gens.append(LabeledGenerator(power_poly(v, b), b, 1, "power", (v,)))
            continue
        for S in _all_subsets(n, n - j):
            gens.append(LabeledGenerator(e_poly(b, S), b, j, f"e{b}", S))
    if tc.b_s is not None:
        b = tc.b_s  # = n - s
        for S in _all_subsets(n, n - tc.s):
            gens.append(LabeledGenerator(e_poly(b, S), b, tc.s, f"e{b}", S))
    return GeneratorSet(lam, "principal", gens)


def column_elimination(lam: Partition) -> GeneratorSet:
    """The principal reduction with the redundant subsets of each column
    removed.  Column 1 always appears in power form.  For a column k with
    2 <= k <= t the kept subsets are the complements of the k-subsets J not
    containing 1 and different from {2,...,k+1}; for a height-one last
    column the dropped complements are the s-subsets containing {1..s-t}.

    The single-column shape keeps the product of all variables on top of
    the table's count; the table alone would miss it.
    """
    n = lam.n
    gens = []
    full = tuple(range(1, n + 1))
    ell = lam.length
    tc = top_cells(lam)
    for r in range(1, ell):
        gens.append(LabeledGenerator(e_poly(r, full), r, 0, f"e{r}", full))
    if lam.parts and lam[1] == 1:
        gens.append(LabeledGenerator(e_poly(n, full), n, 0, f"e{n}", full))
        return GeneratorSet(lam, "columns", gens)
    if tc.t >= 1:
        b1 = tc.b[0]
        for v in range(1, n + 1):
            gens.append(LabeledGenerator(power_poly(v, b1), b1, 1, "power", (v,)))
    for k in range(2, tc.t + 1):
        b = tc.b[k - 1]
        drop = tuple(range(2, k + 2))
        for J in itertools.combinations(range(2, n + 1), k):
            if J == drop:
                continue
            S = tuple(v for v in full if v not in J)
            gens.append(LabeledGenerator(e_poly(b, S), b, k, f"e{b}", S))
    if tc.b_s is not None:
        s, t = tc.s, tc.t
        # The height-one elimination needs at least one height >= 2 column
        # besides column 0 (s > t >= 1); hooks keep the full column.
        head = set(range(1, s - t + 1)) if t >= 1 else None
        b = tc.b_s
        for J in _all_subsets(n, s):
            if head is not None and head <= set(J):
                continue
            S = tuple(v for v in full if v not in J)
            gens.append(LabeledGenerator(e_poly(b, S), b, s, f"e{b}", S))
    return GeneratorSet(lam, "columns", gens)


# ---------------------------------------------------------------------------
# Closed-form families


def _family_shape(lam: Partition):
    """Classify the shape; returns (kind, data) or None.

    Priority: rectangle, two-row, then the three near-rectangular families
    (parts in {u, u-1} possibly followed by one or two trailing ones).
    """
    parts = lam.parts
    if len(parts) < 2 or lam[1] == 1:
        return None
    u = parts[0]
    if all(p == u for p in parts):
        return ("rectangle", {"u": u, "ell": len(parts)})
    if len(parts) == 2:
        return ("two_row", {"u": parts[0], "v": parts[1]})
    if u >= 2 and all(p in (u, u - 1) for p in parts):
        a = sum(1 for p in parts if p == u)
        return ("near_rect", {"u": u, "a": a, "c": len(parts) - a, "g": len(parts)})
    trailing = 0
    body = list(parts)
    while body and body[-1] == 1 and body[-1] != u:
        body.pop()
        trailing += 1
    if trailing > 2 or not body:
        return None
    if u < 3 or any(p not in (u, u - 1) for p in body):
        return None
    a = sum(1 for p in body if p == u)
    c = len(body) - a
    if trailing == 1:
        g = a + c
        if u >= 3 and g > 1:
            return ("near_rect_1", {"u": u, "a": a, "c": c, "g": g})
        return None
    g = a + c + 1
    if u >= 4 and g > 2:
        return ("near_rect_11", {"u": u, "a": a, "c": c, "g": g})
    return None


def family_set(lam: Partition) -> GeneratorSet | None:
    """Closed-form generating set when the shape matches a recognized
    family; None otherwise."""
    match = _family_shape(lam)
    if match is None:
        return None
    kind, d = match
    n = lam.n
    full = tuple(range(1, n + 1))
    gens = []

    def full_es(upto):
        for r in range(1, upto + 1):
            gens.append(LabeledGenerator(e_poly(r, full), r, 0, f"e{r}", full))

    def powers(g):
        for v in range(1, n + 1):
            gens.append(LabeledGenerator(power_poly(v, g), g, 1, "power", (v,)))

    if kind == "rectangle":
        full_es(d["ell"] - 1)
        powers(d["ell"])
    elif kind == "two_row":
        v = d["v"]
        full_es(1)
        powers(2)
        # Last column of the principal reduction: e_{v+1} over the
        # (v+1)-subsets (for u = v + 1 these are the e_u(u)).
        for S in _all_subsets(n, v + 1):
            gens.append(
                LabeledGenerator(e_poly(v + 1, S), v + 1, lam[1] - 1, f"e{v + 1}", S)
            )
    elif kind == "near_rect":
        full_es(d["g"] - 1)
        powers(d["g"])
    elif kind == "near_rect_1":
        g = d["g"]
        full_es(g)
        powers(g + 1)
        for i, j in itertools.combinations(range(1, n + 1), 2):
            p = Polynomial.from_monomial(((i, g), (j, g)))
            gens.append(LabeledGenerator(p, 2 * g, 2, "pairpow", (i, j)))
    elif kind == "near_rect_11":
        g = d["g"]
        full_es(g)
        powers(g + 1)
        for i, j in itertools.combinations(range(1, n + 1), 2):
            p = Polynomial.from_monomial(((i, g - 1), (j, g - 1))) * (
                Polynomial.variable(i) + Polynomial.variable(j)
            )
            gens.append(LabeledGenerator(p, 2 * g - 1, 2, "pairsum", (i, j)))
        for S in itertools.combinations(range(1, n + 1), 3):
            m = tuple((v, g - 1) for v in S)
            gens.append(
                LabeledGenerator(Polynomial.from_monomial(m), 3 * (g - 1), 3, "triplepow", S)
            )
    return GeneratorSet(lam, "family", gens)


# ---------------------------------------------------------------------------
# The candidate-set algorithm


@dataclass
class AlgorithmState:
    partition: Partition
    G: GeneratorSet
    L: list[Partition]
    status: str  # running | stopped_case3 | completed
    trace: list[dict]  # per-column: {column, degree, U, case}
    stopped_at: int | None = None

    def to_json(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "status": self.status,
            "stopped_at": self.stopped_at,
            "L": [list(mu.parts) for mu in self.L],
            "trace": [
                {
                    "column": st["column"],
                    "degree": st["degree"],
                    "U": [list(mu.parts) for mu in st["U"]],
                    "case": st["case"],
                }
                for st in self.trace
            ],
            "generators": self.G.to_json(),
        }

    def text(self) -> str:
        lines = [f"partition {self.partition}  algorithm status {self.status}"]
        for st in self.trace:
            us = ", ".join(str(mu) for mu in st["U"]) or "(empty)"
            lines.append(
                f"  column {st['column']} (degree {st['degree']}): U = {{{us}}} -> case {st['case']}"
            )
        lines.append(self.G.text())
        return "\n".join(lines)


def _partitions_avoiding(b: int, max_len: int, excluded) -> list[Partition]:
    from .partition import partitions_of

    out = []
    for mu in partitions_of(b, max_len):
        if any(mu.contains(nu) for nu in excluded):
            continue
        out.append(mu)
    return out


def algorithm_g(lam: Partition) -> AlgorithmState:
    """Column-by-column candidate construction.  Starts from the full
    elementaries below the first top cell; each later column contributes a
    monomial symmetric family when exactly one admissible exponent partition
    survives, nothing when none does, and falls back to the complete
    homogeneous families for all remaining columns when several do."""
    n = lam.n
    full = tuple(range(1, n + 1))
    tc = top_cells(lam)
    gens = []
    for r in range(1, lam.length):
        gens.append(LabeledGenerator(e_poly(r, full), r, 0, f"e{r}", full))
    if lam.parts and lam[1] == 1:
        # Single column: no further columns exist, and the top-degree
        # elementary is still needed.
        gens.append(LabeledGenerator(e_poly(n, full), n, 0, f"e{n}", full))

    columns = [(k, tc.b[k - 1]) for k in range(1, tc.t + 1)]
    if tc.b_s is not None:
        columns.append((tc.s, tc.b_s))

    L: list[Partition] = []
    trace = []
    status = "completed"
    stopped_at = None
    for idx, (k, b) in enumerate(columns):
        U = _partitions_avoiding(b, k, L)
        if len(U) == 1:
            theta = U[0]
            L.append(theta)
            for S in _all_subsets(n, k):
                p = m_poly(theta.parts, S)
                if p:
                    gens.append(LabeledGenerator(p, b, k, f"m({theta})", S))
            case = 1
        elif len(U) == 0:
            case = 2
        else:
            for kk, bb in columns[idx:]:
                for S in _all_subsets(n, kk):
                    p = h_poly(bb, S)
                    if p:
                        gens.append(LabeledGenerator(p, bb, kk, f"h{bb}", S))
            case = 3
            status = "stopped_case3"
            stopped_at = k
        trace.append({"column": k, "degree": b, "U": U, "case": case})
        if case == 3:
            break
    return AlgorithmState(
        partition=lam,
        G=GeneratorSet(lam, "algorithm", gens),
        L=L,
        status=status,
        trace=trace,
        stopped_at=stopped_at,
    )


# ---------------------------------------------------------------------------
# Pure counting


def count_table(lam: Partition) -> dict:
    """Per-column cardinalities of the principal reduction and of the
    elimination table, plus the classical Weyman cardinalities per top cell.
    Integer arithmetic only."""
    n = lam.n
    tc = top_cells(lam)
    ell = lam.length
    conj = lam.conjugate().parts
    principal = {0: max(ell - 1, 0)}
    eliminated = {0: max(ell - 1, 0)}
    cells = []
    for k in range(1, tc.t + 1):
        principal[k] = comb(n, n - k)
        eliminated[k] = n if k == 1 else comb(n - 1, k) - 1
        cells.append({"column": k, "degree": tc.b[k - 1], **weyman_cardinalities(n, k)})
    if tc.b_s is not None and tc.s >= 1:
        s, t = tc.s, tc.t
        principal[s] = comb(n, n - s)
        eliminated[s] = comb(n, s) - (comb(n - s + t, t) if t >= 1 else 0)
        cells.append({"column": s, "degree": tc.b_s, **weyman_cardinalities(n, s)})
    if lam.parts and lam[1] == 1:
        # room for the top-degree element the table does not see
        principal[0] += 1
        eliminated[0] += 1
    # leading columns of equal height make columns 2..r redundant outright
    run = 1
    while run < len(conj) and conj[run] == conj[0]:
        run += 1
    family = {
        c: (0 if 2 <= c <= run and run >= 3 else v) for c, v in eliminated.items()
    }
    return {
        "partition": list(lam.parts),
        "n": n,
        "principal": principal,
        "principal_total": sum(principal.values()),
        "eliminated": eliminated,
        "eliminated_total": sum(eliminated.values()),
        "family_eliminated": family,
        "family_eliminated_total": sum(family.values()),
        "cells": cells,
    }


def count_table_text(report: dict) -> str:
    lines = [f"partition {Partition(report['partition'])}  n={report['n']}"]
    cols = sorted(set(report["principal"]) | set(report["eliminated"]))
    lines.append("column  principal  eliminated  family")
    for c in cols:
        fam = report["family_eliminated"].get(c, 0)
        lines.append(
            f"{c:>6}  {report['principal'].get(c, 0):>9}  "
            f"{report['eliminated'].get(c, 0):>10}  {fam if fam else '-':>6}"
        )
    lines.append(
        f" total  {report['principal_total']:>9}  "
        f"{report['eliminated_total']:>10}  {report['family_eliminated_total']:>6}"
    )
    for cell in report["cells"]:
        lines.append(
            f"cell (i={cell['column']}, p={cell['degree']}): "
            f"|V|={cell['V']} |V~|={cell['V_tilde']} |U|={cell['U']} |U~|={cell['U_tilde']}"
        )
    return "\n".join(lines)


def genset_to_json_str(gs: GeneratorSet) -> str:
    return json.dumps(gs.to_json(), indent=2)
