"""Sparse multivariate polynomials over the rationals.

A monomial is a tuple of (variable, exponent) pairs, variables 1-based and
strictly increasing, exponents positive.  The empty tuple is 1.  A polynomial
is a dict mapping monomials to nonzero coefficients (int or Fraction).
Everything is exact; there is no floating point here.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

Monomial = tuple  # of (var, exp) pairs

ONE: Monomial = ()


def monomial(pairs) -> Monomial:
    """Normalize an iterable of (var, exp) pairs into a monomial."""
    acc = {}
    for v, e in pairs:
        if e:
            acc[v] = acc.get(v, 0) + e
    if any(e < 0 for e in acc.values()):
        raise ValueError("negative exponent")
    return tuple(sorted((v, e) for v, e in acc.items() if e))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for v, e in b:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """Does a divide b?"""
    db = dict(b)
    return all(db.get(v, 0) >= e for v, e in a)


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """b / a, assuming divisibility."""
    acc = dict(b)
    for v, e in a:
        acc[v] -= e
    return tuple(sorted((v, e) for v, e in acc.items() if e))


def grevlex_key(m: Monomial, n: int):
    """Sort key so that sorting ascending puts the grevlex-largest monomial
    first (x_1 > x_2 > ... > x_n).  Larger degree wins; ties broken by the
    smallest exponent on the last variable, then second to last, and so on."""
    exps = [0] * n
    for v, e in m:
        exps[v - 1] = e
    return (-mono_degree(m), tuple(exps[::-1]))


class Polynomial:
    """dict-backed sparse polynomial.  Coefficients are int or Fraction and
    never zero; the zero polynomial has an empty dict."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for m, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    c0 = t.get(m, 0) + c
                    if c0:
                        t[m] = c0
                    else:
                        t.pop(m, None)
        self.terms = t

    # -- constructors -------------------------------------------------------
    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def constant(c) -> "Polynomial":
        return Polynomial({ONE: c}) if c else Polynomial()

    @staticmethod
    def variable(v: int) -> "Polynomial":
        return Polynomial({((v, 1),): 1})

    @staticmethod
    def from_monomial(m: Monomial, c=1) -> "Polynomial":
        return Polynomial({m: c}) if c else Polynomial()

    # -- arithmetic ----------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({ONE: other} if other else {})
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            c0 = out.get(m, 0) + c
            if c0:
                out[m] = c0
            else:
                out.pop(m, None)
        p = Polynomial()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Polynomial()
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial()
            p = Polynomial()
            p.terms = {m: c * other for m, c in self.terms.items()}
            return p
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c0 = out.get(m, 0) + c1 * c2
                if c0:
                    out[m] = c0
                else:
                    out.pop(m, None)
        p = Polynomial()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- structure -----------------------------------------------------------
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mono_degree(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def variables(self) -> set[int]:
        return {v for m in self.terms for v, _ in m}

    def coefficient(self, m: Monomial):
        return self.terms.get(m, 0)

    def substitute(self, assignments: dict[int, "Polynomial"]) -> "Polynomial":
        """Replace each listed variable by a polynomial; others unchanged."""
        out = Polynomial()
        for m, c in self.terms.items():
            piece = Polynomial.constant(c)
            for v, e in m:
                if v in assignments:
                    piece = piece * (assignments[v] ** e)
                else:
                    piece = piece * Polynomial.from_monomial(((v, e),))
            out = out + piece
        return out

    def evaluate(self, point: dict[int, Fraction]):
        """Exact evaluation at a rational point; unlisted variables are 0."""
        total = 0
        for m, c in self.terms.items():
            val = c
            for v, e in m:
                x = point.get(v, 0)
                if not x:
                    val = 0
                    break
                val = val * x**e
            total += val
        return total

    # -- text ------------------------------------------------------------
    def text(self, n: int | None = None) -> str:
        """Canonical text form in grevlex order, like "x1^2*x3 + 2*x2"."""
        if not self.terms:
            return "0"
        if n is None:
            n = max(self.variables(), default=1)
        parts = []
        for m in sorted(self.terms, key=lambda m: grevlex_key(m, n)):
            c = self.terms[m]
            body = "*".join(
                f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in m
            )
            if not body:
                parts.append((c, str(abs(c)) if isinstance(c, int) else str(abs(c))))
                continue
            if abs(c) == 1:
                parts.append((c, body))
            else:
                parts.append((c, f"{abs(c)}*{body}"))
        first_c, first_s = parts[0]
        out = ("-" if first_c < 0 else "") + first_s
        for c, s in parts[1:]:
            out += (" - " if c < 0 else " + ") + s
        return out

    @staticmethod
    def parse(text: str) -> "Polynomial":
        """Inverse of text(): sums of coefficient*monomial terms."""
        text = text.strip()
        if text == "0":
            return Polynomial()
        text = text.replace("-", "+-")
        out = Polynomial()
        for chunk in text.split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            sign = 1
            if chunk.startswith("-"):
                sign = -1
                chunk = chunk[1:].strip()
            coeff = Fraction(1)
            pairs = []
            for factor in chunk.split("*"):
                factor = factor.strip()
                m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
                if m:
                    pairs.append((int(m.group(1)), int(m.group(2) or 1)))
                else:
                    coeff *= Fraction(factor)
            c = sign * coeff
            if c.denominator == 1:
                c = int(c)
            out = out + Polynomial.from_monomial(monomial(pairs), c)
        return out

    def to_json(self) -> list:
        return [
            {"coeff": str(c), "monomial": [list(p) for p in m]}
            for m, c in sorted(self.terms.items())
        ]

    @staticmethod
    def from_json(data: list) -> "Polynomial":
        out = {}
        for term in data:
            c = Fraction(term["coeff"])
            if c.denominator == 1:
                c = int(c)
            out[monomial(tuple(p) for p in term["monomial"])] = c
        return Polynomial(out)

    def __repr__(self):
        return f"Polynomial({self.text()})"


# ---------------------------------------------------------------------------
# Symmetric-function constructors.  Each takes an explicit variable subset so
# partial elementaries like e_2(x_1, x_3, x_4) come out naturally.


def e_poly(r: int, variables) -> Polynomial:
    """Elementary symmetric polynomial of degree r in the given variables."""
    variables = sorted(variables)
    if r < 0 or r > len(variables):
        return Polynomial()
    if r == 0:
        return Polynomial.constant(1)
    terms = {}
    for combo in itertools.combinations(variables, r):
        terms[tuple((v, 1) for v in combo)] = 1
    p = Polynomial()
    p.terms = terms
    return p


def h_poly(r: int, variables) -> Polynomial:
    """Complete homogeneous symmetric polynomial of degree r."""
    variables = sorted(variables)
    if r < 0:
        return Polynomial()
    if r == 0:
        return Polynomial.constant(1)
    if not variables:
        return Polynomial()
    terms = {}
    for combo in itertools.combinations_with_replacement(variables, r):
        m = monomial((v, 1) for v in combo)
        terms[m] = terms.get(m, 0) + 1
    p = Polynomial()
    p.terms = terms
    return p


def m_poly(mu, variables) -> Polynomial:
    """Monomial symmetric polynomial m_mu in the given variables: the sum of
    all distinct monomials whose exponent multiset is mu."""
    variables = sorted(variables)
    mu = tuple(sorted((int(p) for p in mu if p), reverse=True))
    if len(mu) > len(variables):
        return Polynomial()
    if not mu:
        return Polynomial.constant(1)
    terms = {}
    for positions in itertools.permutations(variables, len(mu)):
        m = tuple(sorted(zip(positions, mu)))
        terms[m] = 1
    p = Polynomial()
    p.terms = terms
    return p


def power_poly(v: int, k: int) -> Polynomial:
    """x_v^k."""
    return Polynomial.from_monomial(((v, k),)) if k else Polynomial.constant(1)


def e_family(r: int, n: int, k: int) -> list[tuple[tuple[int, ...], Polynomial]]:
    """All partial elementaries e_r(S) over k-subsets S of {1..n}, listed in
    lexicographic subset order.  Returns (subset, polynomial) pairs; the
    family is empty when r > k."""
    if r > k:
        return []
    out = []
    for S in itertools.combinations(range(1, n + 1), k):
        out.append((S, e_poly(r, S)))
    return out


def squarefree_monomials(n: int, d: int) -> list[Monomial]:
    """All square-free monomials of degree d in n variables, lexicographic."""
    return [
        tuple((v, 1) for v in combo)
        for combo in itertools.combinations(range(1, n + 1), d)
    ]


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All monomials of total degree d in variables 1..n, in a fixed order
    (grevlex descending).  This order is the column order of every matrix
    built by the rank engine."""
    out = []

    def rec(v, remaining, acc):
        if v == n:
            if remaining:
                acc = acc + [(n, remaining)]
            out.append(tuple(acc))
            return
        for e in range(remaining, -1, -1):
            rec(v + 1, remaining - e, acc + ([(v, e)] if e else []))

    rec(1, d, [])
    out.sort(key=lambda m: grevlex_key(m, n))
    return out
