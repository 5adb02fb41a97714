"""Exact and modular rank engines for graded pieces of polynomial ideals.

Rows live in a fixed finite-dimensional coordinate space (the monomials of
one degree).  Two engines share the same incremental interface:

  SparseRowEchelon  exact over Q, dict-of-columns rows, for small instances
                    and for spot checks of the modular results
  ModularEchelon    row-reduced form over GF(p) held in a dense float64
                    numpy array, with blocked GEMM updates; all products are
                    kept below 2**53 so the floating point arithmetic is
                    exact

Primes are a hair under 2**20 so that a 4096-term accumulation of products
stays below 2**52.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

GEMM_CHUNK = 4096
BLOCK_ROWS = 256
PRIME_BITS_MAX = 1 << 20


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for m < 3.3e24 with these bases
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def choose_primes(count: int, seed: int = 0) -> list[int]:
    """Deterministic sample of distinct primes just below 2**20."""
    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < count:
        m = rng.randrange(PRIME_BITS_MAX // 2, PRIME_BITS_MAX) | 1
        if m in seen:
            continue
        seen.add(m)
        if _is_prime(m):
            out.append(m)
    return out


class SparseRowEchelon:
    """Exact incremental row echelon over Q.

    Rows are dicts column -> coefficient (int or Fraction).  Pivot rows are
    normalized to leading coefficient 1 and indexed by their leading
    (smallest) column.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            coef = row[c]
            for cc, vv in piv.items():
                nv = row.get(cc, 0) - coef * vv
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; True iff it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        lead = Fraction(r[c])
        self.pivots[c] = {cc: Fraction(vv) / lead for cc, vv in r.items()}
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


class ModularEchelon:
    """Incremental RREF over GF(p) in dense float64 storage.

    The invariant maintained is E[:, pivcols] = identity, which lets both
    the incoming-block reduction and the back-substitution be single GEMMs.
    Products of two residues are < 2**40 and chunked sums stay < 2**52, so
    float64 arithmetic is exact throughout.
    """

    def __init__(self, ncols: int, p: int):
        if p >= PRIME_BITS_MAX:
            raise ValueError("prime too large for exact float64 arithmetic")
        self.p = p
        self.ncols = ncols
        self.E = np.zeros((0, ncols))
        self._cap = 0
        self.pivcols: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivcols)

    def _grow(self, need: int):
        if need <= self._cap:
            return
        new_cap = max(need, min(self.ncols, max(1024, int(self._cap * 1.5))))
        E = np.zeros((new_cap, self.ncols))
        E[: self.rank] = self.E[: self.rank]
        self.E = E
        self._cap = new_cap

    def _rows(self) -> np.ndarray:
        return self.E[: self.rank]

    def reduce_block(self, B: np.ndarray) -> np.ndarray:
        """Return the residuals of the rows of B against the current span."""
        p = self.p
        B = np.asarray(B, dtype=np.float64) % p
        r = self.rank
        if r:
            piv = np.asarray(self.pivcols, dtype=np.intp)
            C = B[:, piv].copy()
            E = self._rows()
            for s in range(0, r, GEMM_CHUNK):
                e = min(s + GEMM_CHUNK, r)
                B -= C[:, s:e] @ E[s:e]
                B %= p
        return B

    def add_block(self, B: np.ndarray) -> int:
        """Insert rows; returns how many were independent."""
        p = self.p
        B = self.reduce_block(B)
        new_rows = []
        new_pivs = []
        for i in range(B.shape[0]):
            row = B[i]
            for rr, cc in zip(new_rows, new_pivs):
                f = row[cc]
                if f:
                    row = (row - f * rr) % p
            nz = np.nonzero(row)[0]
            if nz.size == 0:
                continue
            c = int(nz[0])
            inv = pow(int(row[c]), p - 2, p)
            row = (row * inv) % p
            for j in range(len(new_rows)):
                f = new_rows[j][c]
                if f:
                    new_rows[j] = (new_rows[j] - f * row) % p
            new_rows.append(row)
            new_pivs.append(c)
        if not new_rows:
            return 0
        NR = np.vstack(new_rows)
        r = self.rank
        if r:
            E = self._rows()
            C = E[:, new_pivs].copy()
            # inner dimension is len(new_pivs) <= BLOCK_ROWS, no chunk needed
            E -= C @ NR
            E %= p
        self._grow(r + len(new_rows))
        self.E[r : r + len(new_rows)] = NR
        self.pivcols.extend(new_pivs)
        return len(new_rows)

    def add_sparse_rows(self, rows) -> int:
        """rows: iterable of lists of (col, int coeff).  Feeds them through
        in blocks; returns the rank increase."""
        added = 0
        block = np.zeros((BLOCK_ROWS, self.ncols))
        fill = 0
        for row in rows:
            for c, v in row:
                block[fill, c] += v % self.p
            fill += 1
            if fill == BLOCK_ROWS:
                added += self.add_block(block)
                block = np.zeros((BLOCK_ROWS, self.ncols))
                fill = 0
        if fill:
            added += self.add_block(block[:fill])
        return added

    def contains_sparse(self, row) -> bool:
        vec = np.zeros((1, self.ncols))
        for c, v in row:
            vec[0, c] += v % self.p
        res = self.reduce_block(vec)
        return not np.any(res)


def exact_rank_dense(rows) -> int:
    """Reference dense rank over Q; rows are sequences of numbers.  Meant
    for small matrices and cross-checks."""
    mat = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead = mat[r][c]
        mat[r] = [v / lead for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        r += 1
        rank += 1
        if r == len(mat):
            break
    return rank
