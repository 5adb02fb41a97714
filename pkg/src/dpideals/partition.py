"""Integer partitions, Young-diagram fillings, and Weyman diagrams.

Coordinate convention, used everywhere in this package: a cell of a Young
diagram is addressed as ``(row, col)`` where row 0 is the *bottom* row and
column 0 is the leftmost column.  A partition ``lam`` with parts
``(lam_1 >= lam_2 >= ...)`` has ``lam_1`` cells in its bottom row, so cell
``(r, c)`` exists iff ``c < lam_{r+1}``.  Column ``k`` has height
``conjugate(lam)_{k+1}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import total_ordering
from math import comb
from typing import Iterator


@total_ordering
class Partition:
    """A weakly decreasing sequence of positive integers.

    Immutable; hashable; usable as a dict key.  The empty partition is legal.
    """

    __slots__ = ("parts", "n")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts if p != 0)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if any(p < 0 for p in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    def __setattr__(self, *a):
        raise AttributeError("Partition is immutable")

    def __reduce__(self):
        return (Partition, (self.parts,))

    # -- basic protocol ----------------------------------------------------
    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        """1-based part access: lam[1] is the largest part; 0 past the end."""
        if i < 1:
            raise IndexError("parts are 1-indexed")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return format_parts(self.parts)

    # -- combinatorics -----------------------------------------------------
    @property
    def length(self):
        return len(self.parts)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram: entry i counts parts >= i."""
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p >= i) for i in range(1, self.parts[0] + 1)
        )

    def delta(self) -> tuple[int, ...]:
        """The weakly increasing sequence (d_1, ..., d_n) with d_k the sum of
        the last k column heights of the diagram, heights padded with zeros
        to n terms.  Always ends with d_n = n."""
        n = self.n
        conj = list(self.conjugate().parts) + [0] * (n - len(self.conjugate().parts))
        out = []
        acc = 0
        for k in range(1, n + 1):
            acc += conj[n - k]
            out.append(acc)
        return tuple(out)

    def delta_partition(self) -> "Partition":
        """delta read as a partition (sorted decreasingly)."""
        return Partition(sorted(self.delta(), reverse=True))

    def contains(self, other: "Partition") -> bool:
        """Young-diagram containment: other fits inside self."""
        return all(other[i] <= self[i] for i in range(1, len(other) + 1))

    def cells(self) -> Iterator[tuple[int, int]]:
        """All (row, col) cells, row 0 at the bottom."""
        for r, p in enumerate(self.parts):
            for c in range(p):
                yield (r, c)

    def column_height(self, k: int) -> int:
        return self.conjugate()[k + 1]

    # -- text form ----------------------------------------------------------
    @staticmethod
    def parse(text: str) -> "Partition":
        """Parse "5,4^2,3" or "(5, 4, 4, 3)" style partition text."""
        text = text.strip().strip("()[]")
        if not text:
            return Partition()
        parts = []
        for tok in text.split(","):
            tok = tok.strip()
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"bad partition component {tok!r} in {text!r}")
            val, mult = int(m.group(1)), int(m.group(2) or 1)
            parts.extend([val] * mult)
        return Partition(parts)


def format_parts(parts) -> str:
    """Comma form with exponent shorthand for runs: (5,4,4,3) -> "5,4^2,3"."""
    out = []
    i = 0
    parts = tuple(parts)
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        out.append(str(parts[i]) if j - i == 1 else f"{parts[i]}^{j - i}")
        i = j
    return ",".join(out) if out else "0"


def partitions_of(b: int, max_length: int | None = None) -> Iterator[Partition]:
    """Every partition of b with at most max_length parts, exactly once.

    Order: decreasing lexicographic on the part sequence, so (b) comes first
    and the all-ones partition last.
    """
    if b < 0:
        raise ValueError("b must be >= 0")
    if max_length is None:
        max_length = b

    def rec(remaining, largest, slots):
        if remaining == 0:
            yield []
            return
        if slots == 0:
            return
        for p in range(min(largest, remaining), 0, -1):
            for tail in rec(remaining - p, p, slots - 1):
                yield [p] + tail

    for parts in rec(b, b, max_length):
        yield Partition(parts)


# ---------------------------------------------------------------------------
# Fillings


@dataclass(frozen=True)
class Filling:
    """A Young diagram with an integer in each cell.

    shape: the diagram being filled (for the antidiagonal filling this is the
    conjugate of the delta partition, not the original partition).
    n: ambient number of variables the entries refer to.
    entries: cell (row, col) -> value, row 0 at the bottom.
    """

    shape: Partition
    n: int
    entries: dict[tuple[int, int], int] = field(compare=False)

    def __post_init__(self):
        cells = set(self.shape.cells())
        if cells != set(self.entries):
            raise ValueError("entries do not cover the shape exactly")

    def column(self, k: int) -> list[int]:
        """Entries of column k, bottom to top."""
        h = self.shape.column_height(k)
        return [self.entries[(r, k)] for r in range(h)]

    def bottom_entry(self, k: int) -> int:
        return self.entries[(0, k)]

    def num_columns(self) -> int:
        return self.shape[1]

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "n": self.n,
            "entries": {f"{r},{c}": v for (r, c), v in sorted(self.entries.items())},
        }

    @staticmethod
    def from_json(data: dict) -> "Filling":
        entries = {
            tuple(int(x) for x in key.split(",")): int(v)
            for key, v in data["entries"].items()
        }
        return Filling(Partition(data["shape"]), int(data["n"]), entries)

    def ascii(self) -> str:
        """Aligned rendering, top row first, like the published figures."""
        if not self.shape.parts:
            return "(empty)"
        width = max(len(str(v)) for v in self.entries.values())
        lines = []
        for r in range(len(self.shape.parts) - 1, -1, -1):
            row = [str(self.entries[(r, c)]).rjust(width) for c in range(self.shape[r + 1])]
            lines.append(" ".join(row))
        return "\n".join(lines)


def regular_filling(lam: Partition) -> Filling:
    """Bijective filling: 1..n down each column, columns left to right,
    skipping the bottom row, which is then filled right to left."""
    if lam.n == 0:
        return Filling(lam, 0, {})
    conj = lam.conjugate()
    entries = {}
    v = 1
    for k in range(lam[1]):
        for r in range(conj[k + 1] - 1, 0, -1):
            entries[(r, k)] = v
            v += 1
    for k in range(lam[1] - 1, -1, -1):
        entries[(0, k)] = v
        v += 1
    return Filling(lam, lam.n, entries)


def antidiagonal_filling(lam: Partition) -> Filling:
    """Filling of the conjugate of the delta partition that is constant along
    antidiagonals; column 0 reads 1..n top to bottom, and the bottom entry of
    column k is n - k."""
    n = lam.n
    shape = lam.delta_partition().conjugate()
    entries = {(r, c): n - r - c for (r, c) in shape.cells()}
    return Filling(shape, n, entries)


# ---------------------------------------------------------------------------
# Top cells


@dataclass(frozen=True)
class TopCellData:
    """Top entries of the columns of the regular filling.

    b[k-1] is the top entry of column k for 1 <= k <= t, where t is one less
    than the second part.  s is one less than the first part; when s > t the
    rightmost column has height 1 and its entry is b_s = n - s.
    """

    b: tuple[int, ...]
    t: int
    s: int
    b_s: int | None

    def degrees(self) -> list[tuple[int, int]]:
        """(column, degree) pairs for every top cell, columns 1..t then s."""
        out = [(k, self.b[k - 1]) for k in range(1, self.t + 1)]
        if self.b_s is not None:
            out.append((self.s, self.b_s))
        return out


def top_cells(lam: Partition) -> TopCellData:
    if lam.n == 0:
        return TopCellData((), -1, -1, None)
    conj = lam.conjugate()
    t = lam[2] - 1
    s = lam[1] - 1
    b = []
    acc = 0
    for k in range(1, t + 1):
        acc += conj[k]
        b.append(acc + conj[k + 1] - k)  # = conj_1 + ... + conj_k - k + 1
    # recompute directly to avoid cleverness
    b = [sum(conj[j] for j in range(1, k + 1)) - k + 1 for k in range(1, t + 1)]
    b_s = lam.n - s if s > t else None
    return TopCellData(tuple(b), t, s, b_s)


# ---------------------------------------------------------------------------
# Weyman diagrams


@dataclass(frozen=True)
class WeymanDiagram:
    """Row-justified X-grid: column 0 has X at p = 1..n; column i >= 1 has X
    at every p from the top entry of column i of the regular filling down to
    n - i."""

    n: int
    cells: frozenset[tuple[int, int]]  # (i, p) pairs carrying an X
    top: dict[int, int] = field(compare=False)  # column -> smallest p

    def columns(self) -> int:
        return 1 + max((i for (i, _) in self.cells), default=0)

    def ascii(self, marked: set[tuple[int, int]] | None = None) -> str:
        marked = marked or set()
        ncols = self.columns()
        lines = []
        for p in range(1, self.n + 1):
            row = []
            for i in range(ncols):
                if (i, p) in self.cells:
                    row.append("X*" if (i, p) in marked else "X ")
                else:
                    row.append("  ")
            lines.append(f"p={p:<3d} " + " ".join(row).rstrip())
        lines.append("i=    " + " ".join(f"{i:<2d}" for i in range(ncols)))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "cells": sorted([list(c) for c in self.cells]),
            "top": {str(i): p for i, p in sorted(self.top.items())},
        }


def weyman_diagram(lam: Partition) -> WeymanDiagram:
    n = lam.n
    tc = top_cells(lam)
    cells = {(0, p) for p in range(1, n + 1)}
    top = {0: 1}
    for i in range(1, lam[1]):
        # Top entry of column i of the regular filling: b_i while the column
        # has height >= 2 (i <= t), and the single entry n - i afterwards.
        lo = tc.b[i - 1] if i <= tc.t else n - i
        for p in range(lo, n - i + 1):
            cells.add((i, p))
        top[i] = lo
    return WeymanDiagram(n, frozenset(cells), top)


def conjectured_cells(lam: Partition) -> set[tuple[int, int]]:
    """Top cells (i, p), i >= 1, with no X right of or on the segment joining
    (i, p) to (0, 1).

    The segment test is the integer inequality j*(p-1) >= i*(q-1), applied to
    X's at (j, q) with j > 0 and q <= p.  X's with q > p are ignored; this
    restriction reproduces every published diagram.
    """
    wd = weyman_diagram(lam)
    tops = [(i, p) for i, p in wd.top.items() if i >= 1]
    keep = set()
    for i, p in tops:
        blocked = False
        for (j, q) in wd.cells:
            if j < 1 or q > p or (j, q) == (i, p):
                continue
            if j * (p - 1) >= i * (q - 1):
                blocked = True
                break
        if not blocked:
            keep.add((i, p))
    return keep


def weyman_cardinalities(n: int, i: int) -> dict[str, int]:
    """Sizes of the classical generator families attached to a top cell of
    column i: |V| = C(n,i)^2, |V~| = C(n,i), |U| = C(n,i)^2 - C(n,i-1)^2,
    |U~| = C(n,i) - C(n,i-1)."""
    below = comb(n, i - 1) if i >= 1 else 0  # C(n, -1) = 0
    return {
        "V": comb(n, i) ** 2,
        "V_tilde": comb(n, i),
        "U": comb(n, i) ** 2 - below ** 2,
        "U_tilde": comb(n, i) - below,
    }


def diagram_to_json_str(obj) -> str:
    return json.dumps(obj.to_json(), indent=2, sort_keys=True)
