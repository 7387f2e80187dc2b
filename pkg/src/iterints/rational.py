"""Exact linear algebra over the rationals.

Everything here works on dense row lists of ``fractions.Fraction``; the
matrices that show up (truncated bar/cobar complexes, cup-product maps)
are small enough that sparse storage would be pointless bookkeeping.
No floating point enters any computation in this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Row = list[Fraction]


def _as_rows(matrix: Iterable[Sequence]) -> list[Row]:
    return [[Fraction(x) for x in row] for row in matrix]


def rref(matrix: Iterable[Sequence], ncols: int | None = None) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form.

    Returns (rows, pivot_columns).  Rows of zeros are dropped.
    """
    rows = _as_rows(matrix)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix: Iterable[Sequence], ncols: int | None = None) -> int:
    return len(rref(matrix, ncols)[1])


def nullspace(matrix: Iterable[Sequence], ncols: int) -> list[Row]:
    """Basis of the right kernel {v : A v = 0}."""
    rows, pivots = rref(matrix, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def solve(matrix: Iterable[Sequence], rhs: Sequence, ncols: int) -> Row | None:
    """One solution of A x = b, or None if inconsistent."""
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    ech, pivots = rref(rows, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = ech[r][ncols]
    return x


def in_row_span(span_rows: list[Row], vector: Sequence, ncols: int) -> bool:
    if not span_rows:
        return all(Fraction(x) == 0 for x in vector)
    sol = solve(list(zip(*span_rows)), vector, len(span_rows))
    return sol is not None


def quotient_rank(ambient_dim: int, sub_rows: list[Row]) -> int:
    return ambient_dim - rank(sub_rows, ambient_dim)


def matmul(a: list[Row], b: list[Row]) -> list[Row]:
    if not a or not b:
        return [[Fraction(0)] * (len(b[0]) if b else 0) for _ in a]
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def is_zero_matrix(a: list[Row]) -> bool:
    return all(x == 0 for row in a for x in row)


class SparseVector(dict):
    """Mapping from an arbitrary hashable basis key to a Fraction, zero-pruned."""

    def add(self, key, coeff) -> None:
        c = self.get(key, Fraction(0)) + Fraction(coeff)
        if c == 0:
            self.pop(key, None)
        else:
            self[key] = c

    def scaled(self, factor) -> "SparseVector":
        f = Fraction(factor)
        out = SparseVector()
        if f != 0:
            for k, v in self.items():
                out[k] = v * f
        return out

    def plus(self, other: "SparseVector") -> "SparseVector":
        out = SparseVector(self)
        for k, v in other.items():
            out.add(k, v)
        return out


def span_rank(vectors: Iterable[SparseVector]) -> int:
    """Rank of a family of sparse vectors over an implicit common basis."""
    vecs = [v for v in vectors if v]
    keys = sorted({k for v in vecs for k in v}, key=repr)
    idx = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vecs:
        row = [Fraction(0)] * len(keys)
        for k, c in v.items():
            row[idx[k]] = c
        rows.append(row)
    return rank(rows, len(keys))
