"""Finite graded chain complexes over the rationals with named basis keys.

A complex is a finite basis per integer degree plus a differential of
degree +1 given as a function basis-key -> SparseVector.  Cohomology is
computed by exact Gaussian elimination; representatives are genuine
cocycle vectors, and classes can be re-expressed in the chosen
representative basis modulo coboundaries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Sequence

from .rational import SparseVector, nullspace, rref, solve

Key = Hashable


class GradedComplex:
    def __init__(self, basis_by_degree: dict[int, list[Key]],
                 d: Callable[[Key], SparseVector]):
        self.basis = {j: list(keys) for j, keys in basis_by_degree.items() if keys}
        self.index = {j: {k: i for i, k in enumerate(keys)}
                      for j, keys in self.basis.items()}
        self._d = d
        self._cache: dict[int, tuple] = {}

    def degrees(self) -> list[int]:
        return sorted(self.basis)

    def dim(self, j: int) -> int:
        return len(self.basis.get(j, ()))

    def d_columns(self, j: int) -> list[list[Fraction]]:
        """Images d(e) of the degree-j basis, as vectors in degree j+1."""
        tgt = self.index.get(j + 1, {})
        cols = []
        for key in self.basis.get(j, ()):
            v = [Fraction(0)] * len(tgt)
            for tk, c in self._d(key).items():
                if tk not in tgt:
                    raise ValueError(f"differential of {key!r} leaves the complex at {tk!r}")
                v[tgt[tk]] = c
            cols.append(v)
        return cols

    def check_d_squared(self) -> list[Key]:
        """Keys on which d(d(key)) != 0; empty iff the differential squares to zero."""
        bad = []
        for j in self.degrees():
            for key in self.basis[j]:
                acc = SparseVector()
                for mid, c in self._d(key).items():
                    for tk, c2 in self._d(mid).items():
                        acc.add(tk, c * c2)
                if acc:
                    bad.append(key)
        return bad

    def _elim(self, j: int):
        if j in self._cache:
            return self._cache[j]
        n = self.dim(j)
        if n == 0:
            self._cache[j] = (0, [], [])
            return self._cache[j]
        if self.dim(j + 1):
            ker = nullspace(list(zip(*self.d_columns(j))), n)
        else:
            ker = [[Fraction(int(i == t)) for i in range(n)] for t in range(n)]
        im_rows = ([c for c in self.d_columns(j - 1) if any(x != 0 for x in c)]
                   if self.dim(j - 1) else [])
        im_ech, _ = rref(im_rows, n) if im_rows else ([], [])
        reps: list[list[Fraction]] = []
        span = [row[:] for row in im_ech]
        for v in ker:
            trial, _ = rref(span + [v], n)
            if len(trial) > len(span):
                span = trial
                reps.append(v)
        data = (len(ker) - len(im_ech), reps, im_ech)
        self._cache[j] = data
        return data

    def cohomology_rank(self, j: int) -> int:
        return self._elim(j)[0]

    def representatives(self, j: int) -> list[list[Fraction]]:
        """Chosen cocycle vectors spanning H^j modulo coboundaries."""
        return self._elim(j)[1]

    def rank_table(self, degree_cap: int) -> dict[int, int]:
        lo = min(self.degrees(), default=0)
        return {j: self.cohomology_rank(j)
                for j in range(lo, degree_cap + 1) if self.dim(j)}

    def vector(self, j: int, combo: SparseVector) -> list[Fraction]:
        v = [Fraction(0)] * self.dim(j)
        idx = self.index.get(j, {})
        for k, c in combo.items():
            v[idx[k]] = c
        return v

    def is_cocycle(self, j: int, vec: Sequence[Fraction]) -> bool:
        cols = self.d_columns(j)
        if not cols or not cols[0]:
            return True
        acc = [Fraction(0)] * len(cols[0])
        for x, col in zip(vec, cols):
            if x:
                acc = [a + x * b for a, b in zip(acc, col)]
        return all(a == 0 for a in acc)

    def class_coords(self, j: int, vec: Sequence[Fraction]) -> list[Fraction]:
        """Coordinates of a cocycle's class in the representative basis of H^j."""
        reps = self.representatives(j)
        cols = [list(r) for r in reps]
        nprev = self.dim(j - 1)
        if nprev:
            cols += [c for c in self.d_columns(j - 1)]
        if not cols:
            if any(Fraction(x) != 0 for x in vec):
                raise ValueError("nonzero vector in zero cohomology")
            return []
        sol = solve(list(zip(*cols)), vec, len(cols))
        if sol is None:
            raise ValueError("vector is not a cocycle modulo boundaries")
        return sol[: len(reps)]
