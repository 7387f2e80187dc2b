"""Reduced bar construction on a finite dga with scalar caps on both sides.

Since the degree-0 part of every model is the ground field, the extra
module terms of the bar differential vanish (the augmentations kill all
positive-degree elements); this collapse is asserted at build time.  The
differential implements

    d[a_1|...|a_r] = sum_i (-1)^i [Ja_1|...|Ja_{i-1}|da_i|...|a_r]
                   + sum_{i<r} (-1)^{i+1} [Ja_1|...|Ja_{i-1}|Ja_i ^ a_{i+1}|...|a_r]

with J a = (-1)^{deg a} a.  Words are tuples of positive-degree basis
names; the word [a_1|...|a_r] sits in degree sum(deg a_i - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import GradedComplex
from .dga import DGAModel, cohomology
from .rational import SparseVector, rref
from .words import Letter, Word, shuffle

BarWord = tuple[str, ...]


def word_degree(model: DGAModel, word: BarWord) -> int:
    return sum(model.degree[a] - 1 for a in word)


def bar_differential(model: DGAModel, word: BarWord) -> SparseVector:
    out = SparseVector()
    prefix_sign = 1
    for j, aj in enumerate(word):
        sign1 = (-1) ** (j + 1) * prefix_sign
        for m, c in model.d(aj).items():
            out.add(word[:j] + (m,) + word[j + 1:], sign1 * c)
        if j + 1 < len(word):
            sign2 = (-1) ** j * prefix_sign * (-1) ** model.degree[aj]
            for m, c in model.product(aj, word[j + 1]).items():
                out.add(word[:j] + (m,) + word[j + 2:], sign2 * c)
        prefix_sign *= (-1) ** model.degree[aj]
    return out


@dataclass
class BarComplex:
    model: DGAModel
    length_cap: int
    degree_cap: int
    generators: list[BarWord]

    def __post_init__(self):
        self._complexes: dict[int, GradedComplex] = {}

    def filtration(self, word: BarWord) -> int:
        return len(word)

    def d(self, word: BarWord) -> SparseVector:
        return bar_differential(self.model, word)

    def complex_at(self, s: int) -> GradedComplex:
        """Subcomplex B_s of words of length <= s."""
        if s not in self._complexes:
            by_deg: dict[int, list[BarWord]] = {}
            for w in self.generators:
                if len(w) <= s:
                    by_deg.setdefault(word_degree(self.model, w), []).append(w)
            self._complexes[s] = GradedComplex(by_deg, self.d)
        return self._complexes[s]

    def generators_of(self, s: int, j: int) -> list[BarWord]:
        return [w for w in self.generators
                if len(w) <= s and word_degree(self.model, w) == j]


def build_bar(model: DGAModel, length_cap: int, degree_cap: int) -> BarComplex:
    """Bar complex truncated by word length and by total degree.

    Words are kept through degree degree_cap + 2 so that kernels and
    images at every reported degree are computed in the untruncated
    complex; cohomology is valid for j <= degree_cap.
    """
    if length_cap <= 0 or degree_cap <= 0:
        raise ValueError("length and degree caps must be positive")
    for i in (0, 1):
        for n, d in model.basis:
            if d > 0 and model.augmentations[i].get(n, Fraction(0)) != 0:
                raise ValueError("augmentation does not kill positive degree; "
                                 "the scalar-caps collapse fails")
    window = degree_cap + 2
    pos = [n for n, d in model.basis if d > 0]
    gens: list[BarWord] = [()]
    layer: list[BarWord] = [()]
    for _ in range(length_cap):
        layer = [w + (a,) for w in layer for a in pos
                 if word_degree(model, w) + model.degree[a] - 1 <= window]
        gens.extend(layer)
    return BarComplex(model, length_cap, degree_cap, gens)


def bar_cohomology(bar: BarComplex) -> dict[int, dict[int, int]]:
    """Exact ranks of H^j(B_s) for every s <= length_cap, j <= degree_cap."""
    out: dict[int, dict[int, int]] = {}
    for s in range(bar.length_cap + 1):
        cx = bar.complex_at(s)
        out[s] = {j: cx.cohomology_rank(j) for j in range(bar.degree_cap + 1)}
    return out


def bar_word_letters(model: DGAModel, word: BarWord) -> Word:
    return Word(Letter(a, model.degree[a]) for a in word)


def bar_shuffle(model: DGAModel, x, y) -> SparseVector:
    """Shuffle product of formal sums of bar words; Koszul signs from deg-1."""
    xs = x if isinstance(x, SparseVector) else SparseVector({tuple(x): Fraction(1)})
    ys = y if isinstance(y, SparseVector) else SparseVector({tuple(y): Fraction(1)})
    if not model.graded_commutative:
        raise ValueError("shuffle product requires a graded-commutative model")
    out = SparseVector()
    for xw, xc in xs.items():
        for yw, yc in ys.items():
            prod = shuffle(bar_word_letters(model, xw), bar_word_letters(model, yw))
            for w, c in prod.items():
                out.add(tuple(l.ident for l in w), xc * yc * c)
    return out


def em_e1_ranks(model: DGAModel, s_max: int, t_max: int) -> dict[tuple[int, int], int]:
    """Predicted first-page ranks [H^{>0}(A)^{x s}]^t of the length filtration."""
    ring = cohomology(model)
    if ring.rank(0) != 1:
        raise ValueError("model homology is not connected")
    h = {j: r for j, r in ring.ranks.items() if j > 0}
    table: dict[tuple[int, int], int] = {(0, 0): 1}
    prev = {0: 1}
    for s in range(1, s_max + 1):
        cur: dict[int, int] = {}
        for t0, r0 in prev.items():
            for j, r in h.items():
                if t0 + j <= t_max:
                    cur[t0 + j] = cur.get(t0 + j, 0) + r0 * r
        for t, r in cur.items():
            table[(s, t)] = r
        prev = cur
    return table


def graded_word_counts(model: DGAModel, bar: BarComplex,
                       s_max: int, t_max: int) -> dict[tuple[int, int], int]:
    """Counts of length-s words by internal degree t = word degree + s.

    For a model with zero differential these are the first-page ranks.
    """
    out: dict[tuple[int, int], int] = {}
    for w in bar.generators:
        s = len(w)
        t = word_degree(model, w) + s
        if s <= s_max and t <= t_max:
            out[(s, t)] = out.get((s, t), 0) + 1
    return out


@dataclass
class BarRing:
    """Cohomology of the full truncated bar complex with its shuffle product."""
    bar: BarComplex
    classes: list[tuple[int, SparseVector]]        # (degree, representative)
    products: dict[tuple[int, int], dict[int, Fraction]]
    overflow: set[tuple[int, int]]                 # pairs whose product left the caps

    def rank(self, j: int) -> int:
        return sum(1 for d, _ in self.classes if d == j)


def bar_ring(bar: BarComplex) -> BarRing:
    model = bar.model
    cx = bar.complex_at(bar.length_cap)
    classes: list[tuple[int, SparseVector]] = []
    for j in range(bar.degree_cap + 1):
        basis = cx.basis.get(j, [])
        for rep in cx.representatives(j):
            classes.append((j, SparseVector(
                {basis[i]: c for i, c in enumerate(rep) if c != 0})))
    products: dict[tuple[int, int], dict[int, Fraction]] = {}
    overflow: set[tuple[int, int]] = set()
    for i, (di, ci) in enumerate(classes):
        for k, (dk, ck) in enumerate(classes):
            j = di + dk
            if j > bar.degree_cap:
                continue
            prod = bar_shuffle(model, ci, ck)
            if any(len(w) > bar.length_cap for w in prod):
                overflow.add((i, k))
                continue
            coords = cx.class_coords(j, cx.vector(j, prod)) if cx.dim(j) else []
            offset = [m for m, (d, _) in enumerate(classes) if d == j]
            entry = {offset[t]: c for t, c in enumerate(coords) if c != 0}
            if entry:
                products[(i, k)] = entry
    return BarRing(bar, classes, products, overflow)


def homotopy_ranks(model: DGAModel, degree_cap: int) -> dict[int, int]:
    """Ranks of Hom(pi_{j+1}, R) for simply connected models.

    Computed as indecomposables of the loop cohomology ring in degree j;
    valid for j + 1 <= degree_cap + 1.
    """
    ring = cohomology(model)
    if ring.rank(1) != 0:
        raise ValueError("model has H^1 != 0; homotopy ranks need simple connectivity")
    bar = build_bar(model, length_cap=degree_cap, degree_cap=degree_cap)
    bring = bar_ring(bar)
    for i, k in bring.overflow:
        if bring.classes[i][0] > 0 and bring.classes[k][0] > 0:
            raise ValueError("a decomposable product left the truncation; "
                             "raise the degree cap")
    out: dict[int, int] = {}
    for j in range(1, degree_cap + 1):
        idx = [i for i, (d, _) in enumerate(bring.classes) if d == j]
        pos = {ci: t for t, ci in enumerate(idx)}
        rows = []
        for (i, k), entry in bring.products.items():
            if bring.classes[i][0] > 0 and bring.classes[k][0] > 0 \
                    and bring.classes[i][0] + bring.classes[k][0] == j:
                row = [Fraction(0)] * len(idx)
                for m, c in entry.items():
                    row[pos[m]] = c
                rows.append(row)
        dec = len(rref(rows, len(idx))[1]) if rows else 0
        out[j + 1] = len(idx) - dec
    return out


def rank_table_rows(table: dict[int, dict[int, int]]) -> list[tuple[int, int, int]]:
    """Flatten a filtration rank table to (s, j, rank) rows for reports."""
    return [(s, j, r) for s in sorted(table) for j, r in sorted(table[s].items())]
