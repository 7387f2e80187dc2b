"""Cobar construction on reduced simplicial sets, with group-ring oracles.

Generators are words [s_1|...|s_k] of nondegenerate simplices of
dimension >= 1; the word sits in degree sum(dim s_i - 1).  On a single
bracket the differential is

    d[s] = -[boundary s] + sum_{0<j<n} (-1)^j [front_j s | rear_{n-j} s]

with degenerate faces dropped, and it extends to words by the graded
Leibniz rule.  Since the differential can lengthen a word by one, the
length-capped complex is the quotient by longer words: terms that
overflow the cap are discarded.

H_0 of the full construction is the free associative algebra on the
1-simplices modulo one relation per 2-simplex; its augmentation-ideal
truncations are compared against a Magnus-expansion group-ring oracle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .bar import build_bar, bar_cohomology
from .complexes import GradedComplex
from .dga import DGAModel
from .rational import SparseVector, span_rank
from .simplicial import SimplexRef, SimplicialSetModel

CobarWord = tuple[str, ...]


def cobar_degree(X: SimplicialSetModel, word: CobarWord) -> int:
    return sum(X.dim_of[s] - 1 for s in word)


def bracket_differential(X: SimplicialSetModel, s: str) -> SparseVector:
    """d[s] as a sum of words of length 1 and 2; degenerate faces vanish."""
    out = SparseVector()
    n = X.dim_of[s]
    if n >= 2:
        for i, ref in enumerate(X.faces[s]):
            if not ref.degenerate:
                out.add((ref.base,), -Fraction(-1) ** i)
    for j in range(1, n):
        front = X.front_face(SimplexRef(s), j)
        rear = X.rear_face(SimplexRef(s), n - j)
        if not front.degenerate and not rear.degenerate:
            out.add((front.base, rear.base), Fraction(-1) ** j)
    return out


def cobar_differential(X: SimplicialSetModel, word: CobarWord,
                       length_cap: int | None = None) -> SparseVector:
    out = SparseVector()
    sign = 1
    for i, s in enumerate(word):
        for part, c in bracket_differential(X, s).items():
            new = word[:i] + part + word[i + 1:]
            if length_cap is None or len(new) <= length_cap:
                out.add(new, sign * c)
        sign *= (-1) ** (X.dim_of[s] - 1)
    return out


@dataclass
class CobarComplex:
    space: SimplicialSetModel
    length_cap: int
    degree_cap: int
    generators: list[CobarWord]

    def __post_init__(self):
        self._complex: GradedComplex | None = None

    def d(self, word: CobarWord) -> SparseVector:
        return cobar_differential(self.space, word, self.length_cap)

    def complex(self) -> GradedComplex:
        """Homological grading flipped to reuse the cochain machinery."""
        if self._complex is None:
            by_deg: dict[int, list[CobarWord]] = {}
            for w in self.generators:
                by_deg.setdefault(-cobar_degree(self.space, w), []).append(w)
            self._complex = GradedComplex(by_deg, self.d)
        return self._complex

    def homology_rank(self, j: int) -> int:
        return self.complex().cohomology_rank(-j)

    def homology_table(self) -> dict[int, int]:
        return {j: self.homology_rank(j) for j in range(self.degree_cap + 1)}


def build_cobar(X: SimplicialSetModel, length_cap: int, degree_cap: int) -> CobarComplex:
    if length_cap <= 0 or degree_cap < 0:
        raise ValueError("invalid caps")
    window = degree_cap + 2
    letters = [s for s in X.nondegenerate(min_dim=1)]
    gens: list[CobarWord] = [()]
    layer: list[CobarWord] = [()]
    for _ in range(length_cap):
        layer = [w + (s,) for w in layer for s in letters
                 if cobar_degree(X, w) + X.dim_of[s] - 1 <= window]
        gens.extend(layer)
    cx = CobarComplex(X, length_cap, degree_cap, gens)
    bad = cx.complex().check_d_squared()
    if bad:
        raise ValueError(f"cobar differential does not square to zero on {bad[:3]}")
    return cx


# --------------------------------------------------- truncated algebra ranks

def truncated_quotient_dimension(n_letters: int, relations: list[SparseVector],
                                 s: int) -> int:
    """dim of T^{<s}(free algebra on n letters) / two-sided ideal(relations).

    Relations are sparse vectors over words (tuples of letter indices)
    with components of degree >= 1.
    """
    if s <= 0:
        return 0
    monomials: list[tuple[int, ...]] = [()]
    layer: list[tuple[int, ...]] = [()]
    for _ in range(s - 1):
        layer = [m + (i,) for m in layer for i in range(n_letters)]
        monomials.extend(layer)
    total = len(monomials)
    spans: list[SparseVector] = []
    for rel in relations:
        if not rel:
            continue
        min_deg = min(len(w) for w in rel)
        for u in monomials:
            for v in monomials:
                if len(u) + min_deg + len(v) >= s:
                    continue
                vec = SparseVector()
                for w, c in rel.items():
                    if len(u) + len(w) + len(v) < s:
                        vec.add(u + w + v, c)
                if vec:
                    spans.append(vec)
    return total - span_rank(spans)


@dataclass
class PresentedAlgebra:
    letters: list[str]
    relations: list[SparseVector]      # over words of letter indices

    def truncated_dimension(self, s: int) -> int:
        return truncated_quotient_dimension(len(self.letters), self.relations, s)


def h0_algebra(cobar: CobarComplex, s: int) -> tuple[PresentedAlgebra, int]:
    """Present H_0 and return the dimension of H_0 / I^s over the rationals.

    Needs length_cap >= s - 1 so the truncation sees every monomial.
    """
    X = cobar.space
    if cobar.length_cap < s - 1:
        raise ValueError("length cap too small for the requested truncation")
    letters = X.simplices.get(1, [])
    index = {e: i for i, e in enumerate(letters)}
    relations: list[SparseVector] = []
    for sig in X.simplices.get(2, []):
        rel = SparseVector()
        for word, c in bracket_differential(X, sig).items():
            rel.add(tuple(index[e] for e in word), c)
        # augmentation [s] -> 0 must kill the relation: no constant term
        if any(len(w) == 0 for w in rel):
            raise ValueError(f"relation of {sig} has a constant term")
        if rel:
            relations.append(rel)
    algebra = PresentedAlgebra(letters, relations)
    return algebra, algebra.truncated_dimension(s)


# ----------------------------------------------------------- group-ring side

@dataclass
class GroupPresentation:
    generators: list[str]
    relators: list[str]        # words; uppercase letter = inverse

    def relator_indices(self) -> list[list[int]]:
        """Each relator as signed 1-based generator indices."""
        out = []
        lower = {g: i + 1 for i, g in enumerate(self.generators)}
        for rel in self.relators:
            word = []
            for ch in rel:
                if ch in lower:
                    word.append(lower[ch])
                elif ch.lower() in lower:
                    word.append(-lower[ch.lower()])
                elif ch.isspace():
                    continue
                else:
                    raise ValueError(f"unknown letter {ch!r} in relator {rel!r}")
            out.append(word)
        return out


def _truncated_product(a: SparseVector, b: SparseVector, s: int) -> SparseVector:
    out = SparseVector()
    for u, cu in a.items():
        for v, cv in b.items():
            if len(u) + len(v) < s:
                out.add(u + v, cu * cv)
    return out


def magnus_image(word: list[int], n_letters: int, s: int) -> SparseVector:
    """Image of a free-group word under g_i -> 1 + x_i in T^{<s}."""
    acc = SparseVector({(): Fraction(1)})
    for g in word:
        i = abs(g) - 1
        term = SparseVector({(): Fraction(1)})
        if g > 0:
            term.add((i,), 1)
        else:
            for k in range(1, s):
                term.add((i,) * k, Fraction(-1) ** k)
        acc = _truncated_product(acc, term, s)
    return acc


def group_ring_dimension(presentation: GroupPresentation, s: int) -> int:
    """Exact dimension of Q[pi]/J^s via Magnus expansion and elimination."""
    if s <= 0:
        return 0
    n = len(presentation.generators)
    relations = []
    for word in presentation.relator_indices():
        img = magnus_image(word, n, s)
        img.add((), -1)
        if img:
            relations.append(img)
    return truncated_quotient_dimension(n, relations, s)


def group_ring_oracle(presentation: GroupPresentation, s: int) -> int:
    return group_ring_dimension(presentation, s)


# ------------------------------------------------------- bar/cobar comparison

def cochain_dga(X: SimplicialSetModel) -> DGAModel:
    """Normalized simplicial cochains with the front/rear-face cup product."""
    basis = [(s, d) for d in sorted(X.simplices) for s in X.simplices[d]]
    unit = X.basepoint
    diff: dict[str, dict[str, Fraction]] = {}
    for s, n in basis:
        if n == 0:
            continue
        for i, ref in enumerate(X.faces[s]):
            if not ref.degenerate and X.dim_of[ref.base] == n - 1:
                combo = diff.setdefault(ref.base, {})
                combo[s] = combo.get(s, Fraction(0)) + Fraction(-1) ** i
    diff = {k: {m: c for m, c in v.items() if c != 0} for k, v in diff.items()}
    diff = {k: v for k, v in diff.items() if v}
    products: dict[tuple[str, str], dict[str, Fraction]] = {}
    by_dim = {d: X.simplices[d] for d in X.simplices}
    for p in sorted(by_dim):
        for q in sorted(by_dim):
            if p == 0 or q == 0 or p + q not in by_dim:
                continue
            for a in by_dim[p]:
                for b in by_dim[q]:
                    combo: dict[str, Fraction] = {}
                    for sig in by_dim[p + q]:
                        ref = SimplexRef(sig)
                        front = X.front_face(ref, p)
                        rear = X.rear_face(ref, q)
                        if front.degenerate or rear.degenerate:
                            continue
                        if front.base == a and rear.base == b:
                            combo[sig] = combo.get(sig, Fraction(0)) + 1
                    products[(a, b)] = combo
    return DGAModel(name=f"cochains({X.name})", basis=basis, differential=diff,
                    products=products, unit=unit, graded_commutative=False)


@dataclass
class RankComparison:
    space: str
    s: int
    rows: list[tuple[int, int, int]]      # (degree, bar rank, cobar rank)

    @property
    def ok(self) -> bool:
        return all(b == c for _, b, c in self.rows)


def bar_cobar_rank_compare(X: SimplicialSetModel, s: int,
                           degree_cap: int) -> RankComparison:
    model = cochain_dga(X)
    bar = build_bar(model, s, max(degree_cap, 1))
    bar_table = bar_cohomology(bar)[s]
    cobar = build_cobar(X, s, degree_cap)
    cob_table = cobar.homology_table()
    rows = [(j, bar_table.get(j, 0), cob_table.get(j, 0))
            for j in range(degree_cap + 1)]
    return RankComparison(X.name, s, rows)


# ------------------------------------------------------------------- fixtures

def presentation_from_json(data: dict) -> GroupPresentation:
    return GroupPresentation(list(data["generators"]), list(data.get("relators", ())))


def load_presentation(path: str) -> GroupPresentation:
    with open(path) as fh:
        return presentation_from_json(json.load(fh))
