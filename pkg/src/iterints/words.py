"""Shuffle Hopf algebra of words over a graded alphabet.

Words of 1-forms (or of positive-degree basis elements of a dga) carry a
shuffle product, a deconcatenation coproduct and an antipode.  Koszul
signs are computed from the shifted degree deg-1 of each letter, so a
degree-1 letter is even and the classical unsigned shuffle is recovered.
The antipode reverses a word with the sign (-1)^r times the Koszul sign
of the reversal, which reduces to (-1)^r on degree-1 alphabets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


@dataclass(frozen=True, order=True)
class Letter:
    ident: str
    degree: int = 1

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"letter {self.ident!r} has negative degree")

    @property
    def sdeg(self) -> int:
        """Shifted degree deg-1, the degree of the letter inside a word."""
        return self.degree - 1

    def __repr__(self):
        return self.ident


class Word(tuple):
    """Immutable sequence of Letters."""

    def __new__(cls, letters: Iterable[Letter] = ()):
        return super().__new__(cls, tuple(letters))

    @property
    def degree(self) -> int:
        return sum(l.sdeg for l in self)

    def reversed(self) -> "Word":
        return Word(reversed(self))

    def __add__(self, other) -> "Word":
        return Word(tuple.__add__(self, other))

    def __repr__(self):
        return "[" + "|".join(l.ident for l in self) + "]" if self else "[]"


EMPTY_WORD = Word()


class FormalWordSum(dict):
    """Rational linear combination of Words; zero coefficients are never stored."""

    def __init__(self, terms: Mapping[Word, Fraction] | None = None):
        super().__init__()
        if terms:
            for w, c in terms.items():
                self.add(w, c)

    def add(self, word: Word, coeff) -> None:
        c = self.get(word, Fraction(0)) + Fraction(coeff)
        if c == 0:
            self.pop(word, None)
        else:
            self[word] = c

    def __add__(self, other: "FormalWordSum") -> "FormalWordSum":
        out = FormalWordSum(self)
        for w, c in other.items():
            out.add(w, c)
        return out

    def __sub__(self, other: "FormalWordSum") -> "FormalWordSum":
        out = FormalWordSum(self)
        for w, c in other.items():
            out.add(w, -c)
        return out

    def scale(self, factor) -> "FormalWordSum":
        f = Fraction(factor)
        return FormalWordSum({w: c * f for w, c in self.items()} if f else {})

    @staticmethod
    def of(word: Word, coeff=1) -> "FormalWordSum":
        s = FormalWordSum()
        s.add(word, coeff)
        return s


class TensorSum(dict):
    """Rational linear combination of (Word, Word) pairs."""

    def add(self, pair: tuple[Word, Word], coeff) -> None:
        c = self.get(pair, Fraction(0)) + Fraction(coeff)
        if c == 0:
            self.pop(pair, None)
        else:
            self[pair] = c


def _shuffle_words(u: Word, v: Word) -> FormalWordSum:
    r, s = len(u), len(v)
    out = FormalWordSum()
    if r == 0:
        out.add(v, 1)
        return out
    if s == 0:
        out.add(u, 1)
        return out
    for upos in itertools.combinations(range(r + s), r):
        slots: list[Letter | None] = [None] * (r + s)
        for i, p in enumerate(upos):
            slots[p] = u[i]
        vit = iter(v)
        vpos = []
        for p in range(r + s):
            if slots[p] is None:
                slots[p] = next(vit)
                vpos.append(p)
        # Koszul sign: one factor (-1)^{sdeg(u_i) sdeg(v_j)} per transposed pair.
        sign = 1
        for i, p in enumerate(upos):
            for j, q in enumerate(vpos):
                if q < p and (u[i].sdeg * v[j].sdeg) % 2:
                    sign = -sign
        out.add(Word(slots), sign)
    return out


def shuffle(u, v) -> FormalWordSum:
    """Shuffle product, bilinearly extended to FormalWordSums."""
    us = u if isinstance(u, FormalWordSum) else FormalWordSum.of(Word(u))
    vs = v if isinstance(v, FormalWordSum) else FormalWordSum.of(Word(v))
    out = FormalWordSum()
    for uw, uc in us.items():
        for vw, vc in vs.items():
            for w, c in _shuffle_words(uw, vw).items():
                out.add(w, uc * vc * c)
    return out


def coproduct(w: Word) -> TensorSum:
    """Deconcatenation: all r+1 splittings, empty prefix and suffix included."""
    out = TensorSum()
    for j in range(len(w) + 1):
        out.add((Word(w[:j]), Word(w[j:])), 1)
    return out


def reversal_sign(w: Word) -> int:
    """Koszul sign of reversing w, times (-1)^len(w)."""
    sign = -1 if len(w) % 2 else 1
    odd = sum(1 for l in w if l.sdeg % 2)
    if (odd * (odd - 1) // 2) % 2:
        sign = -sign
    return sign


def antipode(w) -> FormalWordSum:
    """Antipode: signed reversal; satisfies m(S x id)(coproduct) = unit counit."""
    ws = w if isinstance(w, FormalWordSum) else FormalWordSum.of(Word(w))
    out = FormalWordSum()
    for word, c in ws.items():
        out.add(word.reversed(), c * reversal_sign(word))
    return out


def hopf_defect(w: Word) -> FormalWordSum:
    """m(S x id) applied to coproduct(w); zero on nonempty words, 1*[] on []."""
    out = FormalWordSum()
    for (a, b), c in coproduct(w).items():
        for word, c2 in shuffle(antipode(a), FormalWordSum.of(b)).items():
            out.add(word, c * c2)
    return out


def words_over(alphabet: list[Letter], max_len: int) -> list[Word]:
    """All words of length <= max_len, shortest first, letter order stable."""
    out = [EMPTY_WORD]
    layer = [EMPTY_WORD]
    for _ in range(max_len):
        layer = [w + Word((l,)) for w in layer for l in alphabet]
        out.extend(layer)
    return out


def word_to_json(w: Word) -> list[str]:
    return [l.ident for l in w]


def alphabet_table(alphabet: Iterable[Letter]) -> dict[str, int]:
    return {l.ident: l.degree for l in alphabet}


def word_from_json(ids: list[str], table: Mapping[str, int]) -> Word:
    return Word(Letter(i, table[i]) for i in ids)
