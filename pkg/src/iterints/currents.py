"""Exact iterated integrals of hyperplane delta-currents along PL paths.

Words whose letters are oriented affine hyperplanes have integer
iterated integrals against transverse piecewise-linear paths: the value
counts strictly increasing tuples of crossing times matching the word,
signed by crossing direction.  All geometry is exact rational; paths
that violate transversality are rejected, never perturbed.  This module
is the exact oracle for the shuffle, composition and antipode
conventions used everywhere else.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .words import Letter, Word, antipode, shuffle

Point = tuple[Fraction, ...]


class TransversalityError(ValueError):
    pass


@dataclass(frozen=True)
class Hyperplane:
    normal: Point
    offset: Fraction

    def __post_init__(self):
        if all(x == 0 for x in self.normal):
            raise ValueError("hyperplane normal must be nonzero")

    def value(self, p: Point) -> Fraction:
        return sum((a * b for a, b in zip(self.normal, p)), Fraction(0)) - self.offset


@dataclass
class Arrangement:
    dim: int
    hyperplanes: list[Hyperplane]


@dataclass
class PLPath:
    vertices: list[Point]

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise ValueError("a PL path needs at least two vertices")
        for i in range(len(self.vertices) - 1):
            if self.vertices[i] == self.vertices[i + 1]:
                raise ValueError(f"zero-length segment at vertex {i}")

    def reverse(self) -> "PLPath":
        return PLPath(list(reversed(self.vertices)))

    def compose(self, other: "PLPath") -> "PLPath":
        if self.vertices[-1] != other.vertices[0]:
            raise ValueError("paths are not composable: endpoints differ")
        return PLPath(self.vertices + other.vertices[1:])

    def split(self, k: int) -> tuple["PLPath", "PLPath"]:
        if not 1 <= k <= len(self.vertices) - 2:
            raise ValueError("split index out of range")
        return PLPath(self.vertices[: k + 1]), PLPath(self.vertices[k:])


@dataclass
class CrossingSequence:
    crossings: list[tuple[Fraction, int, int]]     # (time, hyperplane index, sign)

    def signs_for(self, h: int) -> list[int]:
        return [s for _, hh, s in self.crossings if hh == h]


def crossings(path: PLPath, arrangement: Arrangement) -> CrossingSequence:
    """Complete signed crossing list; exact; rejects transversality violations."""
    m = len(path.vertices) - 1
    out: list[tuple[Fraction, int, int]] = []
    for h_idx, h in enumerate(arrangement.hyperplanes):
        vals = [h.value(v) for v in path.vertices]
        for i, val in enumerate(vals):
            if val == 0:
                raise TransversalityError(
                    f"vertex {i} lies on hyperplane {h_idx}")
        for i in range(m):
            a, b = vals[i], vals[i + 1]
            if (a < 0) == (b < 0):
                continue
            local = a / (a - b)
            t = (Fraction(i) + local) / m
            out.append((t, h_idx, 1 if b > a else -1))
    out.sort(key=lambda c: c[0])
    for (t1, h1, _), (t2, h2, _) in zip(out, out[1:]):
        if t1 == t2:
            raise TransversalityError(
                f"hyperplanes {h1} and {h2} are crossed at the same time {t1}")
    return CrossingSequence(out)


def delta_iterated_integral(word: tuple[int, ...], path: PLPath,
                            arrangement: Arrangement) -> int:
    """Sum over strictly increasing crossing tuples matching the word."""
    seq = crossings(path, arrangement)
    return _delta_from_crossings(word, seq)


def _delta_from_crossings(word: tuple[int, ...], seq: CrossingSequence) -> int:
    r = len(word)
    acc = [0] * (r + 1)
    acc[0] = 1
    for _, h, sign in seq.crossings:
        for k in range(r, 0, -1):
            if word[k - 1] == h and acc[k - 1]:
                acc[k] += sign * acc[k - 1]
    return acc[r]


def brute_force_delta(word: tuple[int, ...], path: PLPath,
                      arrangement: Arrangement) -> int:
    """Independent enumeration over all increasing tuples of crossings."""
    seq = crossings(path, arrangement).crossings
    r = len(word)
    total = 0
    for combo in itertools.combinations(range(len(seq)), r):
        if all(seq[c][1] == word[k] for k, c in enumerate(combo)):
            prod = 1
            for c in combo:
                prod *= seq[c][2]
            total += prod
    return total


# ------------------------------------------------------------ identity suite

@dataclass
class IdentityReport:
    cases: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def _letters(word: tuple[int, ...]) -> Word:
    return Word(Letter(str(h), 1) for h in word)


def _from_letters(w: Word) -> tuple[int, ...]:
    return tuple(int(l.ident) for l in w)


def shuffle_identity_holds(u: tuple[int, ...], v: tuple[int, ...],
                           path: PLPath, arr: Arrangement) -> bool:
    """Pointwise product against the shuffle sum.

    The two words must not share a hyperplane: the product of a current
    with itself is not transverse, and the identity genuinely fails there
    (a crossing serving both factors has no shuffle counterpart).
    """
    if set(u) & set(v):
        raise TransversalityError(
            "shuffle factors share a hyperplane; the current product "
            "is not transverse")
    lhs = delta_iterated_integral(u, path, arr) * delta_iterated_integral(v, path, arr)
    rhs = 0
    for w, c in shuffle(_letters(u), _letters(v)).items():
        rhs += int(c) * delta_iterated_integral(_from_letters(w), path, arr)
    return lhs == rhs


def composition_identity_holds(word: tuple[int, ...], alpha: PLPath, beta: PLPath,
                               arr: Arrangement) -> bool:
    lhs = delta_iterated_integral(word, alpha.compose(beta), arr)
    rhs = sum(delta_iterated_integral(word[:j], alpha, arr)
              * delta_iterated_integral(word[j:], beta, arr)
              for j in range(len(word) + 1))
    return lhs == rhs


def antipode_identity_holds(word: tuple[int, ...], path: PLPath,
                            arr: Arrangement) -> bool:
    lhs = delta_iterated_integral(word, path.reverse(), arr)
    rhs = 0
    for w, c in antipode(_letters(word)).items():
        rhs += int(c) * delta_iterated_integral(_from_letters(w), path, arr)
    return lhs == rhs


def oracle_identities(arr: Arrangement, paths: list[PLPath],
                      words: list[tuple[int, ...]]) -> IdentityReport:
    """Shuffle, composition and antipode as exact integer equations."""
    failures: list[str] = []
    cases = 0
    for path in paths:
        for u in words:
            for v in words:
                if set(u) & set(v):
                    continue
                cases += 1
                if not shuffle_identity_holds(u, v, path, arr):
                    failures.append(f"shuffle failed: u={u} v={v}")
        for word in words:
            cases += 1
            if not antipode_identity_holds(word, path, arr):
                failures.append(f"antipode failed: word={word}")
            if len(path.vertices) >= 3:
                alpha, beta = path.split(len(path.vertices) // 2)
                cases += 1
                if not composition_identity_holds(word, alpha, beta, arr):
                    failures.append(f"composition failed: word={word}")
    return IdentityReport(cases, failures)


# --------------------------------------------------------- random transverse

def random_transverse_case(rng: random.Random, dim: int = 2,
                           n_hyperplanes: int = 3, n_vertices: int = 6,
                           max_tries: int = 200) -> tuple[Arrangement, PLPath]:
    """Sample an arrangement and a transverse path; resample on violations."""
    for _ in range(max_tries):
        planes = []
        for _ in range(n_hyperplanes):
            normal = tuple(Fraction(rng.randint(-3, 3)) for _ in range(dim))
            if all(x == 0 for x in normal):
                continue
            planes.append(Hyperplane(normal, Fraction(rng.randint(-4, 4))))
        if len(planes) < n_hyperplanes:
            continue
        arr = Arrangement(dim, planes)
        verts = []
        for _ in range(n_vertices):
            verts.append(tuple(Fraction(rng.randint(-60, 60), rng.randint(1, 7))
                               for _ in range(dim)))
        try:
            path = PLPath(verts)
            crossings(path, arr)
            return arr, path
        except (TransversalityError, ValueError):
            continue
    raise RuntimeError("could not sample a transverse configuration")


def random_identity_suite(seed: int, cases: int = 200,
                          max_word_len: int = 3) -> IdentityReport:
    """Randomized shuffle/composition/antipode suite, exact over the integers."""
    rng = random.Random(seed)
    failures: list[str] = []
    done = 0
    while done < cases:
        arr, path = random_transverse_case(rng)
        n = len(arr.hyperplanes)
        word = tuple(rng.randrange(n) for _ in range(rng.randint(1, max_word_len)))
        # shuffle factors must have disjoint hyperplane supports
        cut = rng.randint(1, n - 1)
        u = tuple(rng.randrange(cut) for _ in range(rng.randint(1, 2)))
        v = tuple(rng.randrange(cut, n) for _ in range(rng.randint(1, 2)))
        if not shuffle_identity_holds(u, v, path, arr):
            failures.append(f"shuffle: case {done}")
        alpha, beta = path.split(rng.randint(1, len(path.vertices) - 2))
        if not composition_identity_holds(word, alpha, beta, arr):
            failures.append(f"composition: case {done}")
        if not antipode_identity_holds(word, path, arr):
            failures.append(f"antipode: case {done}")
        bf = brute_force_delta(word, path, arr)
        if bf != delta_iterated_integral(word, path, arr):
            failures.append(f"brute force mismatch: case {done}")
        done += 1
    return IdentityReport(done, failures)


# ------------------------------------------------------------------- JSON IO

def _fraction_from_json(v) -> Fraction:
    if isinstance(v, list):
        return Fraction(v[0], v[1])
    return Fraction(v)


def arrangement_from_json(data: dict) -> Arrangement:
    dim = int(data["dim"])
    planes = []
    for h in data["hyperplanes"]:
        normal = tuple(_fraction_from_json(x) for x in h["normal"])
        if len(normal) != dim:
            raise ValueError("hyperplane normal has wrong dimension")
        planes.append(Hyperplane(normal, _fraction_from_json(h["offset"])))
    return Arrangement(dim, planes)


def path_from_json(data: list) -> PLPath:
    return PLPath([tuple(_fraction_from_json(x) for x in v) for v in data])


def load_arrangement(path: str) -> Arrangement:
    with open(path) as fh:
        return arrangement_from_json(json.load(fh))
