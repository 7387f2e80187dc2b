"""Finite-basis differential graded algebras with two augmentations.

Models are given by an explicit basis, sparse rational differential and
product structure constants.  The degree-0 part is required to be
spanned by the unit alone, which forces both augmentations to be
unit-evaluation; they are kept as explicit data so that files may state
them.  Ground field is always the rationals.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import GradedComplex
from .rational import SparseVector, rref

Combo = dict[str, Fraction]


def _combo(data) -> Combo:
    return {k: Fraction(v) for k, v in data.items() if Fraction(v) != 0}


@dataclass
class DGAModel:
    name: str
    basis: list[tuple[str, int]]                  # (element, degree); unit included
    differential: dict[str, Combo] = field(default_factory=dict)
    products: dict[tuple[str, str], Combo] = field(default_factory=dict)
    unit: str = "1"
    augmentations: tuple[Combo, Combo] | None = None
    graded_commutative: bool = True

    def __post_init__(self):
        self.degree = dict(self.basis)
        if self.augmentations is None:
            eps = {self.unit: Fraction(1)}
            self.augmentations = (dict(eps), dict(eps))

    def names(self, deg: int | None = None) -> list[str]:
        if deg is None:
            return [n for n, _ in self.basis]
        return [n for n, d in self.basis if d == deg]

    def positive_basis(self) -> list[tuple[str, int]]:
        return [(n, d) for n, d in self.basis if d > 0]

    def max_degree(self) -> int:
        return max(d for _, d in self.basis)

    def d(self, name: str) -> Combo:
        return self.differential.get(name, {})

    def d_combo(self, combo: Combo) -> Combo:
        out: Combo = {}
        for n, c in combo.items():
            for m, c2 in self.d(n).items():
                v = out.get(m, Fraction(0)) + c * c2
                if v == 0:
                    out.pop(m, None)
                else:
                    out[m] = v
        return out

    def product(self, a: str, b: str) -> Combo:
        if a == self.unit:
            return {b: Fraction(1)}
        if b == self.unit:
            return {a: Fraction(1)}
        return self.products.get((a, b), {})

    def product_combo(self, x: Combo, y: Combo) -> Combo:
        out: Combo = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for m, c in self.product(a, b).items():
                    v = out.get(m, Fraction(0)) + ca * cb * c
                    if v == 0:
                        out.pop(m, None)
                    else:
                        out[m] = v
        return out

    def augmentation(self, i: int, combo: Combo) -> Fraction:
        eps = self.augmentations[i]
        return sum((c * eps.get(n, Fraction(0)) for n, c in combo.items()), Fraction(0))


def validate(model: DGAModel) -> list[str]:
    """Check every structural invariant; returns the list of violations."""
    bad: list[str] = []
    deg = model.degree
    if model.unit not in deg or deg[model.unit] != 0:
        bad.append(f"unit {model.unit!r} missing or not of degree 0")
    zero_deg = model.names(0)
    if zero_deg != [model.unit]:
        bad.append(f"degree-0 part is {zero_deg}, expected the unit alone")
    names = model.names()
    if len(set(names)) != len(names):
        bad.append("duplicate basis names")

    for n in names:
        for m, c in model.d(n).items():
            if m not in deg:
                bad.append(f"d({n}) hits unknown element {m}")
            elif deg[m] != deg[n] + 1:
                bad.append(f"d({n}) term {m} does not raise degree by 1")
        dd = model.d_combo(model.d(n))
        if dd:
            bad.append(f"d(d({n})) = {dd} != 0")

    pos = [n for n, d in model.basis if d > 0]
    for a, b in itertools.product(pos, repeat=2):
        ab = model.product(a, b)
        for m in ab:
            if deg.get(m) != deg[a] + deg[b]:
                bad.append(f"{a}*{b} term {m} has wrong degree")
        if model.graded_commutative:
            sign = Fraction(-1) ** (deg[a] * deg[b])
            ba = {m: sign * c for m, c in model.product(b, a).items()}
            if ab != {m: c for m, c in ba.items() if c != 0}:
                bad.append(f"graded commutativity fails on ({a},{b})")
        # Leibniz: d(ab) = (da)b + (-1)^{deg a} a (db)
        lhs = model.d_combo(ab)
        rhs = model.product_combo(model.d(a), {b: Fraction(1)})
        sa = Fraction(-1) ** deg[a]
        for m, c in model.product_combo({a: Fraction(1)}, model.d(b)).items():
            v = rhs.get(m, Fraction(0)) + sa * c
            if v == 0:
                rhs.pop(m, None)
            else:
                rhs[m] = v
        if lhs != rhs:
            bad.append(f"Leibniz rule fails on ({a},{b})")

    for a, b, c in itertools.product(pos, repeat=3):
        left = model.product_combo(model.product(a, b), {c: Fraction(1)})
        right = model.product_combo({a: Fraction(1)}, model.product(b, c))
        if left != right:
            bad.append(f"associativity fails on ({a},{b},{c})")

    for i, eps in enumerate(model.augmentations):
        if eps.get(model.unit, Fraction(0)) != 1:
            bad.append(f"augmentation {i} does not send the unit to 1")
        for n, c in eps.items():
            if deg.get(n, -1) > 0 and c != 0:
                bad.append(f"augmentation {i} nonzero on positive-degree {n}")
    return bad


def as_complex(model: DGAModel) -> GradedComplex:
    by_degree: dict[int, list[str]] = {}
    for n, d in model.basis:
        by_degree.setdefault(d, []).append(n)

    def dmap(key: str) -> SparseVector:
        return SparseVector(model.d(key))

    return GradedComplex(by_degree, dmap)


@dataclass
class CohomologyRing:
    model: DGAModel
    ranks: dict[int, int]
    classes: list[tuple[str, int, Combo]]          # (label, degree, representative)
    products: dict[tuple[int, int], dict[int, Fraction]]

    def rank(self, j: int) -> int:
        return self.ranks.get(j, 0)

    def classes_in_degree(self, j: int) -> list[int]:
        return [i for i, (_, d, _) in enumerate(self.classes) if d == j]

    def rank_tuple(self, top: int | None = None) -> tuple[int, ...]:
        top = self.model.max_degree() if top is None else top
        return tuple(self.rank(j) for j in range(top + 1))


def cohomology(model: DGAModel) -> CohomologyRing:
    """Graded ranks, representatives, and cup structure constants."""
    cx = as_complex(model)
    ranks: dict[int, int] = {}
    classes: list[tuple[str, int, Combo]] = []
    for j in range(model.max_degree() + 1):
        r = cx.cohomology_rank(j)
        if r:
            ranks[j] = r
        for t, rep in enumerate(cx.representatives(j)):
            combo = {cx.basis[j][i]: c for i, c in enumerate(rep) if c != 0}
            classes.append((f"h{j}_{t}", j, combo))
    products: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i, (_, di, ci) in enumerate(classes):
        for k, (_, dk, ck) in enumerate(classes):
            prod = model.product_combo(ci, ck)
            j = di + dk
            if j > model.max_degree():
                continue
            vec = cx.vector(j, SparseVector(prod)) if cx.dim(j) else []
            coords = cx.class_coords(j, vec) if cx.dim(j) else []
            offset = [m for m, (_, d, _) in enumerate(classes) if d == j]
            entry = {offset[t]: c for t, c in enumerate(coords) if c != 0}
            if entry:
                products[(i, k)] = entry
    return CohomologyRing(model, ranks, classes, products)


def indecomposables(ring: CohomologyRing) -> dict[int, int]:
    """Rank of QH^j = H^j / (products of positive-degree classes), j > 0."""
    out: dict[int, int] = {}
    for j, r in ring.ranks.items():
        if j <= 0:
            continue
        idx = ring.classes_in_degree(j)
        pos_index = {c: t for t, c in enumerate(idx)}
        rows = []
        for (i, k), entry in ring.products.items():
            if ring.classes[i][1] > 0 and ring.classes[k][1] > 0 \
                    and ring.classes[i][1] + ring.classes[k][1] == j:
                row = [Fraction(0)] * r
                for m, c in entry.items():
                    row[pos_index[m]] = c
                rows.append(row)
        dec = len(rref(rows, r)[1]) if rows else 0
        out[j] = r - dec
    return out


# ---------------------------------------------------------------- built-ins

def sphere_model(n: int) -> DGAModel:
    """Constants plus multiples of a volume form in degree n."""
    if n < 2:
        raise ValueError("sphere model needs n >= 2")
    return DGAModel(
        name=f"sphere{n}",
        basis=[("1", 0), ("w", n)],
        products={("w", "w"): {}},
    )


def exterior_model(names_degrees: list[tuple[str, int]], model_name: str = "exterior") -> DGAModel:
    """Free graded-commutative exterior algebra on odd-degree generators, d = 0."""
    gens = list(names_degrees)
    if any(d % 2 == 0 or d < 1 for _, d in gens):
        raise ValueError("exterior generators must have odd positive degree")
    subsets = []
    for bits in range(1 << len(gens)):
        subsets.append(tuple(i for i in range(len(gens)) if bits >> i & 1))

    def label(sub):
        return "1" if not sub else "^".join(gens[i][0] for i in sub)

    basis = [(label(s), sum(gens[i][1] for i in s)) for s in subsets]
    products: dict[tuple[str, str], Combo] = {}
    for sa in subsets:
        for sb in subsets:
            if not sa or not sb:
                continue
            if set(sa) & set(sb):
                products[(label(sa), label(sb))] = {}
                continue
            merged = sa + sb
            # sort, counting transpositions of odd generators
            perm = sorted(range(len(merged)), key=lambda i: merged[i])
            inv = sum(1 for i in range(len(perm)) for k in range(i + 1, len(perm))
                      if perm[i] > perm[k])
            sign = Fraction(-1) ** inv
            products[(label(sa), label(sb))] = {label(tuple(sorted(merged))): sign}
    return DGAModel(name=model_name, basis=basis, products=products)


def torus_model(g: int) -> DGAModel:
    """Invariant forms on the 2g-torus: exterior algebra on 2g degree-1 generators."""
    if g < 1:
        raise ValueError("torus model needs g >= 1")
    gens = []
    for i in range(1, g + 1):
        gens += [(f"dx{i}", 1), (f"dy{i}", 1)]
    if g == 1:
        gens = [("dx", 1), ("dy", 1)]
    return exterior_model(gens, model_name=f"torus{g}")


def wedge_of_circles_model(k: int) -> DGAModel:
    """k degree-1 generators with all products of positive elements zero."""
    if k < 1:
        raise ValueError("need k >= 1 circles")
    basis = [("1", 0)] + [(f"e{i}", 1) for i in range(1, k + 1)]
    products = {(a, b): {} for a, _ in basis[1:] for b, _ in basis[1:]}
    return DGAModel(name=f"wedge{k}", basis=basis, products=products)


def circle_model() -> DGAModel:
    return wedge_of_circles_model(1)


def truncated_poly_model(name: str, degree: int, power: int) -> DGAModel:
    """Truncated polynomial algebra on one even-degree generator, y^(power+1) = 0."""
    if degree % 2 or degree < 2 or power < 1:
        raise ValueError("need an even generator degree >= 2 and power >= 1")
    basis = [("1", 0)] + [(f"{name}^{k}" if k > 1 else name, k * degree)
                          for k in range(1, power + 1)]
    lbl = {k: basis[k][0] for k in range(1, power + 1)}
    products: dict[tuple[str, str], Combo] = {}
    for a in range(1, power + 1):
        for b in range(1, power + 1):
            products[(lbl[a], lbl[b])] = {lbl[a + b]: Fraction(1)} if a + b <= power else {}
    return DGAModel(name=f"poly_{name}", basis=basis, products=products)


def tensor_model(m1: DGAModel, m2: DGAModel, name: str | None = None) -> DGAModel:
    """Graded tensor product with the Koszul sign (a x b)(a' x b') = ±(aa') x (bb')."""
    def lbl(a: str, b: str) -> str:
        if a == m1.unit and b == m2.unit:
            return "1"
        return f"{a}(x){b}"

    basis = [(lbl(a, b), da + db) for a, da in m1.basis for b, db in m2.basis]
    diff: dict[str, Combo] = {}
    for a, da in m1.basis:
        for b, db in m2.basis:
            combo: Combo = {}
            for m, c in m1.d(a).items():
                combo[lbl(m, b)] = combo.get(lbl(m, b), Fraction(0)) + c
            sgn = Fraction(-1) ** da
            for m, c in m2.d(b).items():
                combo[lbl(a, m)] = combo.get(lbl(a, m), Fraction(0)) + sgn * c
            combo = {k: v for k, v in combo.items() if v != 0}
            if combo:
                diff[lbl(a, b)] = combo
    products: dict[tuple[str, str], Combo] = {}
    items = [(a, da, b, db) for a, da in m1.basis for b, db in m2.basis]
    for a, da, b, db in items:
        if da + db == 0:
            continue
        for a2, da2, b2, db2 in items:
            if da2 + db2 == 0:
                continue
            sign = Fraction(-1) ** (db * da2)
            combo: Combo = {}
            for ma, ca in m1.product(a, a2).items():
                for mb, cb in m2.product(b, b2).items():
                    key = lbl(ma, mb)
                    combo[key] = combo.get(key, Fraction(0)) + sign * ca * cb
            combo = {k: v for k, v in combo.items() if v != 0}
            products[(lbl(a, b), lbl(a2, b2))] = combo
    return DGAModel(name=name or f"{m1.name}x{m2.name}",
                    basis=basis, differential=diff, products=products)


def acyclic_extension(model: DGAModel, degree: int, tag: str = "u") -> DGAModel:
    """Adjoin a pair v, u with dv = u and all products with positive elements zero.

    The inclusion of the original model is a quasi-isomorphism.
    """
    v, u = f"{tag}low", f"{tag}high"
    basis = model.basis + [(v, degree), (u, degree + 1)]
    diff = dict(model.differential)
    diff[v] = {u: Fraction(1)}
    products = dict(model.products)
    for n, d in basis:
        if d > 0:
            for x in (v, u):
                products[(n, x)] = {}
                products[(x, n)] = {}
    return DGAModel(name=f"{model.name}+acyclic{degree}",
                    basis=basis, differential=diff, products=products)


# ------------------------------------------------------------------- JSON IO

def model_to_json(model: DGAModel) -> dict:
    return {
        "name": model.name,
        "generators": [{"name": n, "degree": d} for n, d in model.basis],
        "differential": [{"from": n, "to": m, "coeff": str(c)}
                         for n, combo in sorted(model.differential.items())
                         for m, c in sorted(combo.items())],
        "products": [{"left": a, "right": b,
                      "result": [{"basis": m, "coeff": str(c)} for m, c in sorted(combo.items())]}
                     for (a, b), combo in sorted(model.products.items())],
        "unit": model.unit,
        "augmentations": [{n: str(c) for n, c in eps.items()} for eps in model.augmentations],
    }


def model_from_json(data: dict) -> DGAModel:
    basis = [(g["name"], int(g["degree"])) for g in data["generators"]]
    diff: dict[str, Combo] = {}
    for e in data.get("differential", ()):
        diff.setdefault(e["from"], {})[e["to"]] = Fraction(e["coeff"])
    products: dict[tuple[str, str], Combo] = {}
    for p in data.get("products", ()):
        products[(p["left"], p["right"])] = _combo(
            {t["basis"]: t["coeff"] for t in p["result"]})
    aug = None
    if "augmentations" in data:
        a0, a1 = data["augmentations"]
        aug = (_combo(a0), _combo(a1))
    return DGAModel(name=data.get("name", "model"), basis=basis,
                    differential=diff, products=products,
                    unit=data.get("unit", "1"), augmentations=aug)


def load_model(path: str) -> DGAModel:
    with open(path) as fh:
        return model_from_json(json.load(fh))
