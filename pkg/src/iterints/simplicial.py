"""Finite reduced simplicial sets with explicit face maps.

Only nondegenerate simplices are stored; face references may point at
degenerate simplices, written ``s1(s0(x))`` in files.  A single
0-simplex is required, so every vertex is the base point and the chain
complex is automatically reduced.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field


@dataclass(frozen=True)
class SimplexRef:
    """A possibly degenerate simplex: ops applied outermost-first to base."""
    base: str
    ops: tuple[int, ...] = ()

    @property
    def degenerate(self) -> bool:
        return bool(self.ops)

    def __repr__(self):
        out = self.base
        for i in reversed(self.ops):
            out = f"s{i}({out})"
        return out


_REF_RE = re.compile(r"^s(\d+)\((.*)\)$")


def parse_ref(text: str) -> SimplexRef:
    text = text.strip()
    m = _REF_RE.match(text)
    if not m:
        return SimplexRef(text)
    inner = parse_ref(m.group(2))
    return SimplexRef(inner.base, (int(m.group(1)),) + inner.ops)


@dataclass
class SimplicialSetModel:
    name: str
    simplices: dict[int, list[str]]                 # dim -> nondegenerate ids
    faces: dict[str, tuple[SimplexRef, ...]]        # id -> (d_0, ..., d_n)
    basepoint: str
    dim_of: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        for dim, ids in self.simplices.items():
            for s in ids:
                self.dim_of[s] = dim

    def dim(self, ref: SimplexRef) -> int:
        return self.dim_of[ref.base] + len(ref.ops)

    def face(self, ref: SimplexRef, i: int) -> SimplexRef:
        """d_i applied to a possibly degenerate simplex."""
        if not ref.ops:
            return self.faces[ref.base][i]
        j, rest = ref.ops[0], SimplexRef(ref.base, ref.ops[1:])
        if i == j or i == j + 1:
            return rest
        if i < j:
            inner = self.face(rest, i)
            return SimplexRef(inner.base, (j - 1,) + inner.ops)
        inner = self.face(rest, i - 1)
        return SimplexRef(inner.base, (j,) + inner.ops)

    def front_face(self, ref: SimplexRef, j: int) -> SimplexRef:
        """Restriction to the first j+1 vertices."""
        out = ref
        for k in range(self.dim(ref), j, -1):
            out = self.face(out, k)
        return out

    def rear_face(self, ref: SimplexRef, j: int) -> SimplexRef:
        """Restriction to the last j+1 vertices."""
        out = ref
        for _ in range(self.dim(ref) - j):
            out = self.face(out, 0)
        return out

    def max_dim(self) -> int:
        return max(self.simplices)

    def nondegenerate(self, min_dim: int = 0) -> list[str]:
        return [s for d in sorted(self.simplices) if d >= min_dim
                for s in self.simplices[d]]


def validate_simplicial(X: SimplicialSetModel) -> list[str]:
    bad: list[str] = []
    if X.simplices.get(0, []) != [X.basepoint]:
        bad.append("model must have the base point as its only 0-simplex")
    ids = X.nondegenerate()
    if len(set(ids)) != len(ids):
        bad.append("duplicate simplex ids")
    for s in ids:
        n = X.dim_of[s]
        if n == 0:
            continue
        fs = X.faces.get(s)
        if fs is None or len(fs) != n + 1:
            bad.append(f"{s} must list {n + 1} faces")
            continue
        for ref in fs:
            if ref.base not in X.dim_of:
                bad.append(f"{s} has unknown face {ref!r}")
            elif X.dim(ref) != n - 1:
                bad.append(f"face {ref!r} of {s} has wrong dimension")
        # simplicial identities d_i d_j = d_{j-1} d_i for i < j
        if n >= 2:
            for jj in range(n + 1):
                for ii in range(jj):
                    lhs = X.face(X.faces[s][jj], ii)
                    rhs = X.face(X.faces[s][ii], jj - 1)
                    if lhs != rhs:
                        bad.append(f"simplicial identity fails on {s}: d_{ii} d_{jj}")
    return bad


# ------------------------------------------------------------------- JSON IO

def simplicial_from_json(data: dict) -> SimplicialSetModel:
    simplices: dict[int, list[str]] = {}
    faces: dict[str, tuple[SimplexRef, ...]] = {}
    for dim_str, entries in data["simplices"].items():
        dim = int(dim_str)
        ids = []
        for e in entries:
            if isinstance(e, str):
                ids.append(e)
            else:
                ids.append(e["id"])
                faces[e["id"]] = tuple(parse_ref(f) for f in e.get("faces", ()))
        simplices[dim] = ids
    X = SimplicialSetModel(name=data.get("name", "space"),
                           simplices=simplices, faces=faces,
                           basepoint=data["basepoint"])
    problems = validate_simplicial(X)
    if problems:
        raise ValueError("; ".join(problems))
    return X


def simplicial_to_json(X: SimplicialSetModel) -> dict:
    out: dict = {"name": X.name, "basepoint": X.basepoint, "simplices": {}}
    for dim in sorted(X.simplices):
        if dim == 0:
            out["simplices"]["0"] = list(X.simplices[0])
        else:
            out["simplices"][str(dim)] = [
                {"id": s, "faces": [repr(r) for r in X.faces[s]]}
                for s in X.simplices[dim]]
    return out


def load_simplicial(path: str) -> SimplicialSetModel:
    with open(path) as fh:
        return simplicial_from_json(json.load(fh))


# ------------------------------------------------------------- built-in models

def circle_space() -> SimplicialSetModel:
    return simplicial_from_json({
        "name": "circle", "basepoint": "pt",
        "simplices": {"0": ["pt"], "1": [{"id": "e", "faces": ["pt", "pt"]}]},
    })


def wedge_of_circles_space(k: int = 2) -> SimplicialSetModel:
    return simplicial_from_json({
        "name": f"wedge{k}", "basepoint": "pt",
        "simplices": {"0": ["pt"],
                      "1": [{"id": f"e{i}", "faces": ["pt", "pt"]}
                            for i in range(1, k + 1)]},
    })


def torus_space() -> SimplicialSetModel:
    """One-vertex torus: edges a, b, c and triangles U, L with c ~ ab ~ ba."""
    return simplicial_from_json({
        "name": "torus", "basepoint": "pt",
        "simplices": {
            "0": ["pt"],
            "1": [{"id": e, "faces": ["pt", "pt"]} for e in ("a", "b", "c")],
            "2": [{"id": "U", "faces": ["b", "c", "a"]},
                  {"id": "L", "faces": ["a", "c", "b"]}],
        },
    })


def sphere2_space() -> SimplicialSetModel:
    """Boundary-collapsed 2-simplex: one vertex and one 2-cell."""
    return simplicial_from_json({
        "name": "sphere2", "basepoint": "pt",
        "simplices": {
            "0": ["pt"],
            "2": [{"id": "sigma", "faces": ["s0(pt)", "s0(pt)", "s0(pt)"]}],
        },
    })
