import itertools
from fractions import Fraction

import pytest

from iterints.cobar import (
    GroupPresentation, bar_cobar_rank_compare, bracket_differential, build_cobar,
    cobar_degree, cochain_dga, group_ring_dimension, h0_algebra, magnus_image,
    presentation_from_json, truncated_quotient_dimension,
)
from iterints.dga import validate
from iterints.rational import SparseVector
from iterints.simplicial import (
    SimplexRef, circle_space, parse_ref, simplicial_from_json, simplicial_to_json,
    sphere2_space, torus_space, validate_simplicial, wedge_of_circles_space,
)

Z = GroupPresentation(["t"], [])
F2 = GroupPresentation(["x", "y"], [])
Z2 = GroupPresentation(["x", "y"], ["xyXY"])
TRIVIAL = GroupPresentation([], [])


def test_parse_ref():
    assert parse_ref("e") == SimplexRef("e")
    assert parse_ref("s0(v)") == SimplexRef("v", (0,))
    assert parse_ref("s1(s0(v))") == SimplexRef("v", (1, 0))


def test_validate_builtin_spaces():
    for X in (circle_space(), wedge_of_circles_space(2), torus_space(), sphere2_space()):
        assert validate_simplicial(X) == []


def test_simplicial_json_round_trip():
    X = torus_space()
    X2 = simplicial_from_json(simplicial_to_json(X))
    assert X2.simplices == X.simplices
    assert X2.faces == X.faces


def test_bad_face_count_rejected():
    with pytest.raises(ValueError):
        simplicial_from_json({
            "basepoint": "pt",
            "simplices": {"0": ["pt"], "1": [{"id": "e", "faces": ["pt"]}]},
        })


def test_circle_brackets_closed():
    X = circle_space()
    assert bracket_differential(X, "e") == {}
    cx = build_cobar(X, 4, 2)
    assert cx.homology_rank(0) == 5     # words of length 0..4 in [e]
    assert cx.homology_rank(1) == 0


def test_torus_bracket_differential():
    X = torus_space()
    dU = bracket_differential(X, "U")
    # faces (d0,d1,d2) = (b,c,a): -[b] + [c] - [a] - [a|b]
    assert dU == {("b",): Fraction(-1), ("c",): Fraction(1),
                  ("a",): Fraction(-1), ("a", "b"): Fraction(-1)}


def test_cobar_d_squared_zero():
    for X in (circle_space(), wedge_of_circles_space(2), torus_space(), sphere2_space()):
        cx = build_cobar(X, 3, 3)
        assert cx.complex().check_d_squared() == []


def test_sphere2_cobar_ranks():
    cx = build_cobar(sphere2_space(), 4, 4)
    for j in range(5):
        assert cx.homology_rank(j) == (1 if j <= 4 else 0)


def test_h0_circle_truncations():
    cx = build_cobar(circle_space(), 4, 1)
    for s in (1, 2, 3, 4):
        _, dim = h0_algebra(cx, s)
        assert dim == s


def test_h0_wedge_truncations():
    cx = build_cobar(wedge_of_circles_space(2), 4, 1)
    for s in (1, 2, 3, 4):
        _, dim = h0_algebra(cx, s)
        assert dim == 2 ** s - 1


def test_h0_torus_truncations():
    cx = build_cobar(torus_space(), 4, 1)
    for s in (1, 2, 3, 4):
        _, dim = h0_algebra(cx, s)
        assert dim == s * (s + 1) // 2


def test_h0_cap_guard():
    cx = build_cobar(circle_space(), 2, 1)
    with pytest.raises(ValueError):
        h0_algebra(cx, 5)


def test_magnus_inverse_cancels():
    img = magnus_image([1, -1], 1, 5)
    assert img == {(): Fraction(1)}


def test_group_ring_dimensions():
    for s in (1, 2, 3, 4, 5):
        assert group_ring_dimension(Z, s) == s
        assert group_ring_dimension(F2, s) == 2 ** s - 1
        assert group_ring_dimension(Z2, s) == s * (s + 1) // 2
    assert group_ring_dimension(TRIVIAL, 3) == 1


def test_h0_matches_group_ring_oracle():
    cases = [(circle_space(), Z), (wedge_of_circles_space(2), F2), (torus_space(), Z2)]
    for X, pres in cases:
        cx = build_cobar(X, 4, 1)
        for s in (1, 2, 3, 4):
            _, dim = h0_algebra(cx, s)
            assert dim == group_ring_dimension(pres, s), (X.name, s)


def test_truncated_quotient_dimension_free():
    assert truncated_quotient_dimension(2, [], 3) == 7


def test_cochain_dga_validates():
    for X in (circle_space(), wedge_of_circles_space(2), torus_space(), sphere2_space()):
        model = cochain_dga(X)
        assert validate(model) == [], X.name


def test_cochain_dga_torus_cup():
    model = cochain_dga(torus_space())
    # cup of the dual edges lands on the triangles with AW coefficients
    ab = model.product("a", "b")
    assert ab == {"U": Fraction(1)}
    ba = model.product("b", "a")
    assert ba == {"L": Fraction(1)}


def test_bar_cobar_circle():
    rep = bar_cobar_rank_compare(circle_space(), 3, 1)
    assert rep.ok
    assert rep.rows[0] == (0, 4, 4)     # empty word plus lengths 1..3


def test_bar_cobar_wedge2():
    rep = bar_cobar_rank_compare(wedge_of_circles_space(2), 2, 1)
    assert rep.ok
    assert rep.rows[0] == (0, 7, 7)


def test_bar_cobar_torus_and_sphere():
    rep = bar_cobar_rank_compare(torus_space(), 3, 3)
    assert rep.ok, rep.rows
    rep2 = bar_cobar_rank_compare(sphere2_space(), 2, 2)
    assert rep2.ok, rep2.rows
    # loop-space pattern of the 2-sphere: rank 1 in each degree up to the cap
    assert [r for _, r, _ in rep2.rows] == [1, 1, 1]


def test_presentation_json():
    pres = presentation_from_json({"generators": ["x", "y"], "relators": ["xyXY"]})
    assert pres.generators == ["x", "y"]
    assert group_ring_dimension(pres, 3) == 6
