import random

import pytest

from iterints.cobar import GroupPresentation
from iterints.dga import (
    DGAModel, exterior_model, sphere_model, tensor_model, torus_model,
    truncated_poly_model, validate, wedge_of_circles_model,
)
from iterints.exactseq import (
    build_sequence, check_exactness, ich2_complex, pi1_sequence_check,
    pi3_sequence_check,
)

Z = GroupPresentation(["t"], [])
F2 = GroupPresentation(["x", "y"], [])
Z2 = GroupPresentation(["x", "y"], ["xyXY"])


def test_sphere2_sequence_dimensions():
    seq = build_sequence(sphere_model(2), 2)
    # 0 -> QH^3=0 -> H^2(ICh_2) -> [H (x) H]^4 (rank 1) -> H^4=0 -> QH^4=0 -> 0
    assert seq.dims == (0, 1, 1, 0, 0)
    assert check_exactness(seq).exact


def test_sphere_sequences_all_weights():
    for n in (2, 3):
        m = sphere_model(n)
        for d in range(1, n + 1):
            rep = check_exactness(build_sequence(m, d))
            assert rep.exact, (n, d, rep.node_results)


def test_torus_sequence_d1():
    seq = build_sequence(torus_model(1), 1)
    # [H^1 (x) H^1]^2 rank 4, cup image rank 1, QH^1 rank 2 -> H^0(ICh_2) rank 5
    assert seq.dims == (2, 5, 4, 1, 0)
    assert check_exactness(seq).exact


def test_torus_sequences_exact():
    for g in (1, 2):
        m = torus_model(g)
        for d in (1, 2):
            rep = check_exactness(build_sequence(m, d))
            assert rep.exact, (g, d, rep.node_results)


def test_zero_model_sequence():
    m = DGAModel(name="point", basis=[("1", 0)])
    assert validate(m) == []
    seq = build_sequence(m, 1)
    assert seq.dims == (0, 0, 0, 0, 0)
    assert check_exactness(seq).exact


def test_product_of_spheres_sequence():
    m = tensor_model(sphere_model(2), sphere_model(2))
    for d in (1, 2):
        rep = check_exactness(build_sequence(m, d))
        assert rep.exact, (d, rep.node_results)


def test_weight_validation():
    with pytest.raises(ValueError):
        build_sequence(sphere_model(2), 0)


def test_connecting_map_is_cup_matrix():
    from iterints.dga import cohomology
    m = torus_model(1)
    seq = build_sequence(m, 1)
    ring = cohomology(m)
    cup = seq.maps[2]
    pos = [i for i, (_, dg, _) in enumerate(ring.classes) if dg > 0]
    pairs = [(i, k) for i in pos for k in pos
             if ring.classes[i][1] + ring.classes[k][1] == 2]
    v4 = ring.classes_in_degree(2)
    for col, (i, k) in enumerate(pairs):
        entry = ring.products.get((i, k), {})
        for row, ci in enumerate(v4):
            assert cup[row][col] == entry.get(ci, 0)


def test_pi1_torus():
    rep = pi1_sequence_check(torus_model(1), Z2)
    assert rep.ok and rep.lhs == 5


def test_pi1_wedge():
    rep = pi1_sequence_check(wedge_of_circles_model(2), F2)
    assert rep.ok and rep.lhs == 6


def test_pi1_circle():
    rep = pi1_sequence_check(wedge_of_circles_model(1), Z)
    assert rep.ok and rep.lhs == 2


def test_pi3_sphere2():
    rep = pi3_sequence_check(sphere_model(2))
    assert rep.ok and rep.lhs == 1


def test_pi3_sphere3():
    rep = pi3_sequence_check(sphere_model(3))
    assert rep.ok and rep.lhs == 1


def test_pi3_s2xs2():
    rep = pi3_sequence_check(tensor_model(sphere_model(2), sphere_model(2)))
    assert rep.ok and rep.lhs == 2


def test_pi3_rejects_nonsimply_connected():
    with pytest.raises(ValueError):
        pi3_sequence_check(torus_model(1))


def random_zero_differential_model(rng: random.Random) -> DGAModel:
    """Tensor of small exterior and truncated-polynomial pieces, d = 0."""
    parts = []
    n_parts = rng.randint(1, 3)
    for i in range(n_parts):
        if rng.random() < 0.5:
            deg = rng.choice([1, 3, 5])
            parts.append(exterior_model([(f"x{i}", deg)], f"ext{i}"))
        else:
            deg = rng.choice([2, 4])
            parts.append(truncated_poly_model(f"y{i}", deg, rng.randint(1, 6 // deg)))
    model = parts[0]
    for p in parts[1:]:
        model = tensor_model(model, p)
    return model


def test_randomized_models_exactness():
    rng = random.Random(20250810)
    for trial in range(6):
        m = random_zero_differential_model(rng)
        assert validate(m) == []
        for d in (1, 2):
            rep = check_exactness(build_sequence(m, d))
            assert rep.exact, (trial, d, m.name, rep.node_results)


def test_ich2_h0_equals_bar_minus_constants():
    from iterints.bar import bar_cohomology, build_bar
    m = torus_model(1)
    full = bar_cohomology(build_bar(m, 2, 2))[2][0]
    ich = ich2_complex(m, 3).cohomology_rank(0)
    assert full == ich + 1
