import math

import numpy as np
import pytest

from geomlab import (
    DegenerateDirectionError,
    InputError,
    UnsupportedDimensionError,
    c0_truncation,
    lp_space,
    norm_eval,
    polygon_space,
    regular_polygon_vertices,
    sample_sphere,
    sphere_grid,
    unit_vector,
    validate_norm_axioms,
)
from geomlab.norms import ball_vertices


def test_euclidean_345(l2):
    assert norm_eval(l2, [3, 4]) == 5.0


def test_l3_unit_coordinate_vector(l3):
    assert norm_eval(l3, [1, 0]) == 1.0


def test_c0_truncation_one_coordinate():
    # 1 + (1/4)^(1/2)
    assert norm_eval(c0_truncation(1), [1.0]) == 1.5


def test_c0_truncation_formula(rng):
    sp = c0_truncation(5)
    x = rng.standard_normal(5)
    expected = np.abs(x).max() + math.sqrt(sum(x[i] ** 2 / 4 ** (i + 1) for i in range(5)))
    assert norm_eval(sp, x) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("p", [1, 1.5, 2, 3, 7, math.inf])
def test_lp_matches_numpy(p, rng):
    x = rng.standard_normal((50, 4))
    np.testing.assert_allclose(lp_space(p, 4).norm(x), np.linalg.norm(x, ord=p, axis=1), rtol=1e-13)


def test_large_p_does_not_overflow():
    assert norm_eval(lp_space(400, 2), [1e3, 1e3]) == pytest.approx(1e3 * 2 ** (1 / 400))


@pytest.mark.parametrize("bad", [[1.0], [1.0, 2.0, 3.0], [[1.0, 2.0]]])
def test_dimension_mismatch(l2, bad):
    with pytest.raises(InputError):
        norm_eval(l2, bad)


@pytest.mark.parametrize("bad", [[np.nan, 0.0], [np.inf, 1.0]])
def test_non_finite(l2, bad):
    with pytest.raises(InputError):
        norm_eval(l2, bad)


def test_p_below_one_rejected():
    with pytest.raises(InputError):
        lp_space(0.5, 2)


def test_unit_vector_examples(linf, l2, l3):
    np.testing.assert_array_equal(unit_vector(linf, [2, 1]), [1.0, 0.5])
    np.testing.assert_allclose(unit_vector(l2, [1, 1]), [math.sqrt(2) / 2] * 2, rtol=1e-15)
    np.testing.assert_allclose(unit_vector(l3, [1, 1]), [2 ** (-1 / 3)] * 2, rtol=1e-15)


def test_unit_vector_zero(l2):
    with pytest.raises(DegenerateDirectionError):
        unit_vector(l2, [0, 0])


def test_unit_vector_norm_is_one(catalog_space, rng):
    for u in rng.standard_normal((1000, catalog_space.dim)) * rng.uniform(1e-3, 1e3, (1000, 1)):
        assert abs(norm_eval(catalog_space, unit_vector(catalog_space, u)) - 1) <= 1e-12


def test_sphere_grid_l2_four(l2):
    np.testing.assert_allclose(sphere_grid(l2, 4), [[1, 0], [0, 1], [-1, 0], [0, -1]], atol=1e-15)


def test_sphere_grid_linf_four(linf):
    g = sphere_grid(linf, 4)
    np.testing.assert_allclose(g, [[1, 0], [0, 1], [-1, 0], [0, -1]], atol=1e-15)
    assert np.all(np.abs(g).max(axis=1) == 1.0)


def test_sphere_grid_l1_diagonal(l1):
    g = sphere_grid(l1, 8)
    np.testing.assert_allclose(g[1], [0.5, 0.5], rtol=1e-15)


def test_sphere_grid_errors(l2):
    with pytest.raises(UnsupportedDimensionError):
        sphere_grid(lp_space(2, 3), 16)
    with pytest.raises(InputError):
        sphere_grid(l2, 3)


def test_sphere_grid_traverses_without_repetition(catalog_space):
    if catalog_space.dim != 2:
        pytest.skip("planar only")
    g = sphere_grid(catalog_space, 4096)
    ang = np.unwrap(np.arctan2(g[:, 1], g[:, 0]))
    assert np.all(np.diff(ang) > 0)


def test_sample_sphere_on_sphere_and_deterministic(catalog_space):
    a = sample_sphere(catalog_space, 1, 7)
    assert abs(catalog_space.norm(a[0]) - 1) <= 1e-12
    b = sample_sphere(catalog_space, 50, 11)
    np.testing.assert_array_equal(b, sample_sphere(catalog_space, 50, 11))
    np.testing.assert_allclose(catalog_space.norm(b), 1.0, atol=1e-12)


def test_sample_sphere_l2_ball_containment():
    pts = sample_sphere(lp_space(2, 3), 1000, 3)
    assert np.abs(pts).max() <= 1.0


def test_axioms_l3_pass(l3):
    assert all(it.status == "pass" for it in validate_norm_axioms(l3, 1000, 0))


def test_square_polygon_is_max_norm(linf, rng):
    sq = polygon_space([[1, 1], [1, -1]])
    assert all(it.status == "pass" for it in validate_norm_axioms(sq, 1000, 1))
    x = rng.standard_normal((1000, 2)) * 5
    np.testing.assert_allclose(sq.norm(x), linf.norm(x), atol=1e-12)


def test_collinear_polygon_rejected():
    with pytest.raises(InputError):
        polygon_space([[1, 1], [2, 2], [-3, -3]])


def test_polygon_needs_two_vertices():
    with pytest.raises(InputError):
        polygon_space([[1, 0]])


def test_hexagon_vertices_have_unit_norm():
    hexagon = polygon_space(regular_polygon_vertices(6))
    np.testing.assert_allclose(hexagon.norm(regular_polygon_vertices(6)), 1.0, atol=1e-15)
    assert norm_eval(hexagon, [0, 0]) == 0.0


def test_axiom_check_catches_a_broken_norm():
    class Squared:
        dim = 2

        def describe(self):
            return "broken"

        def evaluate(self, a):
            return np.sum(a * a, axis=-1)

    from geomlab import NormedSpace

    items = {it.name: it for it in validate_norm_axioms(NormedSpace(Squared()), 200, 0)}
    assert items["axiom_homogeneity"].status == "fail"
    assert items["axiom_homogeneity"].witness is not None


def test_c0_truncation_sandwich(rng):
    sp = c0_truncation(8)
    x = rng.standard_normal((1000, 8))
    n = sp.norm(x)
    assert np.all(np.abs(x).max(1) <= n)
    assert np.all(n <= np.abs(x).max(1) + np.linalg.norm(x, axis=1) + 1e-15)


def test_ball_vertices():
    assert ball_vertices(lp_space(2, 2)) is None
    v = ball_vertices(lp_space(math.inf, 3))
    assert v.shape == (8, 3) and np.all(np.abs(v) == 1)
    np.testing.assert_allclose(lp_space(1, 4).norm(ball_vertices(lp_space(1, 4))), 1.0)
