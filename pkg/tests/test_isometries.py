"""Projective maps, the simplex chart, star maps, focusing, classification."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbertgeo import (
    HilbertSpace,
    ProjectiveMap,
    WSpace,
    axis_coords,
    axis_coords_inv,
    build_ellipsoid,
    build_polytope,
    classify_2d,
    clr,
    clr_inv,
    distance,
    fit_projective,
    focusing_probe,
    is_cone_3d,
    projectivity_check,
    reciprocal_map,
    sampled_isometry_check,
    simplex_projective,
    standard_simplex,
    variation_norm,
    vinberg_star,
    w_basis,
)
from hilbertgeo.errors import (
    DegenerateBasis,
    DegenerateInput,
    ImageEscapedDomain,
    NotInSimplex,
    PointAtInfinity,
    Unsupported,
)

SQUARE = [[-1, -1], [1, -1], [1, 1], [-1, 1]]


def square():
    return build_polytope(SQUARE)


def test_projective_map_roundtrip():
    M = np.array([[2.0, 1.0, 0.5], [0.0, 1.5, -0.2], [0.3, 0.0, 1.0]])
    g = ProjectiveMap(M)
    p = np.array([0.3, -0.4])
    assert np.allclose(g.inverse()(g(p)), p, atol=1e-12)
    assert np.allclose(g.compose(g.inverse())(p), p, atol=1e-12)


def test_projective_map_point_at_infinity():
    g = ProjectiveMap(np.array([[0.0, 0.0, 1.0], [0.0, 1.0, 0.0],
                                [1.0, 0.0, 0.0]]))
    with pytest.raises(PointAtInfinity):
        g(np.array([0.0, 5.0]))


def test_fit_projective_recovers_a_map():
    M = np.array([[1.2, -0.3, 0.4], [0.2, 0.9, -0.1], [0.05, 0.1, 1.0]])
    g = ProjectiveMap(M)
    src = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [0.4, 0.3]])
    dst = np.array([g(p) for p in src])
    h = fit_projective(src, dst)
    assert np.allclose(h.matrix, g.matrix, atol=1e-9)


def test_fit_projective_square_to_trapezoid_diagonal_point():
    src = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    dst = np.array([[0.0, 0.0], [2.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    g = fit_projective(src, dst)
    # diagonal intersections correspond: (1/2, 1/2) -> (2/3, 2/3)
    assert np.allclose(g([0.5, 0.5]), [2 / 3, 2 / 3], atol=1e-12)


def test_fit_projective_rejects_degenerate_configurations():
    with pytest.raises(DegenerateBasis):
        fit_projective(np.array([[0, 0], [1, 0], [2, 0], [1, 1.0]]),
                       np.array([[0, 0], [1, 0], [0, 1], [1, 1.0]]))
    with pytest.raises(DegenerateBasis):
        fit_projective(np.array([[0, 0], [1, 0], [0, 1]]),
                       np.array([[0, 0], [1, 0], [0, 1.0]]))


def test_clr_known_value_and_roundtrip():
    theta = clr([0.5, 0.25, 0.25])
    assert np.allclose(theta, np.array([2 / 3, -1 / 3, -1 / 3]) * math.log(2),
                       atol=1e-15)
    assert abs(theta.sum()) < 1e-15
    assert np.allclose(clr_inv(theta), [0.5, 0.25, 0.25], atol=1e-15)
    with pytest.raises(NotInSimplex):
        clr([0.5, 0.5, 0.0])
    with pytest.raises(NotInSimplex):
        clr([0.5, 0.2, 0.2])


@settings(max_examples=60, deadline=None)
@given(a=st.floats(min_value=0.05, max_value=10.0),
       b=st.floats(min_value=0.05, max_value=10.0),
       c=st.floats(min_value=0.05, max_value=10.0))
def test_clr_roundtrip_property(a, b, c):
    x = np.array([a, b, c])
    x = x / x.sum()
    assert np.allclose(clr_inv(clr(x)), x, atol=1e-12)


def test_chart_is_isometry():
    rng = np.random.default_rng(21)
    for n in (2, 3):
        dev = sampled_isometry_check(HilbertSpace(standard_simplex(n)),
                                     WSpace(n), clr, rng, samples=200)
        assert dev < 1e-11


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(min_value=-5, max_value=5), min_size=3,
                max_size=6))
def test_variation_norm_is_seminorm_on_constants(vals):
    theta = np.array(vals)
    assert variation_norm(theta + 2.5) == pytest.approx(
        variation_norm(theta), abs=1e-12)
    assert variation_norm(theta) >= 0.0


def test_axis_coords_roundtrip():
    V = w_basis(2)
    assert np.allclose(V.sum(axis=0), 0.0, atol=1e-15)
    rng = np.random.default_rng(8)
    for _ in range(20):
        a = rng.normal(size=2)
        assert np.allclose(axis_coords(axis_coords_inv(a)), a, atol=1e-12)


def test_reciprocal_is_an_involutive_isometry():
    rng = np.random.default_rng(6)
    s2 = standard_simplex(2)
    assert np.allclose(reciprocal_map([0.5, 0.25, 0.25]), [0.2, 0.4, 0.4],
                       atol=1e-15)
    for _ in range(50):
        x = s2.sample_interior(rng, 1, pull=0.01)
        assert np.allclose(reciprocal_map(reciprocal_map(x)), x, atol=1e-13)
    dev = sampled_isometry_check(HilbertSpace(s2), HilbertSpace(s2),
                                 reciprocal_map, rng, samples=150)
    assert dev < 1e-11


def test_reciprocal_is_not_projective():
    rng = np.random.default_rng(17)
    res = projectivity_check(standard_simplex(2), reciprocal_map, rng)
    assert res > 1e-3


def test_projective_maps_pass_the_projectivity_check():
    rng = np.random.default_rng(18)
    g = simplex_projective(np.diag([2.0, 1.0, 0.5]))
    assert projectivity_check(standard_simplex(2), g, rng) < 1e-10


def test_simplex_projective_validates():
    with pytest.raises(DegenerateInput):
        simplex_projective(np.zeros((3, 3)))
    g = simplex_projective(np.diag([1.0, 1.0, -1.0]))
    with pytest.raises(ImageEscapedDomain):
        g([1 / 3, 1 / 3, 1 / 3])


def test_focusing_distinguishes_the_reciprocal():
    s2 = standard_simplex(2)
    target = np.array([1.0, 0.0, 0.0])
    starts = [np.array([1 / 3, 1 / 3, 1 / 3]), np.array([0.2, 0.6, 0.2]),
              np.array([0.2, 0.2, 0.6])]
    bad = focusing_probe(s2, reciprocal_map, target, starts)
    assert not bad.focused
    assert bad.spread > 0.1
    g = simplex_projective(np.diag([2.0, 1.0, 0.7]))
    good = focusing_probe(s2, g, target, starts)
    assert good.focused
    assert good.spread < 1e-3


def test_focusing_needs_two_starts():
    with pytest.raises(DegenerateInput):
        focusing_probe(standard_simplex(2), reciprocal_map,
                       np.array([1.0, 0.0, 0.0]),
                       [np.array([1 / 3, 1 / 3, 1 / 3])])


def test_vinberg_star_orthant_matches_reciprocal_slice():
    rng = np.random.default_rng(23)
    for _ in range(50):
        x = np.exp(rng.normal(size=3))
        star = vinberg_star("orthant", x)
        assert np.allclose(star / star.sum(), reciprocal_map(x / x.sum()),
                           atol=1e-13)
    assert np.allclose(vinberg_star("orthant", vinberg_star("orthant",
                                                            np.array([2.0, 5.0, 0.5]))),
                       [2.0, 5.0, 0.5], atol=1e-13)


def test_vinberg_star_lorentz_is_the_antipode_on_the_slice():
    star = vinberg_star("lorentz", np.array([2.0, 1.0, 0.0]))
    assert np.allclose(star / star[0], [1.0, -0.5, 0.0], atol=1e-15)
    rng = np.random.default_rng(24)
    disk = build_ellipsoid([0, 0], np.eye(2))
    for _ in range(50):
        p = disk.sample_interior(rng, 1, pull=0.01)
        z = vinberg_star("lorentz", np.concatenate([[1.0], p]))
        assert np.allclose(z[1:] / z[0], -p, atol=1e-13)
    with pytest.raises(DegenerateInput):
        vinberg_star("lorentz", np.array([1.0, 2.0, 0.0]))
    with pytest.raises(Unsupported):
        vinberg_star("cube", np.array([1.0, 1.0]))


def test_sampled_isometry_check_flags_escapes():
    dom = square()
    rng = np.random.default_rng(25)
    shift = lambda p: p + np.array([5.0, 0.0])
    with pytest.raises(ImageEscapedDomain):
        sampled_isometry_check(HilbertSpace(dom), HilbertSpace(dom),
                               shift, rng, samples=5)


def test_classifier_triangles_and_squares():
    rng = np.random.default_rng(26)
    tri = build_polytope([[0, 0], [1, 0], [0, 1]])
    tri2 = build_polytope([[0, 0], [2, 0], [0, 1]])
    out = classify_2d(tri, tri2, rng)
    assert out.verdict == "projectively-equivalent"
    assert out.max_deviation < 1e-7
    # the witness transports distances on ambient points
    x, y = np.array([0.2, 0.3]), np.array([0.5, 0.1])
    assert abs(distance(tri, x, y)
               - distance(tri2, out.apply_ambient(x), out.apply_ambient(y))) < 1e-10
    assert classify_2d(square(), tri, rng).verdict == "not-isometric"


def test_classifier_quadrilateral_and_ellipse():
    rng = np.random.default_rng(27)
    quad = build_polytope([[0, 0], [3, 0], [2.5, 2], [-0.5, 1.5]])
    out = classify_2d(square(), quad, rng)
    assert out.verdict == "projectively-equivalent"
    assert out.max_deviation < 1e-7
    disk = build_ellipsoid([0, 0], np.eye(2))
    ell = build_ellipsoid([0.3, -0.1], [[2.0, 0.3], [0.3, 0.5]])
    out = classify_2d(disk, ell, rng)
    assert out.verdict == "projectively-equivalent"
    assert out.max_deviation < 1e-7
    assert classify_2d(square(), disk, rng).verdict == "not-isometric"
    pent = build_polytope([[0, 0], [1, 0], [1, 1], [0.5, 1.5], [0, 1]])
    assert classify_2d(square(), pent, rng).verdict == "not-isometric"


def test_classifier_needs_plane_domains():
    rng = np.random.default_rng(28)
    with pytest.raises(Unsupported):
        classify_2d(standard_simplex(3), square(), rng)


def test_is_cone_3d():
    pyr = build_polytope([[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0],
                          [0.5, 0.5, 1]])
    flag, apex, base = is_cone_3d(pyr)
    assert flag
    assert np.allclose(apex, [0.5, 0.5, 1.0])
    assert base.dim == 2
    cube = build_polytope([[sx, sy, sz] for sx in (0, 1)
                           for sy in (0, 1) for sz in (0, 1)])
    assert is_cone_3d(cube) == (False, None, None)
    tetra = standard_simplex(3)
    flag, apex, base = is_cone_3d(tetra)
    assert flag  # every simplex is a cone over a facet
