"""Distance values, cross-ratio identities, rigidity, boundary profiles."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbertgeo import (
    asymptotic_profile,
    build_ellipsoid,
    build_polytope,
    cross_ratio,
    distance,
    gromov_product,
    hilbert_ball,
    is_rigid_chord,
    standard_simplex,
)
from hilbertgeo.errors import (
    DegenerateDenominator,
    NotCollinear,
    NotOnBoundary,
    PointNotInterior,
)

SQUARE = [[-1, -1], [1, -1], [1, 1], [-1, 1]]


def square():
    return build_polytope(SQUARE)


def test_cross_ratio_known_values():
    assert abs(cross_ratio([0.0], [1.0], [2.0], [3.0]) - 4.0) < 1e-15
    assert abs(cross_ratio([0.0], [1.0], [2.0], [4.0]) - 3.0) < 1e-15
    assert abs(cross_ratio([0.0], [1.0], [1.0], [3.0]) - 1.0) < 1e-15
    # works along any embedded line
    u = np.array([1.0, 2.0, -1.0]) / 3.0
    pts = [t * u for t in (0.0, 1.0, 2.0, 3.0)]
    assert abs(cross_ratio(*pts) - 4.0) < 1e-12


def test_cross_ratio_rejects_bad_input():
    with pytest.raises(NotCollinear):
        cross_ratio([0, 0], [1, 0], [1, 1], [0, 1])
    with pytest.raises(DegenerateDenominator):
        cross_ratio([0.0], [0.0], [1.0], [2.0])


@settings(max_examples=80, deadline=None)
@given(t1=st.floats(min_value=0.05, max_value=0.3),
       t2=st.floats(min_value=0.35, max_value=0.6),
       t3=st.floats(min_value=0.65, max_value=0.95))
def test_cross_ratio_multiplicative_along_line(t1, t2, t3):
    a = np.array([-2.0, 1.0])
    b = np.array([3.0, -0.5])
    p = lambda t: a + t * (b - a)
    lhs = cross_ratio(a, p(t1), p(t2), b) * cross_ratio(a, p(t2), p(t3), b)
    rhs = cross_ratio(a, p(t1), p(t3), b)
    assert abs(lhs - rhs) <= 1e-9 * rhs


def test_distance_known_values():
    assert abs(distance(square(), [-0.5, 0], [0.5, 0])
               - math.log(9.0)) < 1e-12
    s2 = standard_simplex(2)
    assert abs(distance(s2, [0.5, 0.25, 0.25], [0.25, 0.5, 0.25])
               - math.log(4.0)) < 1e-12
    disk = build_ellipsoid([0, 0], np.eye(2))
    assert abs(distance(disk, [0, 0], [0.5, 0]) - math.log(3.0)) < 1e-12


def test_distance_is_zero_only_on_the_diagonal():
    dom = square()
    assert distance(dom, [0.2, -0.3], [0.2, -0.3]) == 0.0
    assert distance(dom, [0.2, -0.3], [0.2001, -0.3]) > 0.0


def test_distance_requires_interior_points():
    dom = square()
    with pytest.raises(PointNotInterior):
        distance(dom, [1.0, 0.0], [0.0, 0.0])
    with pytest.raises(PointNotInterior):
        distance(dom, [0.0, 0.0], [0.0, 1.5])


def test_simplex_distance_matches_log_ratio_form():
    # d(x, y) = ln max_i x_i/y_i + ln max_i y_i/x_i on the open simplex
    s2 = standard_simplex(2)
    rng = np.random.default_rng(5)
    for _ in range(100):
        x = s2.sample_interior(rng, 1, pull=0.01)
        y = s2.sample_interior(rng, 1, pull=0.01)
        want = math.log(np.max(x / y)) + math.log(np.max(y / x))
        assert abs(distance(s2, x, y) - want) < 1e-11


def test_distance_additive_along_chords():
    dom = square()
    rng = np.random.default_rng(9)
    for _ in range(50):
        x, y = dom.sample_interior(rng, 2, pull=0.02)
        t = rng.uniform(0.1, 0.9)
        z = x + t * (y - x)
        gap = distance(dom, x, z) + distance(dom, z, y) - distance(dom, x, y)
        assert abs(gap) < 1e-10


def test_gromov_product_nonnegative():
    dom = square()
    rng = np.random.default_rng(13)
    for _ in range(50):
        p, x, y = dom.sample_interior(rng, 3, pull=0.02)
        assert gromov_product(dom, p, x, y) >= -1e-10


def test_rigidity_square_edge_to_edge_with_witness():
    r = is_rigid_chord(square(), [-0.5, 0.0], [0.5, 0.0])
    assert not r.rigid
    assert r.witness is not None
    assert abs(r.witness[1]) > 1e-3  # genuinely off the chord
    assert r.additivity_gap <= 1e-9


def test_rigidity_vertex_chords_are_rigid():
    r = is_rigid_chord(square(), [-0.5, -0.5], [0.5, 0.5])
    assert r.rigid
    assert r.witness is None


def test_rigidity_strictly_convex_domains():
    disk = build_ellipsoid([0, 0], np.eye(2))
    assert is_rigid_chord(disk, [-0.3, 0.1], [0.4, 0.2]).rigid


def test_rigidity_skew_edges_of_simplex():
    tetra = standard_simplex(3)
    a = np.array([0.5, 0.5, 0.0, 0.0])
    b = np.array([0.0, 0.0, 0.5, 0.5])
    r = is_rigid_chord(tetra, a + 0.25 * (b - a), a + 0.75 * (b - a))
    assert r.rigid


def test_rigidity_cube_facet_to_facet():
    cube = build_polytope([[sx, sy, sz] for sx in (-1, 1)
                           for sy in (-1, 1) for sz in (-1, 1)])
    r = is_rigid_chord(cube, [0.0, 0.0, -0.5], [0.1, 0.2, 0.5])
    assert not r.rigid
    assert r.additivity_gap <= 1e-9


def test_asymptotic_same_point_stays_bounded():
    prof = asymptotic_profile(square(), [-0.3, -0.2], [0.4, 0.1],
                              [1.0, 1.0], [1.0, 1.0])
    assert prof.mode == "same-point"
    assert prof.sup < 10.0
    assert prof.exceeded_at is None


def test_asymptotic_parallel_has_cross_ratio_limit():
    prof = asymptotic_profile(square(), [-0.5, 0.0], [0.5, 0.0],
                              [-0.5, 1.0], [0.5, 1.0])
    assert prof.mode == "parallel"
    # limit is the cross ratio of the targets inside the carrying edge
    want = cross_ratio([-1.0, 1.0], [-0.5, 1.0], [0.5, 1.0], [1.0, 1.0])
    assert abs(prof.limit_estimate - math.log(want)) < 1e-6
    assert abs(math.log(want) - math.log(9.0)) < 1e-15


def test_asymptotic_separated_targets_diverge():
    prof = asymptotic_profile(square(), [-0.3, -0.2], [0.4, 0.1],
                              [1.0, 1.0], [-1.0, 0.0])
    assert prof.mode == "divergent"
    assert prof.exceeded_at is not None
    assert prof.distances[-1] > 10.0


def test_asymptotic_rejects_interior_targets():
    with pytest.raises(NotOnBoundary):
        asymptotic_profile(square(), [-0.3, 0.0], [0.3, 0.0],
                           [0.5, 0.5], [1.0, 0.0])


def test_hilbert_ball_radius():
    dom = square()
    center = np.array([0.2, -0.1])
    ring = hilbert_ball(dom, center, 0.8, n_dirs=24)
    assert len(ring) == 24
    for p in ring:
        assert dom.contains_interior(p, 1e-12)
        assert abs(distance(dom, center, p) - 0.8) < 1e-6
