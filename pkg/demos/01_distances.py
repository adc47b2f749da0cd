"""Distances inside three convex bodies.

The metric on a bounded convex domain is the log of the cross ratio of
a point pair with the two points where their chord meets the boundary.
Three domains with closed-form values make good first checks:

  * the square [-1,1]^2 between (-1/2,0) and (1/2,0)   -> ln 9
  * the unit disk between (0,0) and (1/2,0)            -> (1/2) ln 3 * 2
  * the standard simplex, where the distance is a log ratio formula
"""

import math

import numpy as np

from hilbertgeo import (
    build_ellipsoid,
    build_polytope,
    distance,
    hilbert_ball,
    standard_simplex,
)

square = build_polytope([[-1, -1], [1, -1], [1, 1], [-1, 1]])
d = distance(square, [-0.5, 0.0], [0.5, 0.0])
print(f"square  : d = {d:.12f}   ln 9 = {math.log(9.0):.12f}")

disk = build_ellipsoid([0.0, 0.0], np.eye(2))
d = distance(disk, [0.0, 0.0], [0.5, 0.0])
print(f"disk    : d = {d:.12f}   ln 3 = {math.log(3.0):.12f}")

# On the simplex the same cross ratio collapses to ratios of coordinates:
# d(x, y) = ln max_i x_i/y_i + ln max_i y_i/x_i.
simplex = standard_simplex(2)
x = np.array([0.5, 0.25, 0.25])
y = np.array([0.25, 0.5, 0.25])
d = distance(simplex, x, y)
ratio = np.log((x / y).max()) + np.log((y / x).max())
print(f"simplex : d = {d:.12f}   log-ratio form = {ratio:.12f}")

# Metric balls are convex polygons in a polygonal domain.  Sample the
# ball of radius 1 around the square's center and look at its extent.
ball = hilbert_ball(square, [0.0, 0.0], 1.0, n_dirs=16)
r = math.tanh(0.5)  # along an axis the ball boundary sits at tanh(r/2)
print(f"ball    : max |x| on boundary = {np.abs(ball).max():.6f}"
      f"   tanh(1/2) = {r:.6f}")
