"""Chords that force additivity, and chords that do not.

A chord is rigid when every point far from it picks up strictly more
distance through it than along it.  In a polygon this depends only on
the boundary faces the chord hits: edge to edge leaves slack, vertex
to anything does not.  The same face data drives what happens to
d(x_k, y_k) when two sequences slide toward the boundary.
"""

import math

import numpy as np

from hilbertgeo import (
    asymptotic_profile,
    build_polytope,
    distance,
    is_rigid_chord,
    standard_simplex,
)

square = build_polytope([[-1, -1], [1, -1], [1, 1], [-1, 1]])

# Horizontal chord: both ends in the interiors of vertical edges.
r = is_rigid_chord(square, [-0.5, 0.0], [0.5, 0.0])
print("edge-to-edge chord rigid:", r.rigid)
w = r.witness
gap = (distance(square, [-0.5, 0.0], w) + distance(square, w, [0.5, 0.0])
       - distance(square, [-0.5, 0.0], [0.5, 0.0]))
print(f"  witness {np.round(w, 6)} off the chord, additivity gap {gap:.2e}")

# The diagonal ends at two vertices; no witness exists.
r = is_rigid_chord(square, [-0.5, -0.5], [0.5, 0.5])
print("vertex-to-vertex chord rigid:", r.rigid)

# In dimension 3 skew boundary faces can cut the slack even between
# positive-dimensional faces: opposite edges of a tetrahedron.
tetra = standard_simplex(3)
v = tetra.vertices
x = 0.5 * (v[0] + v[1]) + 0.02 * (v[2] + v[3] - v[0] - v[1])
y = 0.5 * (v[2] + v[3]) + 0.02 * (v[0] + v[1] - v[2] - v[3])
print("skew-edge chord rigid:", is_rigid_chord(tetra, x, y).rigid)

# Slide x and y toward the top edge of the square along parallel rays.
prof = asymptotic_profile(square,
                          x0=[-0.5, 0.0], a1=[-0.5, 1.0],
                          y0=[0.5, 0.0], a2=[0.5, 1.0])
print(f"parallel targets: mode={prof.mode}, "
      f"sup d = {prof.sup:.9f}, ln 9 = {math.log(9.0):.9f}")

prof = asymptotic_profile(square,
                          x0=[-0.5, 0.0], a1=[-0.5, 1.0],
                          y0=[0.5, 0.0], a2=[1.0, 0.5])
print(f"different faces : mode={prof.mode}, "
      f"d blew past {prof.distances[prof.exceeded_at]:.2f} "
      f"at step {prof.exceeded_at}")
