"""The same metric from a cone's ordering.

For x, y interior to a proper cone C let m(x, y) be the least t with
t*x - y still in C.  Then ln m(x, y) + ln m(y, x) is a metric on rays,
and slicing C with a hyperplane recovers the bounded-domain picture.
"""

import math

import numpy as np

from hilbertgeo import (
    build_ellipsoid,
    build_polytope,
    cone_distance,
    cone_over,
    distance,
    lorentz_cone,
    standard_simplex,
)

# The cone over the standard simplex is the positive orthant, and the
# generators need no lifting: the simplex already spans a hyperplane
# missing the origin.
orthant = cone_over(standard_simplex(2))
print("orthant lifted:", orthant.lifted)
d = cone_distance(orthant, [2, 1, 1], [1, 1, 1])
print(f"orthant d((2,1,1),(1,1,1)) = {d:.12f}   ln 2 = {math.log(2):.12f}")

# A square does not contain a hyperplane section through the origin,
# so its cone lives one dimension up with an appended coordinate.
square = build_polytope([[-1, -1], [1, -1], [1, 1], [-1, 1]])
sq_cone = cone_over(square)
print("square cone lifted:", sq_cone.lifted, " ambient dim:", sq_cone.dim)
a = sq_cone.embed([-0.5, 0.0])
b = sq_cone.embed([0.5, 0.0])
print(f"lifted d = {cone_distance(sq_cone, a, b):.12f}"
      f"   square d = {distance(square, [-0.5, 0], [0.5, 0]):.12f}")

# The second-order cone x0 > |(x1,...,xn)| slices to a round ball.
lor = lorentz_cone(3)
disk = build_ellipsoid([0.0, 0.0], np.eye(2))
x, y = [0.0, 0.0], [0.5, 0.0]
d_cone = cone_distance(lor, [1.0, *x], [1.0, *y])
print(f"lorentz slice d = {d_cone:.12f}"
      f"   disk d = {distance(disk, x, y):.12f}")
