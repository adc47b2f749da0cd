"""Face lattices, opposite faces, and the minimal cone at an extreme point."""

from hilbertgeo import build_polytope

pyramid = build_polytope([[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0],
                          [0.5, 0.5, 1.0]])
lat = pyramid.face_lattice()
print("pyramid faces by dimension:", lat.counts())

# Two faces are opposite when the segment between their relative
# interiors passes through the interior of the domain.  Vertex indices
# follow the deduplicated vertex order, so look faces up by a point.
base = pyramid.boundary_face_of([0.5, 0.5, 0.0])
apex = pyramid.boundary_face_of([0.5, 0.5, 1.0])
edge = pyramid.boundary_face_of([0.5, 0.0, 0.0])
print("base vs apex opposite:", pyramid.opposite_faces(base, apex))
print("base vs base edge    :", pyramid.opposite_faces(base, edge))

# The join region of an opposite pair is the union of open segments
# between them; it is a convex piece of the interior.
region = pyramid.join_region(base, apex)
print("centroid in join(base, apex):", region([0.5, 0.5, 0.25]))
print("point near a side facet     :", region([0.02, 0.5, 0.9]))

# At an extreme point the domain looks like a cone over the union of
# faces visible from it.  Its dimension grades how pointed the corner is.
for label, point in [("apex", [0.5, 0.5, 1.0]), ("corner", [0, 0, 0])]:
    cone = pyramid.minimal_cone_at(point)
    print(f"minimal cone at {label}: dim {cone.dim}, "
          f"base spans vertices {cone.base.indices}")
