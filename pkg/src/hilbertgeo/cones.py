"""Proper convex cones and their projective order metric.

A proper cone here is closed, pointed, and spanning.  For interior x and
y, min_scale(x, y) is the smallest lambda with lambda*x - y in the closed
cone, and the metric is ln min_scale(x, y) + ln min_scale(y, x).  On the
cone over a bounded convex domain this restricts to the Hilbert metric of
the domain along its defining slice.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

from .convex import _as_array, _eps, _nullspace
from .errors import (
    DegenerateInput,
    GeometryError,
    Unsupported,
    XNotInteriorOfCone,
)

__all__ = [
    "Cone",
    "build_cone",
    "cone_over",
    "lorentz_cone",
    "cone_distance",
]


def _lorentz_q(z):
    return float(z[0] * z[0] - z[1:] @ z[1:])


def _lorentz_b(x, y):
    return float(x[0] * y[0] - x[1:] @ y[1:])


@dataclass(eq=False)
class Cone:
    """A proper cone, either polyhedral (generators and facet functionals)
    or the Lorentz cone { x : x_1 >= |x_2..n| }.

    embed, when set, maps points of the originating bounded domain onto
    the slice of the cone that reproduces its Hilbert metric.
    """

    kind: str
    dim: int
    generators: np.ndarray | None = None
    functionals: np.ndarray | None = None
    embed: object = field(default=None, repr=False)
    lifted: bool = False

    def contains_interior(self, x):
        x = _as_array(x, "x")
        if x.size != self.dim:
            raise DegenerateInput("point dimension does not match the cone")
        if self.kind == "polyhedral":
            return bool(np.min(self.functionals @ x) > 0.0)
        return x[0] > 0.0 and _lorentz_q(x) > 0.0

    def min_scale(self, x, y):
        """Smallest lambda with lambda*x - y in the closed cone.

        x must be interior; y may be any point of the closed cone.
        """
        x = _as_array(x, "x")
        y = _as_array(y, "y")
        if not self.contains_interior(x):
            raise XNotInteriorOfCone("x must be interior to the cone")
        if self.kind == "polyhedral":
            num = self.functionals @ y
            den = self.functionals @ x
            return float(np.max(num / den))
        qx = _lorentz_q(x)
        qy = _lorentz_q(y)
        B = _lorentz_b(x, y)
        disc = max(B * B - qx * qy, 0.0)
        return float((B + math.sqrt(disc)) / qx)


def build_cone(generators, eps=None):
    """Polyhedral cone spanned by the given generator rays.

    Properness is certified: the generators must span the space (else the
    cone is flat) and admit a strictly separating functional (else it is
    not pointed).  Facets are enumerated brute force as supporting
    hyperplanes through the origin and dim-1 independent generators.
    """
    eps_v = _eps(eps)
    G = np.atleast_2d(_as_array(generators, "generators"))
    m, D = G.shape
    if D < 2:
        raise Unsupported("cones need ambient dimension >= 2")
    norms = np.linalg.norm(G, axis=1)
    if np.any(norms <= eps_v):
        raise DegenerateInput("zero generator ray")
    if np.linalg.matrix_rank(G, tol=1e-9) < D:
        raise DegenerateInput("generators do not span the space")
    # pointedness: a functional uniformly positive on all generators
    res = linprog(np.zeros(D), A_ub=-G, b_ub=-np.ones(m),
                  bounds=[(None, None)] * D, method="highs")
    if res.status != 0:
        raise DegenerateInput("cone is not pointed")
    found = {}
    for T in itertools.combinations(range(m), D - 1):
        sub = G[list(T)]
        s = np.linalg.svd(sub, compute_uv=False)
        if s[-1] <= 1e-9 * max(1.0, s[0]):
            continue  # rays do not span a hyperplane through 0
        normal = _nullspace(sub)[:, 0]
        r = G @ normal
        hi, lo = r.max(), r.min()
        if hi > eps_v and lo < -eps_v:
            continue
        if lo < -eps_v:
            normal, r = -normal, -r
        eq = frozenset(int(j) for j in range(m) if abs(r[j]) <= eps_v)
        if eq not in found:
            found[eq] = normal
    if not found:
        raise DegenerateInput("no supporting facet found")
    center = G.mean(axis=0)
    rows = []
    for key in sorted(found, key=lambda s: tuple(sorted(s))):
        ell = found[key]
        scale = float(ell @ center)
        if scale <= eps_v:
            raise GeometryError("generator centroid is not interior")
        rows.append(ell / scale)
    return Cone(kind="polyhedral", dim=D, generators=G,
                functionals=np.array(rows))


def cone_over(domain, eps=None):
    """The cone over a polytope domain, with the slice embedding attached.

    If the affine hull avoids the origin the vertices themselves generate
    the cone and points embed as themselves; otherwise the domain is
    lifted by an appended coordinate 1.
    """
    if domain.kind != "polytope":
        raise Unsupported("cones are built over polytopes here")
    eps_v = _eps(eps)
    origin = np.zeros(domain.ambient_dim)
    if domain.hull_residual(origin) > eps_v:
        if domain.intrinsic_dim != domain.ambient_dim - 1:
            raise Unsupported("vertex rays would not span the space")
        cone = build_cone(domain.vertices, eps)
        cone.embed = lambda p: _as_array(p)
        cone.lifted = False
        return cone
    lifted = np.hstack([domain.vertices,
                        np.ones((len(domain.vertices), 1))])
    cone = build_cone(lifted, eps)
    cone.embed = lambda p: np.concatenate([_as_array(p), [1.0]])
    cone.lifted = True
    return cone


def lorentz_cone(n):
    """Lorentz cone in R^n: first coordinate dominates the Euclidean norm
    of the rest.  Its unit-height slice is the open round ball."""
    if n < 2:
        raise Unsupported("Lorentz cone needs dimension >= 2")

    def embed(p):
        return np.concatenate([[1.0], _as_array(p)])

    return Cone(kind="lorentz", dim=n, embed=embed)


def cone_distance(cone, x, y):
    """Projective order metric between interior points of the cone."""
    x = _as_array(x, "x")
    y = _as_array(y, "y")
    if not cone.contains_interior(y):
        raise XNotInteriorOfCone("y must be interior to the cone")
    return float(math.log(cone.min_scale(x, y))
                 + math.log(cone.min_scale(y, x)))
