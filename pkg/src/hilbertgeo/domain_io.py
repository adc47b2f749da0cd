"""JSON descriptions of domains and cones.

Accepted kinds:
  {"kind": "polytope", "vertices": [[...], ...]}
  {"kind": "ellipsoid", "center": [...], "shape": [[...], ...]}
  {"kind": "simplex", "n": 2}
  {"kind": "cone", "generators": [[...], ...]}
  {"kind": "lorentz", "n": 3}

Syntax problems raise ParseError with the line and column; well-formed
input that violates a construction invariant raises ValidationError with
the invariant named.
"""

from __future__ import annotations

import json

import numpy as np

from .cones import build_cone, lorentz_cone
from .convex import build_ellipsoid, build_polytope, standard_simplex
from .errors import GeometryError, ParseError, ValidationError

__all__ = ["parse_domain", "load_domain", "domain_to_dict"]

_KINDS = ("polytope", "ellipsoid", "simplex", "cone", "lorentz")


def _matrix(obj, key, invariant):
    val = obj.get(key)
    try:
        arr = np.asarray(val, dtype=float)
    except (TypeError, ValueError):
        raise ValidationError(f"{key} must be a numeric array", invariant)
    if arr.ndim != 2 or arr.size == 0:
        raise ValidationError(f"{key} must be a non-empty 2d array", invariant)
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{key} must be finite", invariant)
    return arr


def _vector(obj, key, invariant):
    val = obj.get(key)
    try:
        arr = np.asarray(val, dtype=float)
    except (TypeError, ValueError):
        raise ValidationError(f"{key} must be a numeric vector", invariant)
    if arr.ndim != 1 or arr.size == 0:
        raise ValidationError(f"{key} must be a non-empty vector", invariant)
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{key} must be finite", invariant)
    return arr


def _int(obj, key, invariant):
    val = obj.get(key)
    if not isinstance(val, int) or isinstance(val, bool):
        raise ValidationError(f"{key} must be an integer", invariant)
    return val


def parse_domain(text):
    """Domain or cone from a JSON string."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc), line=exc.lineno, column=exc.colno) from exc
    if not isinstance(obj, dict):
        raise ValidationError("top level must be an object", "object-root")
    kind = obj.get("kind")
    if kind not in _KINDS:
        raise ValidationError(
            f"kind must be one of {', '.join(_KINDS)}", "known-kind")
    try:
        if kind == "polytope":
            return build_polytope(_matrix(obj, "vertices", "vertex-array"))
        if kind == "ellipsoid":
            c = _vector(obj, "center", "center-vector")
            S = _matrix(obj, "shape", "shape-matrix")
            return build_ellipsoid(c, S)
        if kind == "simplex":
            n = _int(obj, "n", "dimension-int")
            return standard_simplex(n)
        if kind == "cone":
            return build_cone(_matrix(obj, "generators", "generator-array"))
        n = _int(obj, "n", "dimension-int")
        return lorentz_cone(n)
    except GeometryError as exc:
        raise ValidationError(str(exc), f"{kind}-build") from exc


def load_domain(path):
    """Domain or cone from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_domain(fh.read())


def domain_to_dict(domain):
    """JSON-ready description of a domain (inverse of parse_domain for
    polytopes and ellipsoids)."""
    if getattr(domain, "kind", None) == "polytope":
        return {"kind": "polytope", "vertices": domain.vertices.tolist()}
    if getattr(domain, "kind", None) == "ellipsoid":
        return {"kind": "ellipsoid", "center": domain.center.tolist(),
                "shape": domain.shape.tolist()}
    raise ValidationError("only polytopes and ellipsoids serialize",
                          "serializable-kind")
