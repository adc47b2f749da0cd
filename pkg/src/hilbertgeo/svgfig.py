"""Plain SVG renderings of plane domains with metric overlays.

Overlays are tuples: ("ball", center, radius), ("chord", x, y),
("segment", a, b), ("polyline", points), ("point", p).  All coordinates
ambient; embedded domains are drawn in their affine-hull chart.
"""

from __future__ import annotations

import math

import numpy as np

from .convex import _as_array
from .errors import DegenerateInput, Unsupported
from .metric import hilbert_ball

__all__ = ["render_svg"]

_STYLE = {
    "domain": 'fill="#eef3fb" stroke="#2b4a77" stroke-width="1.5"',
    "ball": 'fill="none" stroke="#b03a2e" stroke-width="1.2"',
    "chord": 'stroke="#1d6b42" stroke-width="1.2"',
    "segment": 'stroke="#8a5d1d" stroke-width="1.2"',
    "polyline": 'fill="none" stroke="#5b2d82" stroke-width="1.2"',
    "point": 'fill="#17202a"',
}


def _boundary_local(domain, arc_points=180):
    if domain.kind == "polytope":
        verts, _ = domain.polygon_vertices_local()
        return verts
    th = np.linspace(0.0, 2.0 * math.pi, arc_points, endpoint=False)
    circ = np.stack([np.cos(th), np.sin(th)], axis=1)
    return domain.center + circ @ domain._chol.T


def render_svg(domain, overlays=(), size=480, margin=28.0):
    """SVG document (string) showing the domain and its overlays."""
    if domain.intrinsic_dim != 2:
        raise Unsupported("SVG rendering needs a 2-dimensional domain")
    outline = _boundary_local(domain)
    lo = outline.min(axis=0)
    hi = outline.max(axis=0)
    span = max(float((hi - lo).max()), 1e-9)
    scale = (size - 2.0 * margin) / span
    mid = 0.5 * (lo + hi)

    def px(p_local):
        x = (p_local[0] - mid[0]) * scale + size / 2.0
        y = size / 2.0 - (p_local[1] - mid[1]) * scale
        return f"{x:.2f},{y:.2f}"

    def loc(p_ambient):
        return domain.to_local(_as_array(p_ambient))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">'
    ]
    pts = " ".join(px(v) for v in outline)
    parts.append(f'<polygon points="{pts}" {_STYLE["domain"]}/>')
    for item in overlays:
        tag = item[0]
        if tag == "ball":
            ring = hilbert_ball(domain, item[1], float(item[2]))
            pts = " ".join(px(loc(q)) for q in ring)
            parts.append(f'<polygon points="{pts}" {_STYLE["ball"]}/>')
        elif tag == "chord":
            ch = domain.chord_through(item[1], item[2])
            a, b = loc(ch.alpha), loc(ch.beta)
            parts.append(
                f'<line x1="{px(a).split(",")[0]}" y1="{px(a).split(",")[1]}"'
                f' x2="{px(b).split(",")[0]}" y2="{px(b).split(",")[1]}"'
                f' {_STYLE["chord"]}/>')
            for p in (item[1], item[2]):
                cx, cy = px(loc(p)).split(",")
                parts.append(
                    f'<circle cx="{cx}" cy="{cy}" r="3" {_STYLE["point"]}/>')
        elif tag == "segment":
            a, b = loc(item[1]), loc(item[2])
            ax, ay = px(a).split(",")
            bx, by = px(b).split(",")
            parts.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" '
                         f'{_STYLE["segment"]}/>')
        elif tag == "polyline":
            pts = " ".join(px(loc(q)) for q in np.atleast_2d(
                np.asarray(item[1], dtype=float)))
            parts.append(f'<polyline points="{pts}" {_STYLE["polyline"]}/>')
        elif tag == "point":
            cx, cy = px(loc(item[1])).split(",")
            parts.append(
                f'<circle cx="{cx}" cy="{cy}" r="3" {_STYLE["point"]}/>')
        else:
            raise DegenerateInput(f"unknown overlay {tag!r}")
    parts.append("</svg>")
    return "\n".join(parts)
