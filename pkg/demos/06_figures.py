"""Write a few SVG figures into demos/out/.

Metric balls grow and shear as their center approaches the boundary;
chords show the boundary points that enter the cross ratio.
"""

import math
import pathlib

import numpy as np

from hilbertgeo import build_ellipsoid, build_polytope, render_svg

out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

square = build_polytope([[-1, -1], [1, -1], [1, 1], [-1, 1]])
overlays = [("ball", [0.0, 0.0], 1.0),
            ("ball", [0.6, 0.4], 1.0),
            ("ball", [-0.8, -0.7], 1.0),
            ("chord", [-0.5, 0.0], [0.5, 0.0])]
(out / "square_balls.svg").write_text(render_svg(square, overlays))

pent = build_polytope([[0, 0], [1, 0], [1, 1], [0.5, 1.5], [0, 1]])
spokes = [("chord", [0.5, 0.5],
           [0.5 + 0.3 * math.cos(a), 0.5 + 0.3 * math.sin(a)])
          for a in np.linspace(0.0, 2.0 * math.pi, 7)[:-1]]
(out / "pentagon_chords.svg").write_text(render_svg(pent, spokes))

disk = build_ellipsoid([0.0, 0.0], np.eye(2))
rings = [("ball", [0.0, 0.0], r) for r in (0.5, 1.0, 1.5, 2.0)]
rings.append(("ball", [0.55, 0.0], 1.0))
(out / "disk_balls.svg").write_text(render_svg(disk, rings))

for name in ("square_balls", "pentagon_chords", "disk_balls"):
    print("wrote", out / f"{name}.svg")
