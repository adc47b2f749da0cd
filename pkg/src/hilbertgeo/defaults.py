"""Shared numeric defaults.

All tolerances are absolute and assume desk-scale inputs (coordinates of
order one).  EPS_GEO governs on-boundary and on-hyperplane predicates and
can be overridden through the HG_EPS environment variable, read once at
import time.
"""

import os

EPS_GEO = float(os.environ.get("HG_EPS", "1e-9"))

# Focusing probes call two boundary limits "the same" below this separation.
EPS_FOCUS = 1e-3

# Operational stand-in for divergence to infinity in asymptotic probes.
DIVERGENCE_BOUND = 10.0

# Doubling steps used by asymptotic and focusing probes.
DEFAULT_STEPS = 40
