"""
The extremal function
=====================

z + sum (-1)^(m-1) c_m z^m turns the coefficient bounds into equalities, so
at the located radius its Bohr sum meets d_low exactly. Sampling |f| on the
unit circle also recovers d_low, and the membership probe finds no point of
the grid where the defining inequality fails.
"""

import numpy as np

from harmbohr import (ClassParams, ExtremalFunction, ImprovedBohr, RootResult, Scale,
                      SquaredCoef, class_membership_check, distance_lower_bound, find_radius,
                      verify_sharpness)
from harmbohr.sharpness import default_grid

p = ClassParams(1.0, 1.0, 0.5)
ext = ExtremalFunction(p)
print("min |f| on |z|=1:", round(ext.boundary_distance(), 8),
      " d_low:", round(distance_lower_bound(p).value, 8))

rep = verify_sharpness(ImprovedBohr(2), p, find_radius(ImprovedBohr(2), p))
print(rep.verdict.value, "gap", f"{rep.gap:.1e}", "allowed", f"{rep.allowed_gap:.1e}")

# a wrong radius is caught
q = ClassParams(0.5, 1.0, 0.25)
print(verify_sharpness(SquaredCoef(), q, RootResult.at(0.676479)).verdict.value)

grid = default_grid()
grid = grid[np.abs(grid) <= 0.9 + 1e-12]
for scale in Scale:
    probe = class_membership_check(ExtremalFunction(p, scale).coefficient, lambda m: 0.0, p,
                                   grid=grid, M=3000)
    print(f"{scale.name} witness: min slack {probe.min_slack:.4f}, violations {len(probe.violations)}")
