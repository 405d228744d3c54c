"""
Coefficient bounds and the distance to the boundary
===================================================

Every radius in the package is built from one sequence c_m, the sharp bound
on |a_m| + |b_m|. Its alternating sum gives the lower bound on how far f(0)
sits from the boundary of the image.
"""

import numpy as np

from harmbohr import ClassParams, coef_bounds, distance_lower_bound, li_constants

# delta = gamma collapses the bound to 2(gamma - lam)/(gamma m^2)
p = ClassParams(gamma=1.0, delta=1.0, lam=0.5)
m = np.arange(2, 8)
print("c_m for m = 2..7:", np.round(coef_bounds(p, m), 6))

# increasing delta makes the bounds fall off like 1/m^3
q = ClassParams(gamma=0.5, delta=1.0, lam=0.0)
print("c_m with delta > gamma:", np.round(coef_bounds(q, m), 6))

# the distance bound comes with its own remainder estimate
const = li_constants()
for params, closed in [(p, const["pi2_over_12"]),
                       (ClassParams(1.0, 1.0, 0.0), const["pi2_over_6_minus_1"]),
                       (q, const["three_plus_pi2_over_3_minus_8log2"])]:
    d = distance_lower_bound(params)
    print(f"{params.as_tuple()}: d_low = {d.value:.15f} +/- {d.tail_bound:.1e}"
          f"  (closed form {closed:.15f})")
