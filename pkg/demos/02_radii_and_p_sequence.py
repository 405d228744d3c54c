"""
Bohr radii and how they move with p
===================================

find_radius brackets the zero of k(r) = majorant(r) - d_low with certified
signs, so the answer is trustworthy even close to r = 1.
"""

from harmbohr import ClassParams, ImprovedBohr, SelfPlusCoef, CoAnalyticSplit, find_radius

for lam in (0.5, 0.0):
    p = ClassParams(1.0, 1.0, lam)
    roots = [find_radius(ImprovedBohr(k), p).radius for k in range(2, 9)]
    print(f"lam={lam}: r_p for p=2..8 ->", " ".join(f"{r:.6f}" for r in roots))

# the radii approach 1 as gamma approaches lam
for gamma in (0.1260, 0.1255, 0.1254, 0.1253):
    root = find_radius(ImprovedBohr(2), ClassParams(gamma, 0.5, 0.125))
    print(f"gamma={gamma}: r_2 = {root.radius:.8f}  (bracket {root.bracket_width:.1e})")

half = ClassParams(0.5, 1.0, 0.0)
print("self-plus radius:", round(find_radius(SelfPlusCoef(), half).radius, 6))
print("co-analytic radius:", round(find_radius(CoAnalyticSplit(), half).radius, 6))
