"""
Bohr-Rogosinski and refined radii
=================================

Starting the coefficient tail later (larger N) can only enlarge the radius.
The refined sums add squared-coefficient corrections whose weight blows up
like 1/(1 - r), which is why their bracket stops at 1 - 1e-6.
"""

from harmbohr import ClassParams, Refined, Rogosinski, RogosinskiSquared, find_radius

p = ClassParams(1.0, 1.0, 0.5)
for n in (1, 2, 3):
    roots = [find_radius(Rogosinski(n, N), p).radius for N in (2, 3, 4, 5, 8)]
    print(f"n={n}: R_n,N for N=2,3,4,5,8 ->", " ".join(f"{r:.6f}" for r in roots))
print("squared:", " ".join(f"{find_radius(RogosinskiSquared(N), p).radius:.6f}"
                           for N in (2, 3, 4, 5, 8)))

for N in (1, 2, 3, 4):
    f = Refined(n=1, N=N, mu=1.0, beta=1.0)
    print(f"refined N={N} (t={f.t}): {find_radius(f, ClassParams(1.0, 1.0, 0.0)).radius:.9f}")
