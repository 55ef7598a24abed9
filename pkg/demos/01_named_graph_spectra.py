"""Spectra of the graphs that anchor the outerplanar spread story.

Stars have spread exactly 2 sqrt(n-1); the wheel has lambda_1 = sqrt(n) + 1,
which is an upper bound for every large outerplanar graph; the fan K_1 v P_{n-1}
sits just below that and has spread close to 2 sqrt(n).
"""

import math

import numpy as np

from outerspread import complete, fan, join, linear_forest, rayleigh, spread, star, wheel

for n in (10, 50, 200):
    s, w, f = spread(star(n)), spread(wheel(n)), spread(fan(n))
    print(f"n={n:4d}  star spread {s.spread:10.6f} (2sqrt(n-1) = {2 * math.sqrt(n - 1):10.6f})")
    print(f"        wheel lambda1 {w.lambda1:10.6f} (sqrt(n)+1   = {math.sqrt(n) + 1:10.6f})")
    print(f"        fan spread   {f.spread:10.6f} (2sqrt(n)-1/n = {2 * math.sqrt(n) - 1 / n:10.6f})")

# The test vectors (1, +-1/sqrt(n-1), ...) pin both extreme eigenvalues of any
# K_1 v F to within O(m / n^1.5) of +-sqrt(n-1) + m/(n-1).
n = 101
g = join(complete(1), linear_forest([40, 30, 20, 5, 5]))
m = g.num_edges - (n - 1)
r = math.sqrt(n - 1)
a = g.adjacency_matrix()
y2 = np.r_[1.0, np.full(n - 1, -1 / r)]
y3 = np.r_[1.0, np.full(n - 1, 1 / r)]
sp = spread(g)
print(f"\nK_1 v F on {n} vertices, m={m}")
print(f"  lambda_n = {sp.lambda_n:.6f} <= R(y2) = {rayleigh(a, y2):.6f}")
print(f"  lambda_1 = {sp.lambda1:.6f} >= R(y3) = {rayleigh(a, y3):.6f}")
