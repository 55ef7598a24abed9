"""Second-order eigenvector entry estimates on the fan, and how fast they converge.

With the hub entry scaled to 1, every rim vertex u should satisfy
v_u ~ 1/lam + (d_u - 1)/lam^2.  The worst error shrinks like n^-1.5, as do the
errors of the refined eigenvalue predictions divided by m.
"""

from outerspread.bounds import residual_scan

rows, summary = residual_scan([32, 64, 128, 256])
print("   n   max_res_z     max_res_x     lambda1_res   lambda_n_res")
for r in rows:
    print(f"{r['n']:4d}  {r['max_res_z']:.6e}  {r['max_res_x']:.6e}  {r['lambda1_res']:.6e}  {r['lambda_n_res']:.6e}")
for k, v in summary.items():
    print(f"{k:22s} {v:+.4f}")
