"""Best linear forest F for K_1 v F, over every partition of n - 1.

The winner is never the single path once n >= 7: it is one path on roughly
2n/3 vertices with the remaining vertices isolated, so the forest keeps a
constant fraction m/n of edges but the fan K_1 v P_{n-1} is beaten.
"""

import math
import time

from outerspread import fan, fan_family_max, spread

print("  n   partitions  best forest              m/n     gap to fan   ceil((2n-1)/3)")
for n in (7, 10, 20, 30, 40, 50, 60, 70):
    t = time.time()
    r = fan_family_max(n, table_size=1)
    gap = r.best_spread - spread(fan(n)).spread
    parts = r.best_spec.parts
    label = f"[{parts[0]}" + (f", 1 x {len(parts) - 1}]" if len(parts) > 1 else "]")
    print(f"{n:3d} {r.partition_count:12d}  {label:22s} {r.m_ratio:.4f}  {gap:.3e}   "
          f"{math.ceil((2 * n - 1) / 3):3d}   ({time.time() - t:.1f}s)")
