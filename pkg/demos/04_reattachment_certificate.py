"""Moving a vertex that misses the hub w onto w never costs more than predicted.

For a vertex t outside N(w) + w, reattaching it as a pendant of w changes the
spread by at least a Rayleigh-quotient amount computed from the old
eigenvectors.  Repeating the move drives any graph towards one with a
dominating vertex, as long as the moves keep the graph connected.
"""

import numpy as np

from outerspread import extremal_pairs, spread, star_reattach
from outerspread.bounds import valid_reattach_targets
from outerspread.graph import random_outerplanar

rng = np.random.default_rng(2)
g = random_outerplanar(14, rng, keep=0.3)
print(f"start: n={g.n} e={g.num_edges} spread={spread(g).spread:.6f}")
while True:
    w = extremal_pairs(g).w
    targets = valid_reattach_targets(g, w)
    if not targets:
        break
    # take the connected move with the largest certified gain; moving a cut
    # vertex would strand part of the graph
    moves = [r for r in (star_reattach(g, t) for t in targets) if r.g_star.is_connected()]
    if not moves:
        break
    best = max(moves, key=lambda r: r.predicted_delta)
    print(f"  t={best.t:2d} -> w={best.w:2d}  predicted {best.predicted_delta:+.6f}  actual {best.actual_delta:+.6f}")
    if best.predicted_delta <= 0:
        break
    g = best.g_star
print(f"end:   n={g.n} e={g.num_edges} spread={spread(g).spread:.6f} max degree={max(g.degrees())}")
