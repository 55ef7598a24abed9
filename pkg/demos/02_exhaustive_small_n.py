"""Which connected outerplanar graph has the largest spread for small n?

Every isomorphism class is generated once, its spread computed, and the winner
described: does it have a dominating vertex, and is the rest a linear forest?
"""

from outerspread import exhaustive_max_spread, fan, graph6_encode, spread
from outerspread.search import fan_structure

print(" n  graphs  winner      spread       fan spread   hub  forest")
for n in range(3, 10):
    r = exhaustive_max_spread(n)
    st = fan_structure(r.best)
    hub = max(r.best.degrees()) == n - 1
    print(f"{n:2d} {r.evaluated:7d}  {graph6_encode(r.best):10s}  {r.best_spread:.8f}  "
          f"{spread(fan(n)).spread:.8f}  {str(hub):5s} {st}")

# n = 7 and n = 8 are won by graphs without a dominating vertex at all; at
# n = 9 the winner is K_1 joined with one long path plus isolated vertices,
# the shape the fan-family scan keeps finding for larger n.
