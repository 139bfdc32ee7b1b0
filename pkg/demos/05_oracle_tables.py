"""
Brute-force tables
==================

Exact distance tables live in numpy arrays indexed by Lehmer rank (plus a sign
mask for signed states).  Distribution polynomials and the n-cycle census are
plain enumerations.
"""

import numpy as np

from planesort import GroundSet, Permutation, distance_table, distribution_poly, zagier_census, zagier_formula

for kind in ("transposition", "block_interchange"):
    t = distance_table(6, kind)
    print(f"{kind:>18}: diameter {t.max()}, mean {t.mean():.3f}")
t = distance_table(4, "reversal")
print(f"{'reversal (n=4)':>18}: diameter {t.max()}, histogram {np.bincount(t)}")

pi = Permutation.from_cycles(GroundSet.range(5), [(1, 2, 3)])
for stat in ("cycles", "odd", "even"):
    print(f"{stat:>6}:", distribution_poly(pi, stat))

for n in range(1, 8):
    z = zagier_census(n)
    assert z == {k: zagier_formula(n, k) for k in z}
    print(n, [z[k] for k in sorted(z)])
