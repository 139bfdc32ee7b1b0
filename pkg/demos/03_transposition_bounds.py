"""
Transposition distance bounds
=============================

Any permutation ``gamma`` of 0..n gives a lower bound from the cycle, odd
cycle and even cycle gaps.  Here the default ``gamma`` is compared with BFS
and with a random search over ``gamma``.
"""

import random

import numpy as np

from planesort import GroundSet, Permutation, distance_table, lehmer_unrank, state_rank, td_bounds

n = 5
table = distance_table(n, "transposition")
print("td histogram for n=5:", np.bincount(table))

rng = random.Random(3)
loose = 0
for r in range(len(table)):
    a = lehmer_unrank(r, n)
    b = td_bounds(a)
    assert b.lower_best <= table[r] <= b.upper
    loose += b.lower_best < table[r]
print(f"default gamma is tight on {len(table) - loose}/{len(table)}")

a = (5, 4, 3, 2, 1)
best = td_bounds(a).lower_best
g = GroundSet.starred(n)
for _ in range(200):
    img = list(range(n + 1))
    rng.shuffle(img)
    best = max(best, td_bounds(a, Permutation.from_images(g, img)).lower_best)
print(a, "best lower bound found:", best, " td =", table[state_rank(a, False)])
