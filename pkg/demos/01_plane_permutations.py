"""
Plane permutations and block-interchanges
=========================================

A plane permutation pairs a cyclic arrangement ``s`` with a permutation ``pi``.
Swapping two blocks of ``s`` changes ``pi`` at four points only, and the
diagonal ``s pi^-1`` stays put.
"""

from planesort import GroundSet, PlanePermutation, cycle_stats, parse_one_line
from planesort.plane import Interchange, all_interchanges, classify_gain, diagonal

# composition is right to left: (f*g)(x) = f(g(x))
pi = parse_one_line("0 3 4 1 2", GroundSet(range(5)))
p = PlanePermutation((0, 1, 2, 3, 4), pi)
print(p)
print("pi =", cycle_stats(p.pi))

h = Interchange(1, 1, 3, 4)
r = classify_gain(p, h)
print(f"\n{h}: {r.case_label}, C {r.before.C} -> {r.after.C}")
print(r.result)
assert diagonal(r.result) == diagonal(p)

# tally the labels over every move on this plane permutation
tally = {}
for h in all_interchanges(len(p)):
    lab = classify_gain(p, h).case_label
    tally[lab] = tally.get(lab, 0) + 1
print("\nlabels:", dict(sorted(tally.items())))
