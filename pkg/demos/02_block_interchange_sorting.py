"""
Sorting by block-interchanges
=============================

The distance is read off one cycle count, and a greedy move that gains two
cycles always exists, so sorting is exact.
"""

from planesort import bid_census_formula, bid_exact, census, sort_by_block_interchanges

a = (4, 6, 2, 5, 1, 3)
print("a =", a, " bid =", bid_exact(a))

trace = sort_by_block_interchanges(a)
for st in trace.steps:
    print(f"  {str(st.move):<22} {st.before} -> {st.after}   C {st.C_before} -> {st.C_after}")

# the same thing as adjacent-block swaps only
flat = sort_by_block_interchanges(a, expand_to_transpositions=True)
print(f"\nas transpositions: {len(flat)} moves (at most {2 * bid_exact(a)})")

# BFS census against the closed form
for n in range(1, 7):
    got = census(n, "block_interchange")
    print(n, got, "ok" if got == {k: v for k, v in bid_census_formula(n).items() if v} else "MISMATCH")
