"""
Signed reversals via the skew embedding
=======================================

``a`` becomes ``0 a -rev(a)``; each reversal of ``a`` is then a symmetric
block-interchange, which yields a cycle-count lower bound.
"""

from planesort import (
    breakpoint_metrics,
    cycle_stats,
    distance_of,
    greedy_sort_reversals,
    reversal_lower_bound,
    skew_embed,
)

for a in [(-3, 1, 2, -4), (2, -4, -1, 3)]:
    e = skew_embed(a)
    print(e.plane)
    print("  =", cycle_stats(e.pi))
    bm = breakpoint_metrics(a)
    print(f"  bound {reversal_lower_bound(a)}, breakpoint bound {bm.bg_bound}, d_r {distance_of(a, 'reversal')}")

    res = greedy_sort_reversals(a)
    for st in res.trace.steps:
        print(f"    {st.move}: {st.before} -> {st.after}   C {st.C_before} -> {st.C_after}")
    print()
