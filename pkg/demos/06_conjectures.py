"""
Same-cycle conjectures and bound tightness
==========================================

Both conjectures are tested by enumeration only; nothing in the sorters
relies on them.
"""

from planesort import check_conjecture, tightness_report

for cid in ("7.1", "7.2"):
    rep = check_conjecture(cid, 5)
    print(cid, "states per n:", rep.per_n, "counterexample:", rep.counterexample)

rep = tightness_report(5)
print(f"\nbound == d_r on {rep.bound_tight}/{rep.total}")
print(f"C(p_r s~) == 2 C_BG - 1 on {rep.relation_true}/{rep.total}")
print("first gaps:", rep.bound_gaps[:3])
