#!/usr/bin/env python3
"""The full classification: which G/P admit an additive-group structure.

A simple pair qualifies through a commutative unipotent radical or through
one of the three exceptional families, whose flag varieties are secretly
homogeneous under a larger group.  Products decide componentwise.
"""

from flagadd import (
    SimpleType,
    build_root_system,
    decide_product,
    decide_simple,
    enumerate_maximal,
    flag_dimension,
    group_label,
)

print("== Every admitting maximal parabolic up to rank 5 ==")
for row in enumerate_maximal(5):
    if not row.admits:
        continue
    how = "commutative"
    if row.covering is not None:
        cov = row.covering
        marked = ",".join(str(i) for i in sorted(cov.marking))
        how = f"exceptional, covered by {cov.label} = {cov.stype}[{marked}]"
    print(f"  {row.stype}[{row.index}]  ({group_label(row.stype)}/P{row.index}, dim {row.dimension}): {how}")

print()
print("== The three exceptional families carry a dimension proof ==")
for stype, m in [(SimpleType("C", 4), {1}), (SimpleType("B", 4), {4}), (SimpleType("G", 2), {1})]:
    verdict = decide_simple(stype, m)
    cov = verdict.exceptional
    cov_dim = flag_dimension(build_root_system(cov.stype), cov.marking)
    marked = ",".join(str(i) for i in sorted(m))
    print(
        f"  {stype}[{marked}] has dim {verdict.dimension}; "
        f"covering {cov.label} gives dim {cov_dim} independently"
    )

print()
print("== Products decide componentwise ==")
spec = [(SimpleType("A", 2), {1}), (SimpleType("C", 3), {1})]
verdict = decide_product(spec)
print("A2[1] x C3[1]: admits =", verdict.admits, "dimension =", verdict.total_dimension)
spec = [(SimpleType("A", 2), {1}), (SimpleType("E", 8), {1})]
verdict = decide_product(spec)
print("A2[1] x E8[1]: admits =", verdict.admits, "(E8 fails both branches)")

print()
print("== E8, F4, G2 never admit through a maximal parabolic except G2[1] ==")
for family, rank in [("E", 8), ("F", 4), ("G", 2)]:
    stype = SimpleType(family, rank)
    winners = [i for i in range(1, rank + 1) if decide_simple(stype, {i}).admits]
    print(f"  {stype}: admitting indices {winners or 'none'}")
