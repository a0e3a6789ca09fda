#!/usr/bin/env python3
"""A tour of the exact root-system machinery.

Every root is an integer coefficient vector over the simple roots, so all
of the classical data (positive roots, the highest root, coroots, duality)
comes out of integer arithmetic alone.
"""

from flagadd import SimpleType, build_root_system, coroot_coefficients, dual_system, is_root

print("== Building root systems ==")
for family, rank in [("A", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4), ("E", 8)]:
    rs = build_root_system(SimpleType(family, rank))
    print(f"{rs}: {len(rs.positive_roots)} positive roots, highest root {rs.highest_root}")

print()
print("== The positive roots of G2, by height ==")
g2 = build_root_system(SimpleType("G", 2))
for beta in g2.positive_roots:
    print(f"  {beta}  (height {sum(beta)})")

print()
print("== Membership is a set lookup ==")
print("(1,1) in G2?", is_root(g2, (1, 1)))
print("(2,2) in G2?", is_root(g2, (2, 2)))

print()
print("== Coroots rescale by root length ==")
print("G2 symmetrizer (short root = 1):", g2.symmetrizer)
for beta in g2.positive_roots:
    print(f"  {beta}^v = {coroot_coefficients(g2, beta)}")

print()
print("== Duality swaps B and C and reverses arrows elsewhere ==")
b3 = build_root_system(SimpleType("B", 3))
print("dual of B3 is", dual_system(b3).stype)
f4 = build_root_system(SimpleType("F", 4))
dual_f4 = dual_system(f4)
print("dual of F4 is", dual_f4.stype, "with symmetrizer", dual_f4.symmetrizer)
print("double dual returns the same roots:", dual_system(dual_f4).positive_roots == f4.positive_roots)

print()
print("== Canonical labels only ==")
for family, rank in [("B", 1), ("D", 2)]:
    try:
        SimpleType(family, rank)
    except ValueError as exc:
        print(f"{family}{rank} rejected: {exc}")
