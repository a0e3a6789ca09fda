#!/usr/bin/env python3
"""Parabolic subgroups as markings: the grading and the nilradical.

Marking a set of simple roots grades the Lie algebra by the marked
coefficients of each root.  The nilradical collects everything of positive
degree, and it is commutative exactly when the grading stops at degree 1,
equivalently when no two of its roots sum to a root.
"""

from flagadd import (
    SimpleType,
    build_root_system,
    degree,
    flag_dimension,
    grading,
    is_commutative_nilradical,
    nilradical,
)

print("== Grading G2 at the first simple root ==")
g2 = build_root_system(SimpleType("G", 2))
for k, layer in grading(g2, {1}).items():
    print(f"  degree {k}: {list(layer)}")
print("degree of the highest root:", degree(g2.highest_root, frozenset({1})))
print("commutative?", is_commutative_nilradical(g2, {1}))

print()
print("== The same question where the answer is yes ==")
c3 = build_root_system(SimpleType("C", 3))
print("C3 marked at {3} (the Lagrangian Grassmannian):")
for k, layer in grading(c3, {3}).items():
    print(f"  degree {k}: {len(layer)} roots")
print("nilradical:", list(nilradical(c3, {3})))
print("commutative?", is_commutative_nilradical(c3, {3}))
print("flag dimension:", flag_dimension(c3, {3}))

print()
print("== Grassmannian dimensions from root counts ==")
a5 = build_root_system(SimpleType("A", 5))
for i in range(1, 6):
    print(f"  dim A5/P{i} = {flag_dimension(a5, {i})}  (formula i(6-i) = {i * (6 - i)})")

print()
print("== Marking two or more nodes always breaks commutativity ==")
a3 = build_root_system(SimpleType("A", 3))
for m in [{1}, {2}, {3}, {1, 2}, {1, 3}, {1, 2, 3}]:
    print(f"  A3 marked {sorted(m)}: commutative = {is_commutative_nilradical(a3, m)}")
