#!/usr/bin/env python3
"""The Chevalley-basis oracle: commutativity checked at bracket level.

Structure constants are derived from extraspecial pairs with all signs
fixed to +, then every claim the combinatorial layer makes about a
nilradical can be re-proved by multiplying actual basis vectors.
"""

import itertools

from flagadd import (
    SimpleType,
    bracket_roots,
    build_root_system,
    chevalley_constants,
    is_commutative_nilradical,
    verify_grading,
    verify_nilradical_abelian,
)
from flagadd.chevalley import dump_constants, jacobi_defect
from flagadd.rootsystems import negate

print("== Structure constants of G2 ==")
g2 = build_root_system(SimpleType("G", 2))
sc = chevalley_constants(g2)
print("positive-pair brackets:")
for beta, gamma in itertools.combinations(g2.positive_roots, 2):
    result = bracket_roots(sc, beta, gamma)
    if result is not None:
        total, value = result
        print(f"  [e{beta}, e{gamma}] = {value:+d} e{total}")

print()
print("== Jacobi holds on every basis triple ==")
basis = [("h", i) for i in (1, 2)]
basis += [("e", b) for b in g2.positive_roots]
basis += [("e", negate(b)) for b in g2.positive_roots]
violations = sum(
    1 for x, y, z in itertools.combinations(basis, 3) if jacobi_defect(sc, x, y, z)
)
print(f"checked {len(basis)} basis vectors, {violations} violations")

print()
print("== The bracket oracle agrees with the combinatorial test ==")
for family, rank, m in [("A", 3, {2}), ("C", 3, {1}), ("B", 4, {4}), ("D", 4, {2})]:
    rs = build_root_system(SimpleType(family, rank))
    table = chevalley_constants(rs)
    by_bracket = verify_nilradical_abelian(table, m)
    by_roots = is_commutative_nilradical(rs, m)
    print(f"  {family}{rank} marked {sorted(m)}: brackets say {by_bracket}, roots say {by_roots}")

print()
print("== Brackets respect the parabolic grading ==")
print("G2 marked {1}:", verify_grading(sc, {1}))

print()
print("== A deterministic dump for cross-tool diffing (A2) ==")
a2 = build_root_system(SimpleType("A", 2))
print(dump_constants(chevalley_constants(a2)), end="")
