"""Chevalley-basis structure constants, derived from extraspecial pairs.

This module is the bracket-level oracle for the rest of the package: it
builds the integer constants N(beta, gamma) with [e_beta, e_gamma] =
N e_{beta+gamma}, fixes the sign +1 on every extraspecial pair, and derives
all remaining constants from the Jacobi identity.  Commutativity of a
nilradical can then be read off from literal brackets instead of root sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .parabolic import degree, marking, nilradical
from .rootsystems import (
    ConsistencyError,
    Root,
    RootSystem,
    bilinear,
    coroot_coefficients,
    height,
    negate,
    pairing,
    _vadd,
    _vsub,
)

# basis element keys: ("e", root) for root vectors, ("h", i) for the
# 1-based simple coroots spanning the Cartan subalgebra
BasisKey = tuple


@dataclass(frozen=True)
class StructureConstants:
    """All nonzero N(beta, gamma) over ordered root pairs with a root sum."""

    rs: RootSystem
    n: dict[tuple[Root, Root], int] = field(repr=False)

    def constant(self, beta: Root, gamma: Root) -> int:
        return self.n.get((beta, gamma), 0)


def _extraspecial_pairs(rs: RootSystem) -> dict[Root, tuple[Root, Root]]:
    """For each non-simple positive root, its minimal decomposition.

    Positive roots are totally ordered by (height, lex); the pair (b, g)
    with b + g = d and b minimal is the extraspecial pair of d.  Minimality
    of b forces b < g.
    """
    pos_set = rs._pos_set
    table = {}
    for d in rs.positive_roots:
        if height(d) == 1:
            continue
        for b in rs.positive_roots:
            g = _vsub(d, b)
            if g in pos_set:
                table[d] = (b, g)
                break
        else:
            raise ConsistencyError(f"{d} has no decomposition into positive roots")
    return table


@lru_cache(maxsize=None)
def chevalley_constants(rs: RootSystem) -> StructureConstants:
    """Build the full table of structure constants for rs.

    Signs on extraspecial pairs are +; every other constant follows from
    antisymmetry, negation symmetry N(-b, -g) = -N(b, g), the three-term
    cyclic identity for b + g + d = 0, and the four-root Jacobi relation.
    Chevalley integrality |N| = p + 1 is verified for every entry before
    returning; a violation aborts, since it can only mean a bug here.
    """
    pos = rs.positive_roots
    pos_set = rs._pos_set
    all_roots = pos + tuple(negate(b) for b in pos)
    root_set = frozenset(all_roots)
    order = {b: k for k, b in enumerate(pos)}
    extraspecial = _extraspecial_pairs(rs)

    def p_value(b: Root, g: Root) -> int:
        # length of the descending b-string through g
        k = 0
        cur = _vsub(g, b)
        while cur in root_set:
            k += 1
            cur = _vsub(cur, b)
        return k

    norm2 = {b: bilinear(rs, b, b) for b in all_roots}
    memo: dict[tuple[Root, Root], int] = {}

    def n(b: Root, g: Root) -> int:
        # non-root arguments carry no basis vector: the four-root relation
        # feeds differences like g0 - b here and relies on these being 0
        if b not in root_set or g not in root_set:
            return 0
        s = _vadd(b, g)
        if s not in root_set:
            return 0
        key = (b, g)
        if key in memo:
            return memo[key]
        b_pos = b in pos_set
        g_pos = g in pos_set
        if b_pos and g_pos:
            if order[b] > order[g]:
                val = -n(g, b)
            else:
                b0, g0 = extraspecial[s]
                if (b, g) == (b0, g0):
                    val = p_value(b, g) + 1
                else:
                    # four-root Jacobi relation on (g0, -b, -g), solved for
                    # N(b, g); every factor reduces to a lower sum height
                    t = n(negate(g), g0) * n(negate(b), _vsub(g0, g)) + n(
                        g0, negate(b)
                    ) * n(negate(g), _vsub(g0, b))
                    exact = Fraction(norm2[s] * t, norm2[b0] * n(b0, g0))
                    if exact.denominator != 1:
                        raise ConsistencyError(f"fractional constant at {b}, {g}")
                    val = int(exact)
        elif not b_pos and not g_pos:
            val = -n(negate(b), negate(g))
        elif not b_pos:
            val = -n(g, b)
        elif s in pos_set:
            # b > 0 > g with positive sum: cyclic identity against (-g, s)
            exact = Fraction(norm2[s] * n(negate(g), s), norm2[b])
            if exact.denominator != 1:
                raise ConsistencyError(f"fractional constant at {b}, {g}")
            val = -int(exact)
        else:
            val = -n(negate(b), negate(g))
        memo[key] = val
        return val

    table: dict[tuple[Root, Root], int] = {}
    for b in all_roots:
        for g in all_roots:
            s = _vadd(b, g)
            if s in root_set:
                value = n(b, g)
                expected = p_value(b, g) + 1
                if abs(value) != expected:
                    raise ConsistencyError(
                        f"|N{b, g}| = {abs(value)}, string length demands {expected}"
                    )
                table[(b, g)] = value
    return StructureConstants(rs=rs, n=table)


def bracket_roots(sc: StructureConstants, beta: Root, gamma: Root):
    """[e_beta, e_gamma] as (beta + gamma, N), or None when the bracket is 0.

    The Cartan-valued case beta + gamma = 0 is rejected here; use
    cartan_bracket for it.
    """
    for v in (beta, gamma):
        if v not in sc.rs._pos_set and negate(v) not in sc.rs._pos_set:
            raise ValueError(f"{v} is not a root of {sc.rs.stype}")
    total = _vadd(beta, gamma)
    if all(c == 0 for c in total):
        raise ValueError("beta + gamma = 0: bracket lands in the Cartan subalgebra")
    value = sc.n.get((beta, gamma))
    if value is None:
        return None
    return total, value


def cartan_bracket(sc: StructureConstants, beta: Root) -> Root:
    """[e_beta, e_{-beta}] = h_beta, as coefficients over the simple coroots."""
    return coroot_coefficients(sc.rs, beta)


def basis_bracket(sc: StructureConstants, x: BasisKey, y: BasisKey) -> dict:
    """Bracket of two basis elements as a sparse coefficient dict."""
    kx, vx = x
    ky, vy = y
    if kx == "h" and ky == "h":
        return {}
    if kx == "h":
        c = pairing(sc.rs, vy, vx)
        return {y: c} if c else {}
    if ky == "h":
        c = pairing(sc.rs, vx, vy)
        return {x: -c} if c else {}
    total = _vadd(vx, vy)
    if all(c == 0 for c in total):
        return {
            ("h", i + 1): c
            for i, c in enumerate(coroot_coefficients(sc.rs, vx))
            if c
        }
    value = sc.n.get((vx, vy))
    return {("e", total): value} if value else {}


def bracket_elements(sc: StructureConstants, a: dict, b: dict) -> dict:
    """Bilinear extension of basis_bracket to sparse elements."""
    out: dict = {}
    for x, ca in a.items():
        for y, cb in b.items():
            for key, c in basis_bracket(sc, x, y).items():
                out[key] = out.get(key, 0) + ca * cb * c
    return {k: v for k, v in out.items() if v}


def jacobi_defect(sc: StructureConstants, x: BasisKey, y: BasisKey, z: BasisKey) -> dict:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]]; empty exactly when Jacobi holds."""
    out: dict = {}
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        inner = basis_bracket(sc, b, c)
        for key, v in bracket_elements(sc, {a: 1}, inner).items():
            out[key] = out.get(key, 0) + v
    return {k: v for k, v in out.items() if v}


def verify_nilradical_abelian(sc: StructureConstants, m) -> bool:
    """Whether every bracket between nilradical root vectors vanishes."""
    nil = nilradical(sc.rs, marking(sc.rs, m))
    for a in range(len(nil)):
        for b in range(a, len(nil)):
            if (nil[a], nil[b]) in sc.n:
                return False
    return True


def verify_grading(sc: StructureConstants, m) -> bool:
    """Check [g_j, g_k] <= g_{j+k} through the actual stored brackets."""
    m = marking(sc.rs, m)
    for (b, g) in sc.n:
        if degree(_vadd(b, g), m) != degree(b, m) + degree(g, m):
            return False
    return True


def dump_constants(sc: StructureConstants) -> str:
    """Deterministic text table: one line per pair, 'beta-idx gamma-idx N'.

    Positive roots are numbered 1..N in the system's canonical order and
    negatives get the mirrored negative index.
    """
    index = {b: k + 1 for k, b in enumerate(sc.rs.positive_roots)}
    index.update({negate(b): -(k + 1) for k, b in enumerate(sc.rs.positive_roots)})
    lines = sorted((index[b], index[g], v) for (b, g), v in sc.n.items())
    return "\n".join(f"{i} {j} {v}" for i, j, v in lines) + "\n"
