"""Weyl group orbits, the dimension formula, and the minuscule test.

Weights are integer vectors in the fundamental-weight basis, so a simple
reflection is a single integer row operation and orbit points dedupe as
plain tuples.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import numpy as np

from .rootsystems import (
    ConsistencyError,
    RootSystem,
    SimpleType,
    coroot_coefficients,
)

Weight = tuple[int, ...]


def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    _check_index(rs, i)
    return tuple(1 if j == i - 1 else 0 for j in range(rs.rank))


def _check_index(rs: RootSystem, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise ValueError(f"fundamental index {i} out of range 1..{rs.rank}")


def _check_weight(rs: RootSystem, lam) -> Weight:
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight of length {len(lam)} against rank {rs.rank}")
    return lam


def reflect(rs: RootSystem, lam, i: int) -> Weight:
    """Simple reflection s_i(lam) = lam - <lam, alpha_i^vee> alpha_i."""
    lam = _check_weight(rs, lam)
    _check_index(rs, i)
    c = lam[i - 1]
    if c == 0:
        return lam
    # alpha_i over the fundamental weights is column i of the Cartan matrix
    return tuple(lam[j] - c * rs.cartan[j][i - 1] for j in range(rs.rank))


def _require_dominant(lam: Weight) -> None:
    if any(c < 0 for c in lam):
        raise ValueError(
            f"weight {lam} is not dominant; reflect negative coordinates up first"
        )


def weyl_orbit_size(rs: RootSystem, lam) -> int:
    """|W . lam| for dominant lam, by breadth-first search over reflections."""
    lam = _check_weight(rs, lam)
    _require_dominant(lam)
    if all(c == 0 for c in lam):
        return 1
    r = rs.rank
    # room for coordinates when packing a weight into one int64 key
    bound = 1 << max(62 // r - 1, 2)
    if max(abs(c) for c in lam) >= bound:
        return _orbit_size_unpacked(rs, lam)
    try:
        return _orbit_size_packed(rs, lam, bound)
    except _PackOverflow:
        return _orbit_size_unpacked(rs, lam)


class _PackOverflow(Exception):
    pass


def _orbit_size_packed(rs: RootSystem, lam: Weight, bound: int) -> int:
    """Level-synchronous BFS with orbit points packed into int64 keys.

    Each weight maps injectively to sum (c_j + bound) * (2 bound)^j, which
    keeps deduplication inside numpy.  Raises _PackOverflow if an orbit
    point ever leaves [-bound, bound).
    """
    r = rs.rank
    cols = np.array(
        [[rs.cartan[j][i] for j in range(r)] for i in range(r)], dtype=np.int64
    )
    radix = np.int64(2 * bound) ** np.arange(r, dtype=np.int64)
    frontier = np.array([lam], dtype=np.int64)
    visited = (frontier + bound) @ radix
    while frontier.shape[0]:
        cand = np.concatenate(
            [frontier - np.outer(frontier[:, i], cols[i]) for i in range(r)]
        )
        if np.abs(cand).max() >= bound:
            raise _PackOverflow
        codes = (cand + bound) @ radix
        codes, first = np.unique(codes, return_index=True)
        cand = cand[first]
        fresh = ~np.isin(codes, visited, assume_unique=True)
        frontier = cand[fresh]
        visited = np.union1d(visited, codes[fresh])
    return int(visited.shape[0])


def _orbit_size_unpacked(rs: RootSystem, lam: Weight) -> int:
    # plain-set fallback for weights too large to pack
    r = rs.rank
    cols = [tuple(rs.cartan[j][i] for j in range(r)) for i in range(r)]
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(r):
                c = w[i]
                if c == 0:
                    continue
                image = tuple(w[j] - c * cols[i][j] for j in range(r))
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return len(seen)


def weyl_dim(rs: RootSystem, lam) -> int:
    """dim V(lam) by the Weyl dimension formula, in exact arithmetic."""
    lam = _check_weight(rs, lam)
    _require_dominant(lam)
    value = Fraction(1)
    for beta in rs.positive_roots:
        covee = coroot_coefficients(rs, beta)
        num = den = 0
        for c, l in zip(covee, lam):
            num += c * (l + 1)  # <lam + delta, beta^vee>
            den += c  # <delta, beta^vee>
        value *= Fraction(num, den)
    if value.denominator != 1:
        raise ConsistencyError(f"non-integral Weyl dimension for {lam}")
    return int(value)


def is_minuscule(rs: RootSystem, i: int) -> bool:
    """Whether the weight system of V(omega_i) is the single orbit W.omega_i.

    Decided two independent ways: orbit size against the Weyl dimension,
    and the pairing test <omega_i, beta^vee> <= 1 over the positive roots.
    A disagreement is an internal error, never returned.
    """
    _check_index(rs, i)
    omega = fundamental_weight(rs, i)
    by_orbit = weyl_orbit_size(rs, omega) == weyl_dim(rs, omega)
    by_pairing = all(
        coroot_coefficients(rs, beta)[i - 1] <= 1 for beta in rs.positive_roots
    )
    if by_orbit != by_pairing:
        raise ConsistencyError(
            f"minuscule tests disagree for {rs.stype} omega_{i}: "
            f"orbit={by_orbit} pairing={by_pairing}"
        )
    return by_orbit


def weyl_order(stype: SimpleType) -> int:
    """|W| from the classical closed forms."""
    r = stype.rank
    if stype.family == "A":
        return factorial(r + 1)
    if stype.family in "BC":
        return (1 << r) * factorial(r)
    if stype.family == "D":
        return (1 << (r - 1)) * factorial(r)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(stype.family, r)]
