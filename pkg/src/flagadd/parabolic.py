"""Parabolic subgroups as marked simple roots: grading, nilradical, commutativity.

A parabolic is encoded by its marking, the set of simple-root indices whose
negative root spaces fall outside the subalgebra.  The induced degree of a
root is the sum of its coefficients at the marked indices.
"""

from __future__ import annotations

from .rootsystems import ConsistencyError, Root, RootSystem, _vadd

Marking = frozenset[int]


def marking(rs: RootSystem, indices) -> Marking:
    """Validate and freeze a set of 1-based simple-root indices."""
    m = frozenset(indices)
    for i in m:
        if not isinstance(i, int) or not 1 <= i <= rs.rank:
            raise ValueError(f"marked index {i} out of range 1..{rs.rank}")
    return m


def degree(beta: Root, m: Marking) -> int:
    """Sum of beta's coefficients at the marked indices."""
    return sum(beta[i - 1] for i in m)


def grading(rs: RootSystem, m) -> dict[int, tuple[Root, ...]]:
    """Partition of the positive roots by degree, keys 0..degree(highest root)."""
    m = marking(rs, m)
    top = degree(rs.highest_root, m)
    layers: dict[int, list[Root]] = {k: [] for k in range(top + 1)}
    for beta in rs.positive_roots:
        layers[degree(beta, m)].append(beta)
    return {k: tuple(v) for k, v in layers.items()}


def nilradical(rs: RootSystem, m) -> tuple[Root, ...]:
    """Positive roots of degree >= 1, in the root system's deterministic order."""
    m = marking(rs, m)
    return tuple(beta for beta in rs.positive_roots if degree(beta, m) >= 1)


def is_commutative_nilradical(rs: RootSystem, m) -> bool:
    """Whether no two nilradical roots sum to a root.

    The brute-force pair scan is the definition; the degree of the highest
    root gives an independent shortcut (commutative iff degree <= 1), and
    the two must agree.
    """
    m = marking(rs, m)
    nil = nilradical(rs, m)
    pos = rs._pos_set
    by_pairs = True
    for a in range(len(nil)):
        for b in range(a, len(nil)):
            if _vadd(nil[a], nil[b]) in pos:
                by_pairs = False
                break
        if not by_pairs:
            break
    by_degree = degree(rs.highest_root, m) <= 1
    if by_pairs != by_degree:
        raise ConsistencyError(
            f"commutativity checks disagree for {rs.stype} marking {sorted(m)}: "
            f"pairs={by_pairs} degree={by_degree}"
        )
    return by_pairs


def flag_dimension(rs: RootSystem, m) -> int:
    """dim G/P = number of nilradical roots."""
    return len(nilradical(rs, m))
