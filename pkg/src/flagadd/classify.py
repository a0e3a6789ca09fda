"""The classification: which pairs (G, P) make G/P an additive-group compactification.

A simple pair admits one exactly when its unipotent radical is commutative
or the pair appears in the hard-coded exceptional table, whose three rows
carry a larger automorphism group realizing the same flag variety.  Products
decide componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .parabolic import Marking, flag_dimension, is_commutative_nilradical, marking
from .rootsystems import ConsistencyError, SimpleType, build_root_system


@dataclass(frozen=True)
class CoveringPair:
    """The larger pair (G~, Q) with G/P = G~/Q, for an exceptional (G, P)."""

    label: str
    stype: SimpleType
    marking: Marking


@dataclass(frozen=True)
class SimplePairVerdict:
    commutative: bool
    exceptional: CoveringPair | None
    admits: bool
    dimension: int


@dataclass(frozen=True)
class ProductVerdict:
    components: tuple[tuple[SimpleType, Marking, SimplePairVerdict], ...]
    admits: bool
    total_dimension: int


def group_label(stype: SimpleType) -> str:
    """Adjoint-type display name, e.g. PSp(6) for C3."""
    r = stype.rank
    return {
        "A": f"PSL({r + 1})",
        "B": f"SO({2 * r + 1})",
        "C": f"PSp({2 * r})",
        "D": f"PSO({2 * r})",
        "E": f"E{r}",
        "F": "F4",
        "G": "G2",
    }[stype.family]


def exceptional_covering(stype: SimpleType, m) -> CoveringPair | None:
    """Table lookup of the three exceptional families; None otherwise."""
    m = frozenset(m)
    r = stype.rank
    if stype.family == "C" and m == {1}:
        return CoveringPair(f"PSL({2 * r})", SimpleType("A", 2 * r - 1), frozenset({1}))
    if stype.family == "B" and m == {r}:
        return CoveringPair(
            f"PSO({2 * r + 2})", SimpleType("D", r + 1), frozenset({r + 1})
        )
    if stype.family == "G" and m == {1}:
        return CoveringPair("SO(7)", SimpleType("B", 3), frozenset({1}))
    return None


def decide_simple(stype: SimpleType, m) -> SimplePairVerdict:
    """Apply both branches of the classification to one simple pair."""
    rs = build_root_system(stype)
    m = marking(rs, m)
    commutative = is_commutative_nilradical(rs, m)
    covering = exceptional_covering(stype, m)
    dimension = flag_dimension(rs, m)
    if covering is not None:
        cov_dim = flag_dimension(build_root_system(covering.stype), covering.marking)
        if cov_dim != dimension:
            raise ConsistencyError(
                f"covering pair {covering.label} has dimension {cov_dim}, "
                f"but {stype} with marking {sorted(m)} has {dimension}"
            )
        if commutative:
            raise ConsistencyError(
                f"{stype} marking {sorted(m)} is both commutative and exceptional"
            )
    return SimplePairVerdict(
        commutative=commutative,
        exceptional=covering,
        admits=commutative or covering is not None,
        dimension=dimension,
    )


def decide_product(components) -> ProductVerdict:
    """Decide a product of simple pairs; all components must admit."""
    components = list(components)
    if not components:
        raise ValueError("empty component list")
    decided = []
    for stype, m in components:
        verdict = decide_simple(stype, m)
        decided.append((stype, frozenset(m), verdict))
    return ProductVerdict(
        components=tuple(decided),
        admits=all(v.admits for _, _, v in decided),
        total_dimension=sum(v.dimension for _, _, v in decided),
    )


@dataclass(frozen=True)
class TableRow:
    stype: SimpleType
    index: int
    commutative: bool
    covering: CoveringPair | None
    admits: bool
    dimension: int


def _canonical_ranks(family: str, max_rank: int):
    lo = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}[family]
    hi = {"E": 8, "F": 4, "G": 2}.get(family, max_rank)
    return range(lo, min(hi, max_rank) + 1)


def enumerate_maximal(max_rank: int) -> tuple[TableRow, ...]:
    """Every simple type of rank <= max_rank against every maximal parabolic.

    Rows come out in family order A..G, then by rank, then by index.
    """
    if max_rank < 2:
        raise ValueError("max_rank must be at least 2")
    rows = []
    for family in "ABCDEFG":
        for r in _canonical_ranks(family, max_rank):
            stype = SimpleType(family, r)
            for i in range(1, r + 1):
                verdict = decide_simple(stype, {i})
                rows.append(
                    TableRow(
                        stype=stype,
                        index=i,
                        commutative=verdict.commutative,
                        covering=verdict.exceptional,
                        admits=verdict.admits,
                        dimension=verdict.dimension,
                    )
                )
    return tuple(rows)
