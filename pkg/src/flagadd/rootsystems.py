"""Simple root systems of types A-G over the integers.

Roots live as coefficient vectors over the simple roots, so every pairing
is an exact integer and nothing here touches floating point.  Simple roots
are numbered 1..rank in the standard Bourbaki labelling; the README shows
the Dynkin diagram for each family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

Root = tuple[int, ...]

FAMILIES = "ABCDEFG"

# exact rank windows for the canonical labels (inclusive; None = unbounded)
_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# out-of-window labels that name a simple (or semisimple) group anyway;
# the rejection message points at the canonical spelling
_CANONICAL_ALIAS = {("B", 1): "A1", ("C", 1): "A1", ("D", 2): "A1 x A1"}


class ConsistencyError(RuntimeError):
    """Two independent computations of the same fact disagreed.

    This always indicates a bug in this package, never a property of the
    input, which is why it is kept separate from ValueError.
    """


@dataclass(frozen=True)
class SimpleType:
    """A simple Lie type: family letter plus rank, e.g. ('C', 3)."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(
                f"unknown family {self.family!r}: expected one of {', '.join(FAMILIES)}"
            )
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            bounds = f"{self.family} requires rank >= {lo}" if hi is None else (
                f"{self.family} requires rank {lo}" if lo == hi
                else f"{self.family} requires {lo} <= rank <= {hi}"
            )
            alias = _CANONICAL_ALIAS.get((self.family, self.rank))
            hint = f"; {self.family}{self.rank} is canonically {alias}" if alias else ""
            raise ValueError(f"rank {self.rank} out of range: {bounds}{hint}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(stype: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Bourbaki Cartan matrix, entry [i][j] = <alpha_j, alpha_i^vee> (0-based)."""
    r = stype.rank
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def join(i: int, j: int, down: int = -1, up: int = -1) -> None:
        a[i][j] = down
        a[j][i] = up

    fam = stype.family
    if fam in "ABC":
        for i in range(r - 1):
            join(i, i + 1)
        if fam == "B":
            join(r - 2, r - 1, down=-1, up=-2)  # alpha_r short
        elif fam == "C":
            join(r - 2, r - 1, down=-2, up=-1)  # alpha_r long
    elif fam == "D":
        for i in range(r - 2):
            join(i, i + 1)
        join(r - 3, r - 1)
    elif fam == "E":
        join(0, 2)
        join(2, 3)
        join(3, 4)
        join(1, 3)  # alpha_2 hangs off alpha_4
        for i in range(4, r - 1):
            join(i, i + 1)
    elif fam == "F":
        join(0, 1)
        join(1, 2, down=-1, up=-2)  # alpha_3, alpha_4 short
        join(2, 3)
    elif fam == "G":
        join(0, 1, down=-3, up=-1)  # alpha_1 short
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Positive integers d with d_i * c[i][j] == d_j * c[j][i], min d = 1."""
    r = len(cartan)
    d: list[Fraction | None] = [None] * r
    d[0] = Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(r):
            if cartan[i][j] != 0 and i != j and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                queue.append(j)
    if any(x is None for x in d):
        raise ValueError("Cartan matrix is not connected")
    scale = 1
    for x in d:
        scale = scale * x.denominator // _gcd(scale, x.denominator)
    ints = [int(x * scale) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    ints = [x // g for x in ints]
    if min(ints) != 1:
        raise ConsistencyError("symmetrizer failed to normalize short roots to 1")
    return tuple(ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _vadd(u: Root, v: Root) -> Root:
    return tuple(a + b for a, b in zip(u, v))


def _vsub(u: Root, v: Root) -> Root:
    return tuple(a - b for a, b in zip(u, v))


def negate(v: Root) -> Root:
    return tuple(-a for a in v)


def height(v: Root) -> int:
    return sum(v)


def _closure(cartan: tuple[tuple[int, ...], ...]) -> tuple[tuple[Root, ...], Root]:
    """Enumerate the positive roots from the simple ones.

    Breadth-first by height: beta + alpha_i is a root exactly when
    q - <beta, alpha_i^vee> > 0, where q counts how far the alpha_i-string
    descends from beta.  Every candidate in the descending string has
    smaller height, so it is already enumerated when needed.
    """
    r = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    pos: set[Root] = set(simples)
    levels: list[list[Root]] = [sorted(simples)]
    current = levels[0]
    while current:
        grown: set[Root] = set()
        for beta in current:
            for i in range(r):
                q = 0
                down = _vsub(beta, simples[i])
                while down in pos:
                    q += 1
                    down = _vsub(down, simples[i])
                pairing = sum(cartan[i][j] * beta[j] for j in range(r))
                if q - pairing > 0:
                    grown.add(_vadd(beta, simples[i]))
        current = sorted(grown)
        if current:
            levels.append(current)
            pos.update(grown)
    top = levels[-1]
    if len(top) != 1:
        raise ConsistencyError(f"expected a unique root of maximal height, got {top}")
    ordered = tuple(root for level in levels for root in level)
    return ordered, top[0]


@dataclass(frozen=True)
class RootSystem:
    """An irreducible root system, immutable after construction."""

    stype: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    _pos_set: frozenset[Root] = field(repr=False, default=frozenset())

    @property
    def rank(self) -> int:
        return self.stype.rank

    def __str__(self) -> str:
        return str(self.stype)


@lru_cache(maxsize=None)
def _build_from_cartan(stype: SimpleType, cartan: tuple[tuple[int, ...], ...]) -> RootSystem:
    positive, top = _closure(cartan)
    return RootSystem(
        stype=stype,
        cartan=cartan,
        symmetrizer=_symmetrizer(cartan),
        positive_roots=positive,
        highest_root=top,
        _pos_set=frozenset(positive),
    )


def build_root_system(stype: SimpleType) -> RootSystem:
    """Construct the root system for a canonical simple type."""
    return _build_from_cartan(stype, cartan_matrix(stype))


def is_root(rs: RootSystem, v) -> bool:
    """Whether the integer vector v is a (positive or negative) root."""
    v = tuple(v)
    if len(v) != rs.rank:
        raise ValueError(f"vector of length {len(v)} against rank {rs.rank}")
    return v in rs._pos_set or negate(v) in rs._pos_set


def pairing(rs: RootSystem, beta: Root, i: int) -> int:
    """<beta, alpha_i^vee> for a 1-based simple index i."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple-root index {i} out of range 1..{rs.rank}")
    row = rs.cartan[i - 1]
    return sum(row[j] * beta[j] for j in range(rs.rank))


def bilinear(rs: RootSystem, u: Root, v: Root) -> int:
    """The W-invariant form (u, v), normalized so short roots have (a, a) = 2."""
    d = rs.symmetrizer
    total = 0
    for i in range(rs.rank):
        if u[i]:
            row = rs.cartan[i]
            total += u[i] * d[i] * sum(row[j] * v[j] for j in range(rs.rank))
    return total


def root_length(rs: RootSystem, beta: Root) -> int:
    """(beta, beta) / 2, i.e. 1 for short roots, 2 or 3 for long ones."""
    n = bilinear(rs, beta, beta)
    if n % 2:
        raise ConsistencyError(f"odd squared length {n} for {beta}")
    return n // 2


def coroot_coefficients(rs: RootSystem, beta: Root) -> Root:
    """Coefficients of beta^vee over the simple coroots.

    For beta = sum a_j alpha_j the coroot is sum (a_j d_j / d_beta) alpha_j^vee.
    """
    if not is_root(rs, beta):
        raise ValueError(f"{beta} is not a root of {rs.stype}")
    d_beta = root_length(rs, beta)
    coeffs = []
    for a, d in zip(beta, rs.symmetrizer):
        num = a * d
        if num % d_beta:
            raise ConsistencyError(f"non-integral coroot coefficient for {beta}")
        coeffs.append(num // d_beta)
    return tuple(coeffs)


_DUAL_FAMILY = {"A": "A", "B": "C", "C": "B", "D": "D", "E": "E", "F": "F", "G": "G"}


def dual_system(rs: RootSystem) -> RootSystem:
    """The root system of the dual group: coroots become the roots.

    Built from the transposed Cartan matrix, which swaps B_r and C_r and
    leaves every other family in place (for F4 and G2 the long and short
    labels trade places while the node numbering stays fixed).
    """
    fam = _DUAL_FAMILY[rs.stype.family]
    transposed = tuple(tuple(rs.cartan[j][i] for j in range(rs.rank)) for i in range(rs.rank))
    return _build_from_cartan(SimpleType(fam, rs.rank), transposed)


# classical positive-root counts, used as an independent cross-check
def positive_root_count(stype: SimpleType) -> int:
    r = stype.rank
    fam = stype.family
    if fam == "A":
        return r * (r + 1) // 2
    if fam in "BC":
        return r * r
    if fam == "D":
        return r * (r - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[
        (fam, r)
    ]
