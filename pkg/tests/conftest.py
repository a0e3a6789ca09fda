from flagadd import SimpleType

_LOWEST = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
_HIGHEST = {"E": 8, "F": 4, "G": 2}


def canonical_types(max_rank, families="ABCDEFG"):
    """Every canonical simple type with rank <= max_rank, in display order."""
    out = []
    for family in families:
        hi = min(_HIGHEST.get(family, max_rank), max_rank)
        for r in range(_LOWEST[family], hi + 1):
            out.append(SimpleType(family, r))
    return out
