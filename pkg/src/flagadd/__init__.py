"""Decide which flag varieties G/P compactify a commutative unipotent group.

Everything is exact root-system combinatorics: no floating point anywhere.
"""

from .rootsystems import (
    ConsistencyError,
    Root,
    RootSystem,
    SimpleType,
    build_root_system,
    coroot_coefficients,
    dual_system,
    is_root,
)
from .weyl import (
    Weight,
    fundamental_weight,
    is_minuscule,
    reflect,
    weyl_dim,
    weyl_orbit_size,
)
from .parabolic import (
    degree,
    flag_dimension,
    grading,
    is_commutative_nilradical,
    nilradical,
)
from .classify import (
    CoveringPair,
    ProductVerdict,
    SimplePairVerdict,
    decide_product,
    decide_simple,
    enumerate_maximal,
    exceptional_covering,
    group_label,
)
from .chevalley import (
    StructureConstants,
    bracket_roots,
    chevalley_constants,
    verify_grading,
    verify_nilradical_abelian,
)
from .cli import SpecError, format_spec, parse_spec

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "CoveringPair",
    "ProductVerdict",
    "Root",
    "RootSystem",
    "SimplePairVerdict",
    "SimpleType",
    "SpecError",
    "StructureConstants",
    "Weight",
    "bracket_roots",
    "build_root_system",
    "chevalley_constants",
    "coroot_coefficients",
    "decide_product",
    "decide_simple",
    "degree",
    "dual_system",
    "enumerate_maximal",
    "exceptional_covering",
    "flag_dimension",
    "format_spec",
    "fundamental_weight",
    "grading",
    "group_label",
    "is_commutative_nilradical",
    "is_minuscule",
    "is_root",
    "nilradical",
    "parse_spec",
    "reflect",
    "verify_grading",
    "verify_nilradical_abelian",
    "weyl_dim",
    "weyl_orbit_size",
]
