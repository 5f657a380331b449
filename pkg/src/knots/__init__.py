"""Combinatorial knot and link diagrams with low-order invariants.

Diagrams are signed oriented Gauss codes; on top of them the package
provides Reidemeister moves with randomized invariance fuzzing, linking
numbers, Arf and Casson invariants via skew pairs, the Conway polynomial
through the skein relation, Fox p-colorings, chord diagrams and
finite-order invariant checks, and exact-predicate spatial geometry for
linked triangles and the seven-point theorem.
"""

from .errors import (
    ConsistencyError,
    DegeneracyError,
    DomainError,
    GenericityFailure,
    InvalidSiteError,
    KnotsError,
    NonPlanarError,
    NotAKnotError,
    ParseError,
    UnknownCrossingError,
    UnknownNameError,
)
from .codes import (
    OVER,
    UNDER,
    Basepoint,
    Dart,
    Diagram,
    Edge,
    GaussCode,
    Pass,
    build_diagram,
    canonical_key,
    from_text,
    genus,
    is_realizable,
    mirror,
    parse_gauss,
    permute_components,
    reverse_all,
    reverse_component,
    to_gauss,
    to_text,
)
from .moves import (
    DEFAULT_WEIGHTS,
    MoveSite,
    WalkPlan,
    connected_sum,
    crossing_change,
    disjoint_union,
    enumerate_sites,
    random_walk,
    smooth,
)
from .moves import apply as apply_move
from .linking import LinkingReport, linking_matrix, lk, lk2
from .arf_casson import SkewPair, arf, casson, skew_pairs
from .conway import (
    CANONICAL,
    ConwayPoly,
    DescendingPlan,
    coefficient,
    conway,
    is_descending,
    poly_text,
    unknotting_changes,
    violations,
)
from .colorings import (
    ArcSet,
    ColoringCount,
    arcs,
    count_colorings,
    count_colorings_by_enumeration,
    is_colorable,
)
from .vassiliev import (
    ChordDiagram,
    SingularDiagram,
    check_1t,
    check_4t,
    enumerate_chord_diagrams,
    extend,
    realize,
    resolutions,
    sigma,
    symbol,
)
from .spatial import (
    ProjectionResult,
    SpatialLink,
    project,
    triangles_linked,
    verify_seven_points,
    verify_six_points,
)
from . import catalog

__version__ = "0.1.0"

__all__ = [
    "ArcSet",
    "Basepoint",
    "CANONICAL",
    "ChordDiagram",
    "ColoringCount",
    "ConsistencyError",
    "ConwayPoly",
    "DEFAULT_WEIGHTS",
    "Dart",
    "DegeneracyError",
    "DescendingPlan",
    "Diagram",
    "DomainError",
    "Edge",
    "GaussCode",
    "GenericityFailure",
    "InvalidSiteError",
    "KnotsError",
    "LinkingReport",
    "MoveSite",
    "NonPlanarError",
    "NotAKnotError",
    "OVER",
    "ParseError",
    "Pass",
    "ProjectionResult",
    "SingularDiagram",
    "SkewPair",
    "SpatialLink",
    "UNDER",
    "UnknownCrossingError",
    "UnknownNameError",
    "WalkPlan",
    "apply_move",
    "arcs",
    "arf",
    "build_diagram",
    "canonical_key",
    "casson",
    "catalog",
    "check_1t",
    "check_4t",
    "coefficient",
    "connected_sum",
    "conway",
    "count_colorings",
    "count_colorings_by_enumeration",
    "crossing_change",
    "disjoint_union",
    "enumerate_chord_diagrams",
    "enumerate_sites",
    "extend",
    "from_text",
    "genus",
    "is_colorable",
    "is_descending",
    "is_realizable",
    "linking_matrix",
    "lk",
    "lk2",
    "mirror",
    "parse_gauss",
    "permute_components",
    "poly_text",
    "project",
    "random_walk",
    "realize",
    "resolutions",
    "reverse_all",
    "reverse_component",
    "sigma",
    "skew_pairs",
    "smooth",
    "symbol",
    "to_gauss",
    "to_text",
    "triangles_linked",
    "unknotting_changes",
    "verify_seven_points",
    "verify_six_points",
    "violations",
]
