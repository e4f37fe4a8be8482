"""Persistent cup-length diagrams and functions of Z2 simplicial filtrations."""

from . import spaces
from .cohomology import (
    AnnotatedBarcode,
    Bar,
    Cochain,
    FamilyReport,
    compute_barcode,
    connected_component_bars,
    validate_family,
)
from .cup import CupDiagram, RunStats, compute_cup_diagram, cup_diagram, cup_product, support
from .errors import (
    AsymmetricMatrix,
    CupLengthError,
    DuplicateSimplex,
    MissingFace,
    NegativeDistance,
    NonMonotoneGrades,
    NotCriticalValue,
    ParseError,
    SimplexNotAlive,
    UnknownSimplex,
)
from .functions import (
    CupFunction,
    Interval,
    analytic_vr_circle,
    analytic_vr_torus,
    analytic_vr_wedge_lower,
    erosion_distance,
    evaluate,
    pointwise_max,
    pointwise_sum,
    reconstruct,
)
from .oracle import CohomBasis, cohomology_basis, image_cup_length, oracle_cup_function
from .simplicial import (
    FilteredComplex,
    Simplex,
    alive_at,
    build_vietoris_rips,
    from_simplex_list,
    truncate,
)
from .z2 import (
    ReducedCoboundary,
    SparseZ2Matrix,
    coboundary_matrix,
    column_reduce,
    is_coboundary,
    reduce_coboundary,
    row_reduce,
)

__version__ = "0.1.0"

__all__ = [
    "AnnotatedBarcode",
    "spaces",
    "AsymmetricMatrix",
    "Bar",
    "Cochain",
    "CohomBasis",
    "CupDiagram",
    "CupFunction",
    "CupLengthError",
    "DuplicateSimplex",
    "FamilyReport",
    "FilteredComplex",
    "Interval",
    "MissingFace",
    "NegativeDistance",
    "NonMonotoneGrades",
    "NotCriticalValue",
    "ParseError",
    "ReducedCoboundary",
    "RunStats",
    "Simplex",
    "SimplexNotAlive",
    "SparseZ2Matrix",
    "UnknownSimplex",
    "alive_at",
    "analytic_vr_circle",
    "analytic_vr_torus",
    "analytic_vr_wedge_lower",
    "build_vietoris_rips",
    "coboundary_matrix",
    "cohomology_basis",
    "column_reduce",
    "compute_barcode",
    "compute_cup_diagram",
    "connected_component_bars",
    "cup_diagram",
    "cup_product",
    "erosion_distance",
    "evaluate",
    "from_simplex_list",
    "image_cup_length",
    "is_coboundary",
    "oracle_cup_function",
    "pointwise_max",
    "pointwise_sum",
    "reconstruct",
    "reduce_coboundary",
    "row_reduce",
    "support",
    "truncate",
    "validate_family",
]
