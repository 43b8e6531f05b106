"""Recognition of products of simplices.

A simple convex polytope is combinatorially a product of simplices exactly
when the boundary complex of its dual is a join of simplex boundaries.
This package implements several independent criteria for that property
(minimal non-face partition, the maximal-simplex/link test, the two-face
test, a recursive pseudomanifold recognizer, the doubling construction,
subset-sweep homology rank counts) together with exact rational polytope
geometry and the non-obtuse dihedral-angle test, and cross-checks them
against each other.
"""

from .complexes import (
    PseudomanifoldReport,
    SimplicialComplex,
    boundary_of_simplex,
    build_complex,
    cycle_length,
    double,
    is_pseudomanifold,
    reconstruct_from_non_faces,
    simplex_boundary_on,
)
from .errors import (
    CapExceededError,
    IndexOutOfRangeError,
    InfeasibleVertexError,
    InvalidDimensionError,
    InvalidParameterError,
    NotAFaceError,
    NotMaximalError,
    NotSimpleError,
    PreconditionViolatedError,
    RedundantInequalityError,
    SphereJoinError,
    UncoveredVertexError,
)
from .geometry import (
    PolytopeHRep,
    PolytopeVRep,
    VertexFacetIncidence,
    check_simple,
    dihedral_nonobtuse_check,
    dual_boundary_complex,
    gen_polygon,
    gen_product_of_simplices,
    gen_simplex,
    gen_truncated,
    incidence_from_hv,
    product_polytope,
    truncate_all_vertices,
)
from .homology import (
    BettiData,
    BigradedBettiTable,
    Field,
    bigraded_betti,
    check_rank_lower_bounds,
    gluing_euler_characteristic,
    hochster_graded_ranks,
    hochster_rank_criterion,
    hochster_rank_via_double,
    hochster_total_rank,
    reduced_betti,
)
from .recognition import (
    ConsolidatedReport,
    SphereJoinDecomposition,
    check_double,
    check_non_face_partition,
    check_simplex_link,
    check_two_face,
    decompose_by_non_faces,
    recognize_all,
    recognize_recursive,
)
from .reports import CRITERIA, RecognitionReport

__version__ = "0.1.0"

__all__ = [
    "BettiData",
    "BigradedBettiTable",
    "CRITERIA",
    "CapExceededError",
    "ConsolidatedReport",
    "Field",
    "IndexOutOfRangeError",
    "InfeasibleVertexError",
    "InvalidDimensionError",
    "InvalidParameterError",
    "NotAFaceError",
    "NotMaximalError",
    "NotSimpleError",
    "PolytopeHRep",
    "PolytopeVRep",
    "PreconditionViolatedError",
    "PseudomanifoldReport",
    "RecognitionReport",
    "RedundantInequalityError",
    "SimplicialComplex",
    "SphereJoinDecomposition",
    "SphereJoinError",
    "UncoveredVertexError",
    "VertexFacetIncidence",
    "bigraded_betti",
    "boundary_of_simplex",
    "build_complex",
    "check_double",
    "check_non_face_partition",
    "check_rank_lower_bounds",
    "check_simple",
    "check_simplex_link",
    "check_two_face",
    "cycle_length",
    "decompose_by_non_faces",
    "dihedral_nonobtuse_check",
    "double",
    "dual_boundary_complex",
    "gen_polygon",
    "gen_product_of_simplices",
    "gen_simplex",
    "gen_truncated",
    "gluing_euler_characteristic",
    "hochster_graded_ranks",
    "hochster_rank_criterion",
    "hochster_rank_via_double",
    "hochster_total_rank",
    "incidence_from_hv",
    "is_pseudomanifold",
    "product_polytope",
    "recognize_all",
    "recognize_recursive",
    "reconstruct_from_non_faces",
    "reduced_betti",
    "simplex_boundary_on",
    "truncate_all_vertices",
]
