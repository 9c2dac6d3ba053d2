"""
projcodes - Subspace Codes for the Injection Metric

Lifted Ferrers-diagram rank-metric codes over GF(q), exact counting
bounds, and verification of minimum distance.

Usage:
    from projcodes import build_code, rate, verify_min_distance

    code = build_code(9, 2, 2, "injection")
    rate(code)
    verify_min_distance(code, mode="sampled").certified
"""

# Fields and linear algebra
from projcodes.gf import (
    FieldSpec,
    arith,
    ext_make,
    field_make,
    field_of_order,
)
from projcodes.matq import (
    MatrixGF,
    Subspace,
    injection_distance,
    rank,
    rank_distance,
    rref,
    subspace_distance,
)

# Profiles and rank-metric codes
from projcodes.profiles import (
    FerrersShape,
    ProfileVector,
    SelectionMetric,
    greedy_select,
    profile_matrix,
    profile_of,
    score,
)
from projcodes.rankmetric import (
    LinearMatrixCode,
    ferrers_subcode,
    gabidulin,
    min_rank_distance,
)

# Bounds
from projcodes.bounds import (
    gaussian,
    gv_bound,
    projective_size,
    punctured_size_bound,
    sphere_size,
)

# Subspace codes
from projcodes.codebook import (
    CodeMetric,
    SubspaceCode,
    build_code,
    build_constant_dimension,
    dump_code,
    enumerate_code,
    lift,
    load_code,
    rate,
    verify_min_distance,
)

# Errors
from projcodes.errors import (
    CapacityError,
    CertificationError,
    FieldError,
    ParameterError,
    ParseError,
    ProjCodesError,
    ShapeError,
)

__all__ = [
    "FieldSpec", "arith", "ext_make", "field_make", "field_of_order",
    "MatrixGF", "Subspace", "injection_distance", "rank", "rank_distance", "rref", "subspace_distance",
    "FerrersShape", "ProfileVector", "SelectionMetric", "greedy_select", "profile_matrix", "profile_of", "score",
    "LinearMatrixCode", "ferrers_subcode", "gabidulin", "min_rank_distance",
    "gaussian", "gv_bound", "projective_size", "punctured_size_bound", "sphere_size",
    "CodeMetric", "SubspaceCode", "build_code", "build_constant_dimension", "dump_code",
    "enumerate_code", "lift", "load_code", "rate", "verify_min_distance",
    "CapacityError", "CertificationError", "FieldError", "ParameterError", "ParseError",
    "ProjCodesError", "ShapeError",
]

__version__ = "0.1.0"
