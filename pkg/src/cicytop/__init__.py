"""Exact topological invariants of complete-intersection Calabi-Yau threefolds.

A CICY threefold is cut out by k polynomials in a product of m complex
projective spaces and is recorded as an m x k matrix of non-negative
multi-degrees.  This package computes, in exact integer arithmetic, the
triple intersection tensor, the second and third Chern class tensors, the
Euler characteristic and a family of gcd divisibility invariants, and
exports labeled datasets (including zero-padded feature matrices for
downstream regression models).
"""

from .config import (
    ConfigurationMatrix,
    InvalidConfigurationError,
    ReducedConfiguration,
    ValidationReport,
    reduce_configuration,
    validate,
)
from .intersection import (
    ExtendedMatrix,
    InexactDivisionError,
    SymmetricRank3Tensor,
    build_extended,
    intersection_tensor,
    permanent,
    triple_intersection,
    triple_intersection_oracle,
)
from .chern import (
    ChernData,
    chern2_contracted,
    chern2_doubled,
    chern3_tripled,
    chern_series_oracle,
    compute_chern,
    euler_characteristic,
)
from .invariants import (
    Convention,
    InvariantTuple,
    MissingHodgeError,
    classify,
    gcd_invariants,
    topological_key,
)
from .dataset import (
    DatasetRecord,
    DuplicateIdError,
    FrameOverflowError,
    ParseResult,
    bundled_data_path,
    compute_all,
    export,
    export_features,
    join_hodge,
    load_hodge_table,
    parse_config_list,
)

__version__ = "0.1.0"

__all__ = [
    "ChernData",
    "ConfigurationMatrix",
    "Convention",
    "DatasetRecord",
    "DuplicateIdError",
    "ExtendedMatrix",
    "FrameOverflowError",
    "InexactDivisionError",
    "InvalidConfigurationError",
    "InvariantTuple",
    "MissingHodgeError",
    "ParseResult",
    "ReducedConfiguration",
    "SymmetricRank3Tensor",
    "ValidationReport",
    "build_extended",
    "bundled_data_path",
    "chern2_contracted",
    "chern2_doubled",
    "chern3_tripled",
    "chern_series_oracle",
    "classify",
    "compute_all",
    "compute_chern",
    "euler_characteristic",
    "export",
    "export_features",
    "gcd_invariants",
    "intersection_tensor",
    "join_hodge",
    "load_hodge_table",
    "parse_config_list",
    "permanent",
    "reduce_configuration",
    "topological_key",
    "triple_intersection",
    "triple_intersection_oracle",
    "validate",
]
