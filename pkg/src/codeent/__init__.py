"""Exact geometric entanglement of binary linear / CSS code basis states.

The closed form 2^(-(k - j)/2) for the injective norm of a code state,
with j computed in polynomial time by matroid intersection, plus the
brute-force and dense-tensor machinery that verifies it at desk scale.
"""

from .codes import (
    CosetState,
    LinearCode,
    dual,
    even_weight,
    from_generator,
    full,
    hamming_7_4,
    puncture,
    random_code,
    repetition,
    shorten,
    toric_x_code,
    zero,
)
from .entanglement import (
    EntanglementReport,
    analyze,
    css_basis_report,
    delta_brute_force,
    j_brute_force,
    j_of_code,
    witness_shortened_code,
)
from .gf2 import BitMatrix, column_submatrix, kernel_basis, rank, row_reduce, standard_form
from .matroid import (
    DualMatroid,
    IntersectionResult,
    LinearColumnMatroid,
    RankOracleMatroid,
    brute_force_intersection,
    matroid_intersection,
)
from .statevec import (
    StateVector,
    apply_local_unitaries,
    build_coset_state,
    build_state,
    flatten,
    flattening_op_norm,
    injective_norm_numeric,
    overlap_plus_zero,
    suffix_multiplicity_check,
)

__all__ = [
    "BitMatrix",
    "CosetState",
    "DualMatroid",
    "EntanglementReport",
    "IntersectionResult",
    "LinearCode",
    "LinearColumnMatroid",
    "RankOracleMatroid",
    "StateVector",
    "analyze",
    "apply_local_unitaries",
    "brute_force_intersection",
    "build_coset_state",
    "build_state",
    "column_submatrix",
    "css_basis_report",
    "delta_brute_force",
    "dual",
    "even_weight",
    "flatten",
    "flattening_op_norm",
    "from_generator",
    "full",
    "hamming_7_4",
    "injective_norm_numeric",
    "j_brute_force",
    "j_of_code",
    "kernel_basis",
    "matroid_intersection",
    "overlap_plus_zero",
    "puncture",
    "random_code",
    "rank",
    "repetition",
    "row_reduce",
    "shorten",
    "standard_form",
    "suffix_multiplicity_check",
    "toric_x_code",
    "witness_shortened_code",
    "zero",
]

__version__ = "0.1.0"
