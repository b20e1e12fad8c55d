"""Exact partition functions of hyperquot schemes on smooth projective curves.

Coefficients live in the E-polynomial realization of the Grothendieck ring
of varieties; series are windowed Laurent series over the multidegree
lattice.  The closed formulas are verified against a brute-force
fixed-component enumeration (the ``oracle`` module).
"""

from .combinat import (
    BlockPermutation,
    BundleSpec,
    CurveSpec,
    InvalidProfile,
    NestingProfile,
    block_permutations,
    enumerate_block_permutations,
    flag_dimension,
    profile_new,
    stratum_weight_identity,
    virtual_dimension,
)
from .curve_motives import (
    InvalidTuple,
    ZetaSeries,
    nested_hilb_class,
    sym_class,
    sym_classes,
    zeta_divide,
    zeta_eval,
    zeta_rationality_check,
    zeta_series,
)
from .epoly import (
    LEFSCHETZ,
    ONE,
    ZERO,
    EPoly,
    InternalInconsistency,
    InvalidRange,
    NegativeExponent,
    chi_y_polynomial,
    epoly_arith,
    epoly_from_json,
    epoly_to_json,
    euler_number,
    flag_motive,
    format_epoly,
    grassmannian_motive,
    lefschetz_power,
    poincare_polynomial,
    specialize,
)
from .formulas import (
    default_lower_bounds,
    euler_partition_function,
    genus0_closed_form,
    motivic_partition_function,
    poincare_series,
    unnested_partition_function,
)
from .oracle import (
    FixedComponent,
    bb_stratum_dimension,
    enumerate_fixed_components,
    oracle_partition_function,
)
from .qseries import (
    InvalidMonomial,
    MSeries,
    OutOfWindow,
    Window,
    WindowMismatch,
    geometric_divide,
    geometric_inverse,
    multiply_sparse,
    one_series,
    series_arith,
    series_from_json,
    series_monomial,
    series_to_json,
    shift_rewindow,
    zero_series,
)
from .smoothness import SmoothnessVerdict, smoothness_status

__all__ = [
    "BlockPermutation",
    "BundleSpec",
    "CurveSpec",
    "EPoly",
    "FixedComponent",
    "InternalInconsistency",
    "InvalidMonomial",
    "InvalidProfile",
    "InvalidRange",
    "InvalidTuple",
    "LEFSCHETZ",
    "MSeries",
    "NegativeExponent",
    "NestingProfile",
    "ONE",
    "OutOfWindow",
    "SmoothnessVerdict",
    "Window",
    "WindowMismatch",
    "ZERO",
    "ZetaSeries",
    "bb_stratum_dimension",
    "block_permutations",
    "chi_y_polynomial",
    "default_lower_bounds",
    "enumerate_block_permutations",
    "enumerate_fixed_components",
    "epoly_arith",
    "epoly_from_json",
    "epoly_to_json",
    "euler_number",
    "euler_partition_function",
    "flag_dimension",
    "flag_motive",
    "format_epoly",
    "genus0_closed_form",
    "geometric_divide",
    "geometric_inverse",
    "grassmannian_motive",
    "lefschetz_power",
    "motivic_partition_function",
    "multiply_sparse",
    "nested_hilb_class",
    "one_series",
    "oracle_partition_function",
    "poincare_polynomial",
    "poincare_series",
    "profile_new",
    "series_arith",
    "series_from_json",
    "series_monomial",
    "series_to_json",
    "shift_rewindow",
    "smoothness_status",
    "specialize",
    "stratum_weight_identity",
    "sym_class",
    "sym_classes",
    "unnested_partition_function",
    "virtual_dimension",
    "zero_series",
    "zeta_divide",
    "zeta_eval",
    "zeta_rationality_check",
    "zeta_series",
]
