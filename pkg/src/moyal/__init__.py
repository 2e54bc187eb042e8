"""Exact generalized Moyal algebra: star products, ordering-dependent quantization,
and the truncated Fock-space matrix representation."""

from .errors import (
    DimMismatch,
    DivisionByZero,
    DivisionByZeroLiteral,
    ExprSyntaxError,
    IndexOutOfRange,
    InsufficientOrder,
    InvalidOrdering,
    MarginTooLarge,
    MoyalError,
    NegativeExponent,
    NonUnitConstantTerm,
    OrderMismatch,
    UndefinedForUnitCase,
    UnknownPreset,
)
from .fock import (
    FockMatrix,
    f_matrix_closed,
    f_matrix_direct,
    ladder_matrices,
    matrix_ops,
    matrix_to_json,
    safe_block_equal,
    substitute_aa,
    wg_matrix,
)
from .lang import format_value, parse_phase_poly
from .opalg import (
    AAPoly,
    OpPoly,
    aa_mul,
    dirac_defect,
    l_map,
    normal_reduce_xp,
    op_adjoint,
    op_mul,
    quantize_wg,
)
from .phase import (
    PhasePoly,
    alpha_transform,
    classical_limit,
    g_star,
    moyal_star,
    partial_derivative,
    poisson_bracket,
    poly_ops,
)
from .scalar import GaussianRational, RadicalScalar, gq_ops, rad_normalize, rad_ops
from .series import (
    PRESETS,
    FormalSeries,
    Ordering,
    g_from_alpha,
    g_from_f,
    preset_f,
    series_mul,
    series_reciprocal,
)

__version__ = "0.1.0"
