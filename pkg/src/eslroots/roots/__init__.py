"""Square, cube and n-th roots of 2x2 matrices over F_p and Z."""

from .higher import cube_roots, nth_root_candidates, nth_roots, scalar_nth_roots
from .square import (
    degenerate_square_roots,
    fourth_root,
    fourth_root_formula,
    sqrt_all,
    sqrt_gl2_formula,
    sqrt_over_Z,
    sqrt_sl2_formula,
    square_root_exists,
)
from .symmetric import h_sequence, power_sum_p, s_t_sequence, symmetric_poly_h
from .types import (
    Branch,
    ExistenceVerdict,
    Family,
    LimitingCaseError,
    MisuseError,
    RootSet,
    ScalarInputError,
    ScaledRoot,
)

__all__ = [
    "Branch",
    "ExistenceVerdict",
    "Family",
    "LimitingCaseError",
    "MisuseError",
    "RootSet",
    "ScalarInputError",
    "ScaledRoot",
    "cube_roots",
    "degenerate_square_roots",
    "fourth_root",
    "fourth_root_formula",
    "h_sequence",
    "nth_root_candidates",
    "nth_roots",
    "power_sum_p",
    "s_t_sequence",
    "scalar_nth_roots",
    "sqrt_all",
    "sqrt_gl2_formula",
    "sqrt_over_Z",
    "sqrt_sl2_formula",
    "square_root_exists",
    "symmetric_poly_h",
]
