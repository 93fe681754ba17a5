"""Exact roots of 2x2 matrices over F_p, F_{p^2} and Z, with a brute-force oracle."""

from .eslgroup import (
    CosetProfile,
    GroupMembership,
    Scope,
    coset_profile,
    enumerate_group,
    generators,
    group_order,
    membership,
    ti_property_check,
    verify_relations,
)
from .ffield import (
    Fp2Elem,
    FpElem,
    PrimeField,
    QuadExt,
    is_square_fp2,
    legendre,
    nth_roots_fp,
    sqrt_fp,
    sqrt_fp2,
)
from .mat2 import (
    QQ,
    ZZ,
    CharPoly,
    Eigenvalues,
    MatrixClass,
    Mat2,
    char_poly,
    classify,
    eigenvalue_square_law,
    eigenvalues,
    jordan_data,
    parse_domain,
)
from .roots import (
    Branch,
    ExistenceVerdict,
    Family,
    RootSet,
    ScaledRoot,
    cube_roots,
    degenerate_square_roots,
    fourth_root,
    fourth_root_formula,
    nth_root_candidates,
    nth_roots,
    power_sum_p,
    sqrt_all,
    sqrt_gl2_formula,
    sqrt_over_Z,
    sqrt_sl2_formula,
    square_root_exists,
    symmetric_poly_h,
)

__version__ = "0.1.0"
