"""Truncated Toeplitz operators on model spaces of finite Blaschke products."""

from ._core import (
    BlaschkeProduct,
    Error,
    FormulaMismatch,
    ModelSpace,
    NoCanonicalFactorization,
    NoMultiplier,
    ParseError,
    RationalFn,
    SingularOperator,
    conjugation_matrix,
    crofoot_multiplier,
    dual_kernel,
    equivalence_transform,
    frostman_shift,
    hankel_rank,
    inner_product,
    invert_direct,
    is_zero_symbol,
    l2_norm,
    multiplication_matrix,
    multiplier_between,
    numerical_rank,
    rank_equivalence,
    reproducing_kernels,
    run_command,
    run_suite,
    tto_matrix,
    wh_inverse,
)

__all__ = [name for name in dir() if not name.startswith("_")]
