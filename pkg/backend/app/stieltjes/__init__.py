"""Stieltjes package for xopenergy.

This package provides functionality for:
1. Second-order equations ``p y'' + q y' + (r + λ) y = 0`` for each family
2. Direct sums ``S_{m,j} = Σ_{k≠j} (x_j - x_k)^{-m}`` over a zero set
3. Closed-form and recurrence predictions of those sums from the equation
4. Force-balance identities at real and complex zeros
"""

from .corollary import (
    ComplexIdentityResidual,
    corollary_identity_complex,
    corollary_identity_real,
    real_form_residual,
)
from .ode import (
    OdeCoefficients,
    classical_ode,
    exceptional_hermite_ode,
    exceptional_jacobi_ode,
    exceptional_laguerre_ode,
    fitted_ode,
    hermite_ode,
)
from .relations import (
    RelationReport,
    RelationRow,
    check_relation,
    predict_S1,
    predict_S2,
    predict_S3,
    taylor_derivatives,
    z_recurrence_predict,
    z_values,
)
from .sums import direct_sum

__all__ = [
    "ComplexIdentityResidual",
    "OdeCoefficients",
    "RelationReport",
    "RelationRow",
    "check_relation",
    "classical_ode",
    "corollary_identity_complex",
    "corollary_identity_real",
    "direct_sum",
    "exceptional_hermite_ode",
    "exceptional_jacobi_ode",
    "exceptional_laguerre_ode",
    "fitted_ode",
    "hermite_ode",
    "predict_S1",
    "predict_S2",
    "predict_S3",
    "real_form_residual",
    "taylor_derivatives",
    "z_recurrence_predict",
    "z_values",
]
