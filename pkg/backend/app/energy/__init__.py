"""Energy package for xopenergy.

This package provides functionality for:
1. Classical and exceptional weights with their Pearson data
2. The log energy of point configurations with analytic gradient and Hessian
3. Definiteness, concavity and sufficient-condition checks at zero sets
4. Finite-difference oracles and boundary-decay checks
"""

from .conditions import ConditionResult, SufficientConditionsReport, check_sufficient_conditions
from .definiteness import (
    GridCheck,
    HessianClass,
    HessianClassification,
    check_diag_dominance,
    check_F_positivity,
    check_log_concavity,
    check_positive_definite,
    classify_hessian,
)
from .functional import (
    Configuration,
    HessianConvention,
    gradient,
    hessian,
    log_abs_T_sq,
    log_abs_T_sq_expanded,
    log_T,
)
from .report import CriticalPointReport, analyze_critical_point
from .verification import (
    BoundaryDecay,
    boundary_decay,
    check_gradient,
    check_hessian,
    fd_gradient,
    fd_hessian,
    random_configurations,
)
from .weights import GridSpec, PearsonReport, WeightKind, WeightSpec

__all__ = [
    "BoundaryDecay",
    "ConditionResult",
    "Configuration",
    "CriticalPointReport",
    "GridCheck",
    "GridSpec",
    "HessianClass",
    "HessianClassification",
    "HessianConvention",
    "PearsonReport",
    "SufficientConditionsReport",
    "WeightKind",
    "WeightSpec",
    "analyze_critical_point",
    "boundary_decay",
    "check_F_positivity",
    "check_diag_dominance",
    "check_gradient",
    "check_hessian",
    "check_log_concavity",
    "check_positive_definite",
    "check_sufficient_conditions",
    "classify_hessian",
    "fd_gradient",
    "fd_hessian",
    "gradient",
    "hessian",
    "log_T",
    "log_abs_T_sq",
    "log_abs_T_sq_expanded",
    "random_configurations",
]
