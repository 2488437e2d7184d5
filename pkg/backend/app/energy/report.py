"""One-call analysis of a zero configuration as a critical point of ``|T_ω|²``."""

from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field

from backend.app.core.enhanced_logger import timed_operation
from backend.app.core.singletons import get_logger
from backend.app.energy.conditions import SufficientConditionsReport, check_sufficient_conditions
from backend.app.energy.definiteness import (
    HessianClass,
    check_diag_dominance,
    check_F_positivity,
    check_log_concavity,
    classify_hessian,
)
from backend.app.energy.functional import Configuration, gradient, hessian, log_abs_T_sq
from backend.app.energy.weights import GridSpec, WeightSpec
from backend.app.roots.zeros import ZeroSet
from backend.app.stieltjes.corollary import (
    corollary_identity_complex,
    corollary_identity_real,
    real_form_residual,
)

_logger = get_logger()


class CriticalPointReport(BaseModel):
    weight: str
    n_real: int
    n_complex: int
    precision: int
    log_abs_T_sq: float
    gradient_residual: float = Field(ge=0)
    hessian: List[List[float]]
    symmetry_error: float = Field(ge=0)
    eigenvalues: List[float]
    min_eigenvalue: float
    classification: HessianClass
    cholesky_ok: bool
    diag_dominant: bool
    dominance_margins: List[float]
    log_concave: bool
    log_concavity_max: float
    F_min: float
    F_nonnegative: bool
    identity_residuals: Dict[str, float]
    conditions: SufficientConditionsReport

    @property
    def condition_flags(self) -> Dict[str, bool]:
        return {name: c.holds for name, c in self.conditions.conditions.items()}


def _identity_residuals(Z: ZeroSet, weight: WeightSpec) -> Dict[str, float]:
    real = [corollary_identity_real(Z, i) for i in range(Z.n_real)]
    real_form = [real_form_residual(Z, i) for i in range(Z.n_real)]
    complex_ = [corollary_identity_complex(Z, weight, i) for i in range(Z.n_complex)]
    return {
        "real_equality": max(real, default=0.0),
        "real_form": max(real_form, default=0.0),
        "complex_equality": max((r.equality for r in complex_), default=0.0),
        "complex_zero": max((r.zero for r in complex_), default=0.0),
    }


@timed_operation("analyze_critical_point")
def analyze_critical_point(Z: ZeroSet, weight: WeightSpec,
                           grid: Optional[GridSpec] = None) -> CriticalPointReport:
    """Gradient, Hessian, definiteness and sufficient conditions at ``Z``."""
    c = Configuration.from_zero_set(Z)
    grad = gradient(c, weight)
    H = hessian(c, weight)
    scale = max(float(np.max(np.abs(H))), 1.0) if H.size else 1.0
    symmetry_error = float(np.max(np.abs(H - H.T))) / scale if H.size else 0.0
    classification = classify_hessian(H)
    dominant, margins = check_diag_dominance(H)
    concavity = check_log_concavity(weight, grid)
    positivity = check_F_positivity(weight, grid)

    report = CriticalPointReport(
        weight=weight.describe(),
        n_real=Z.n_real,
        n_complex=Z.n_complex,
        precision=Z.precision,
        log_abs_T_sq=float(log_abs_T_sq(c, weight)),
        gradient_residual=max((float(abs(g)) for g in grad), default=0.0),
        hessian=H.tolist(),
        symmetry_error=symmetry_error,
        eigenvalues=list(classification.eigenvalues),
        min_eigenvalue=classification.min_eigenvalue,
        classification=classification.label,
        cholesky_ok=classification.cholesky_ok,
        diag_dominant=dominant,
        dominance_margins=margins,
        log_concave=concavity.holds,
        log_concavity_max=concavity.extreme,
        F_min=positivity.extreme,
        F_nonnegative=positivity.holds,
        identity_residuals=_identity_residuals(Z, weight),
        conditions=check_sufficient_conditions(weight, Z, grid),
    )
    _logger.info(
        f"Critical point ({Z.n_real} real, {Z.n_complex} complex): gradient residual "
        f"{report.gradient_residual:.2e}, Hessian {report.classification.value}"
    )
    return report
