"""Positive-definiteness and concavity checks for energy Hessians and weights."""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
import scipy.linalg

from backend.app.core.config import get_config
from backend.app.core.numeric import numeric_context
from backend.app.core.singletons import get_logger
from backend.app.energy.weights import GridSpec, WeightSpec

_logger = get_logger()


class HessianClass(str, Enum):
    POSITIVE_DEFINITE = "positive-definite"
    INDEFINITE = "indefinite"
    SEMIDEFINITE_DEGENERATE = "semidefinite-degenerate"


@dataclass(frozen=True)
class HessianClassification:
    label: HessianClass
    eigenvalues: Tuple[float, ...]
    cholesky_ok: bool

    @property
    def min_eigenvalue(self) -> float:
        return self.eigenvalues[0] if self.eigenvalues else 0.0


@dataclass(frozen=True)
class GridCheck:
    """Outcome of a pointwise inequality on a grid; ``extreme`` is the worst value seen."""
    holds: bool
    extreme: float
    argument: float
    points: int


def _square(H) -> np.ndarray:
    H = np.asarray(H, dtype=float)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {H.shape}")
    return H


def check_diag_dominance(H) -> Tuple[bool, List[float]]:
    """Strict diagonal dominance with a positive diagonal.

    Returns the flag and the margins ``H_ii - Σ_{j≠i} |H_ij|``.
    """
    H = _square(H)
    off = np.abs(H).sum(axis=1) - np.abs(np.diag(H))
    margins = np.diag(H) - off
    holds = bool(np.all(np.diag(H) > 0) and np.all(margins > 0))
    return holds, margins.tolist()


def check_positive_definite(H) -> bool:
    """Cholesky succeeds."""
    try:
        scipy.linalg.cholesky(_square(H), lower=True)
        return True
    except np.linalg.LinAlgError:
        return False


def classify_hessian(H, tol: Optional[float] = None) -> HessianClassification:
    """Classify by the smallest eigenvalue relative to the spectral radius."""
    H = _square(H)
    tol = get_config().HESSIAN_CLASS_TOL if tol is None else tol
    if H.size == 0:
        return HessianClassification(HessianClass.SEMIDEFINITE_DEGENERATE, (), False)
    eigenvalues = np.linalg.eigvalsh((H + H.T) / 2)
    scale = float(np.max(np.abs(eigenvalues)))
    smallest = float(eigenvalues[0])
    if scale == 0 or abs(smallest) <= tol * scale:
        label = HessianClass.SEMIDEFINITE_DEGENERATE
    elif smallest > 0:
        label = HessianClass.POSITIVE_DEFINITE
    else:
        label = HessianClass.INDEFINITE
    cholesky_ok = check_positive_definite(H)
    if (label is HessianClass.POSITIVE_DEFINITE) != cholesky_ok:
        _logger.warning(
            f"Eigenvalue classification {label.value} disagrees with Cholesky (min eigenvalue {smallest:.3e})"
        )
    return HessianClassification(label, tuple(float(v) for v in eigenvalues), cholesky_ok)


def _scan(weight: WeightSpec, grid: Optional[GridSpec], values) -> List[Tuple[float, float]]:
    grid = weight.require_grid(grid or weight.default_grid())
    ctx = numeric_context(get_config().PRECISION_BITS)
    return [(x, float(values.evaluate(ctx, ctx.mpf(x)))) for x in grid.points()]


def check_log_concavity(weight: WeightSpec, grid: Optional[GridSpec] = None) -> GridCheck:
    """``(log ω)'' ≤ tol`` at every grid point."""
    samples = _scan(weight, grid, weight.log_second_derivative)
    x, worst = max(samples, key=lambda s: s[1])
    return GridCheck(worst <= get_config().LOG_CONCAVITY_TOL, worst, x, len(samples))


def check_F_positivity(weight: WeightSpec, grid: Optional[GridSpec] = None) -> GridCheck:
    """Minimum of ``F = q p' - p q'`` on the grid; strict positivity for classical weights."""
    samples = _scan(weight, grid, weight.F)
    x, lowest = min(samples, key=lambda s: s[1])
    holds = lowest > 0 if weight.eta.degree <= 0 else lowest >= 0
    return GridCheck(holds, lowest, x, len(samples))
