"""Finite-difference oracles and boundary checks for the analytic energy derivatives."""

import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from backend.app.core.config import get_config
from backend.app.core.errors import CoincidentPointsError
from backend.app.energy.functional import Configuration, gradient, hessian, log_abs_T_sq
from backend.app.energy.weights import WeightSpec


@dataclass(frozen=True)
class DerivativeCheck:
    analytic: np.ndarray
    numeric: np.ndarray
    relative_error: float


def _relative(a: np.ndarray, b: np.ndarray) -> float:
    scale = max(float(np.max(np.abs(b))), 1.0)
    return float(np.max(np.abs(a - b))) / scale


def fd_gradient(c: Configuration, weight: WeightSpec, step: Optional[float] = None) -> np.ndarray:
    """Central differences of ``log|T_ω|²`` in each free coordinate."""
    step = step or get_config().FD_GRADIENT_STEP
    y = [float(v) for v in c.y]
    grad = np.zeros(len(y))
    for ii in range(len(y)):
        y[ii] += step
        f_hi = log_abs_T_sq(c.with_y(y), weight)
        y[ii] -= 2.0 * step
        f_lo = log_abs_T_sq(c.with_y(y), weight)
        y[ii] += step
        grad[ii] = float(f_hi - f_lo) / (2.0 * step)
    return grad


def fd_hessian(c: Configuration, weight: WeightSpec, step: Optional[float] = None) -> np.ndarray:
    """Central differences of the analytic gradient, negated and symmetrised."""
    step = step or get_config().FD_HESSIAN_STEP
    y = [float(v) for v in c.y]
    H = np.zeros((len(y), len(y)))
    for jj in range(len(y)):
        y[jj] += step
        g_hi = np.array([float(g) for g in gradient(c.with_y(y), weight)])
        y[jj] -= 2.0 * step
        g_lo = np.array([float(g) for g in gradient(c.with_y(y), weight)])
        y[jj] += step
        H[:, jj] = -(g_hi - g_lo) / (2.0 * step)
    return (H + H.T) / 2


def check_gradient(c: Configuration, weight: WeightSpec, step: Optional[float] = None) -> DerivativeCheck:
    analytic = np.array([float(g) for g in gradient(c, weight)])
    numeric = fd_gradient(c, weight, step)
    return DerivativeCheck(analytic, numeric, _relative(analytic, numeric))


def check_hessian(c: Configuration, weight: WeightSpec, step: Optional[float] = None) -> DerivativeCheck:
    analytic = hessian(c, weight)
    numeric = fd_hessian(c, weight, step)
    return DerivativeCheck(analytic, numeric, _relative(analytic, numeric))


def _sampling_box(weight: WeightSpec):
    lo, hi = weight.domain
    if math.isinf(lo) and math.isinf(hi):
        return -2.0, 2.0
    if math.isinf(hi):
        return lo + 0.2, lo + 4.0
    margin = 0.05 * (hi - lo)
    return lo + margin, hi - margin


def random_configurations(weight: WeightSpec, n: int, m_pairs: int, count: int,
                          seed: Optional[int] = None, min_gap: float = 0.1) -> List[Configuration]:
    """Random non-degenerate configurations with ``n`` real points and ``m_pairs`` conjugate pairs.

    Real coordinates are drawn inside I (cut at ``±2`` where unbounded) and
    kept ``min_gap`` apart; pair imaginary parts lie in ``[0.2, 1.0]``.
    """
    rng = np.random.default_rng(get_config().MULTISTART_SEED if seed is None else seed)
    lo, hi = _sampling_box(weight)

    configurations = []
    while len(configurations) < count:
        real = np.sort(rng.uniform(lo, hi, size=n))
        if n > 1 and np.min(np.diff(real)) < min_gap:
            continue
        centres = rng.uniform(lo, hi, size=m_pairs)
        mus = rng.uniform(0.2, 1.0, size=m_pairs)
        y = list(real)
        mu = []
        for x, s in zip(centres, mus):
            y.extend((x, x))
            mu.extend((s, -s))
        try:
            configuration = Configuration(tuple(y), tuple(mu))
            log_abs_T_sq(configuration, weight)
        except CoincidentPointsError:
            continue
        configurations.append(configuration)
    return configurations


@dataclass(frozen=True)
class BoundaryDecay:
    index: int
    decreasing_left: bool
    decreasing_right: bool
    values_left: List[float]
    values_right: List[float]

    @property
    def decays(self) -> bool:
        return self.decreasing_left and self.decreasing_right


def _ray(start: float, end: float, samples: int) -> List[float]:
    return [start + (end - start) * k / samples for k in range(1, samples + 1)]


def _decays_after_peak(values: List[float]) -> bool:
    if len(values) < 2:
        return True
    peak = values.index(max(values))
    tail = values[peak:]
    return len(tail) > 1 and all(b < a for a, b in zip(tail, tail[1:]))


def boundary_decay(c: Configuration, weight: WeightSpec, index: int, samples: int = 20) -> BoundaryDecay:
    """Move coordinate ``index`` from the edge of the configuration toward each end of I.

    Along each ray ``log|T_ω|²`` first rises (the point leaves its neighbours)
    and must then decrease monotonically to the boundary.
    """
    cfg = get_config()
    y = [float(v) for v in c.y]
    extent_lo, extent_hi = min(y), max(y)
    lo, hi = weight.domain
    lo = extent_lo - cfg.UNBOUNDED_WINDOW if math.isinf(lo) else lo + cfg.BOUNDARY_OFFSET
    hi = extent_hi + cfg.UNBOUNDED_WINDOW if math.isinf(hi) else hi - cfg.BOUNDARY_OFFSET

    def values(path: List[float]) -> List[float]:
        out = []
        for t in path:
            moved = list(y)
            moved[index] = t
            out.append(float(log_abs_T_sq(c.with_y(moved), weight)))
        return out

    left = values(_ray(extent_lo, lo, samples)) if extent_lo > lo else []
    right = values(_ray(extent_hi, hi, samples)) if extent_hi < hi else []
    return BoundaryDecay(
        index=index,
        decreasing_left=_decays_after_peak(left),
        decreasing_right=_decays_after_peak(right),
        values_left=left,
        values_right=right,
    )
