"""Multistart gradient ascent on ``log|T_ω|²``, used as a brute-force oracle.

Each start climbs with a diagonal preconditioner taken from the Hessian and
Armijo backtracking. The sufficient-increase test allows a drop of a few
units in the last place of the objective, so steps that stall at the
rounding floor are still accepted and the gradient criterion decides.
"""

import concurrent.futures
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from backend.app.core.config import get_config
from backend.app.core.enhanced_logger import timed_operation
from backend.app.core.errors import XopEnergyError
from backend.app.core.singletons import get_logger
from backend.app.energy.functional import Configuration, gradient, hessian, log_abs_T_sq
from backend.app.energy.weights import WeightSpec

_logger = get_logger()

_ARMIJO_C = 1e-4
_MAX_HALVINGS = 60
_DIAGONAL_FLOOR = 1e-8
_NOISE_ULPS = 64


class StartOutcome(BaseModel):
    index: int
    y: List[float]
    value: float
    gradient_norm: float
    steps: int
    converged: bool


class MultistartResult(BaseModel):
    seed: int
    starts: int
    box: Tuple[float, float]
    mu: List[float]
    best_y: List[float]
    best_value: float
    value_spread: float = Field(ge=0)
    position_spread: float = Field(ge=0)
    converged: int
    outcomes: List[StartOutcome]

    def hit_fraction(self, target: Sequence[float], tol: float = 1e-6) -> float:
        """Share of starts whose terminal configuration matches ``target`` up to permutation."""
        key = _canonical(target, self.mu)
        hits = sum(1 for o in self.outcomes if _distance(_canonical(o.y, self.mu), key) <= tol)
        return hits / max(len(self.outcomes), 1)


def _canonical(y: Sequence[float], mu: Sequence[float]) -> List[float]:
    """Real block sorted, then complex points sorted by (μ, y)."""
    n = len(y) - len(mu)
    real = sorted(float(v) for v in y[:n])
    complex_ = sorted(zip((float(m) for m in mu), (float(v) for v in y[n:])))
    return real + [v for _, v in complex_]


def _distance(a: Sequence[float], b: Sequence[float]) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)))) if len(a) else 0.0


def _objective(c: Configuration, weight: WeightSpec) -> float:
    try:
        return float(log_abs_T_sq(c, weight))
    except (XopEnergyError, ZeroDivisionError):
        return -math.inf


def _box(weight: WeightSpec, reference: Optional[Sequence[float]]) -> Tuple[float, float]:
    cfg = get_config()
    lo, hi = weight.domain
    if reference:
        centre = (min(reference) + max(reference)) / 2
        half = cfg.MULTISTART_BOX_SCALE * max(max(reference) - centre, 1.0)
        box_lo, box_hi = centre - half, centre + half
    else:
        box_lo = -2.0 if math.isinf(lo) else lo
        box_hi = box_lo + 4.0 if math.isinf(hi) else hi
    inset = cfg.BOUNDARY_OFFSET * 100
    return max(box_lo, lo + inset), min(box_hi, hi - inset)


def _ascend(c: Configuration, weight: WeightSpec, max_steps: int, grad_tol: float) -> Tuple[Configuration, int, float, bool]:
    value = _objective(c, weight)
    g = np.array([float(v) for v in gradient(c, weight)])
    for step in range(max_steps):
        norm = float(np.max(np.abs(g))) if g.size else 0.0
        if norm < grad_tol:
            return c, step, norm, True
        diag = np.abs(np.diag(hessian(c, weight)))
        direction = g / np.maximum(diag, _DIAGONAL_FLOOR)
        slope = float(g @ direction)
        noise = _NOISE_ULPS * np.spacing(max(abs(value), 1.0))
        t = 1.0
        for _ in range(_MAX_HALVINGS):
            trial = c.with_y(np.asarray(c.y, dtype=float) + t * direction)
            trial_value = _objective(trial, weight)
            if trial_value >= value + _ARMIJO_C * t * slope - noise:
                break
            t /= 2
        else:
            return c, step, norm, False
        c, value = trial, trial_value
        g = np.array([float(v) for v in gradient(c, weight)])
    norm = float(np.max(np.abs(g))) if g.size else 0.0
    return c, max_steps, norm, norm < grad_tol


@timed_operation("multistart_maximize")
def multistart_maximize(weight: WeightSpec, n: int, mu: Sequence[float] = (),
                        starts: Optional[int] = None, seed: Optional[int] = None,
                        reference: Optional[Sequence[float]] = None,
                        spread: Optional[float] = None,
                        max_workers: Optional[int] = None) -> MultistartResult:
    """Maximise ``log|T_ω|²`` over ``n`` real and ``len(mu)`` complex coordinates.

    Args:
        weight: weight of the energy
        n: number of real points
        mu: fixed imaginary parts of the complex points (non-zero)
        starts: number of random starts
        seed: seed of ``numpy.random.default_rng``
        reference: known zero real parts; the start box covers 1.5x their extent
        spread: draw starts within ``reference ± spread`` instead of the box,
            a local check of the critical point ``reference``
        max_workers: threads running starts concurrently

    Returns:
        MultistartResult with per-start outcomes in start order.
    """
    cfg = get_config()
    starts = cfg.MULTISTART_STARTS if starts is None else starts
    seed = cfg.MULTISTART_SEED if seed is None else seed
    if starts < 1:
        raise ValueError(f"at least one start is required, got {starts}")
    mu = [float(m) for m in mu]
    size = n + len(mu)
    rng = np.random.default_rng(seed)
    if spread is None:
        box = _box(weight, reference)
        initial = [rng.uniform(box[0], box[1], size=size) for _ in range(starts)]
    else:
        if reference is None or len(reference) != size or spread <= 0:
            raise ValueError("local starts need a positive spread and a reference of every coordinate")
        centre = np.asarray(reference, dtype=float)
        box = (float(centre.min()) - spread, float(centre.max()) + spread)
        initial = [centre + rng.uniform(-spread, spread, size=size) for _ in range(starts)]

    def run(index: int) -> StartOutcome:
        start = Configuration(tuple(initial[index]), tuple(mu))
        final, steps, norm, converged = _ascend(start, weight, cfg.MULTISTART_MAX_STEPS, cfg.MULTISTART_GRAD_TOL)
        if not converged:
            _logger.warning(f"Start {index} stopped after {steps} steps with gradient {norm:.2e}")
        return StartOutcome(
            index=index,
            y=[float(v) for v in final.y],
            value=_objective(final, weight),
            gradient_norm=norm,
            steps=steps,
            converged=converged,
        )

    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers or cfg.MULTISTART_WORKERS) as executor:
        outcomes = list(executor.map(run, range(starts)))

    finite = [o for o in outcomes if math.isfinite(o.value)]
    best = max(finite or outcomes, key=lambda o: o.value)
    best_key = _canonical(best.y, mu)
    result = MultistartResult(
        seed=seed,
        starts=starts,
        box=box,
        mu=mu,
        best_y=best_key,
        best_value=best.value,
        value_spread=max((best.value - o.value for o in finite), default=0.0),
        position_spread=max((_distance(_canonical(o.y, mu), best_key) for o in finite), default=0.0),
        converged=sum(o.converged for o in outcomes),
        outcomes=outcomes,
    )
    _logger.info(
        f"Multistart ({starts} starts, seed {seed}): best {result.best_value:.12g}, "
        f"{result.converged} converged"
    )
    return result
