"""Translation scan ``f(z) = |T_ω(Z + z) / T_ω(Z)|`` around ``z = 0``.

Samples lie on a real segment ``[-w, w]`` and on a circle ``|z| = ρ``. The
zero configuration is a real maximum when every real sample drops below 1,
and a saddle when the circle samples straddle 1.
"""

import concurrent.futures
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from backend.app.core.config import get_config
from backend.app.core.enhanced_logger import timed_operation
from backend.app.core.errors import XopEnergyError
from backend.app.core.singletons import get_logger
from backend.app.energy.functional import log_T
from backend.app.energy.weights import WeightSpec
from backend.app.roots.zeros import ZeroSet

_logger = get_logger()


class ScanClass(str, Enum):
    REAL_MAX_AND_SADDLE = "real-max-and-saddle"
    REAL_MAX_ONLY = "real-max-only"
    NEITHER = "neither"
    INCONCLUSIVE = "inconclusive"


class ScanSpec(BaseModel):
    """Grid of the translation scan; defaults come from the configuration."""
    window: float = Field(default_factory=lambda: get_config().SCAN_WINDOW, gt=0)
    real_samples: int = Field(default_factory=lambda: get_config().SCAN_REAL_SAMPLES, ge=3)
    radius: float = Field(default_factory=lambda: get_config().SCAN_RADIUS, gt=0)
    circle_samples: int = Field(default_factory=lambda: get_config().SCAN_CIRCLE_SAMPLES, ge=3)
    epsilon: float = Field(default_factory=lambda: get_config().SCAN_EPSILON, gt=0)

    def doubled(self) -> "ScanSpec":
        return self.model_copy(update={
            "real_samples": 2 * self.real_samples - 1,
            "circle_samples": 2 * self.circle_samples,
        })


@dataclass(frozen=True)
class ScanSample:
    z: complex
    log_f: float
    on_circle: bool


@dataclass
class ScanResult:
    spec: ScanSpec
    samples: List[ScanSample] = field(default_factory=list)
    skipped: List[complex] = field(default_factory=list)

    @property
    def real_samples(self) -> List[ScanSample]:
        return [s for s in self.samples if not s.on_circle]

    @property
    def circle_samples(self) -> List[ScanSample]:
        return [s for s in self.samples if s.on_circle]

    def rows(self) -> List[Tuple[float, float, float]]:
        return [(s.z.real, s.z.imag, s.log_f) for s in self.samples]


def _grid(spec: ScanSpec) -> List[Tuple[complex, bool]]:
    half = (spec.real_samples - 1) / 2
    real = [complex(spec.window * (k - half) / half, 0.0) for k in range(spec.real_samples)]
    circle = [
        complex(spec.radius * math.cos(2 * math.pi * k / spec.circle_samples),
                spec.radius * math.sin(2 * math.pi * k / spec.circle_samples))
        for k in range(spec.circle_samples)
    ]
    return [(z, False) for z in real] + [(z, True) for z in circle]


@timed_operation("scan_f")
def scan_f(Z: ZeroSet, weight: WeightSpec, spec: Optional[ScanSpec] = None,
           max_workers: Optional[int] = None) -> ScanResult:
    """``log f(z) = Re[log_T(Z + z) - log_T(Z)]`` on the scan grid.

    Samples where a shifted point hits a singularity of the weight are
    skipped and listed in ``skipped``.
    """
    spec = spec or ScanSpec()
    ctx = Z.context
    points = Z.expanded()
    reference = log_T(points, weight, Z.precision)

    def sample(item):
        z, on_circle = item
        shift = ctx.mpc(z)
        try:
            value = log_T([p + shift for p in points], weight, Z.precision)
        except (XopEnergyError, ZeroDivisionError, ValueError):
            return None, z
        return ScanSample(z, float((value - reference).real), on_circle), z

    workers = max_workers or get_config().MULTISTART_WORKERS
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        outcomes = list(executor.map(sample, _grid(spec)))

    result = ScanResult(spec)
    for outcome, z in outcomes:
        if outcome is None:
            result.skipped.append(z)
        else:
            result.samples.append(outcome)
    if result.skipped:
        _logger.warning(f"Scan skipped {len(result.skipped)} samples at weight singularities")
    return result


def translation_curvature(Z: ZeroSet, weight: WeightSpec) -> float:
    """Second derivative of ``log f`` at ``z = 0`` along the real axis.

    A translation leaves every pair difference unchanged, so
    ``log f(z) = Re Σ_j [log ω(z_j + z) - log ω(z_j)]``. Its first derivative is
    the sum of the stationarity equations and vanishes on a zero set; the
    curvature is ``Σ_j (log ω)''(z_j)``, real because ``Z`` is closed under
    conjugation. Along the imaginary axis the curvature has the opposite sign,
    so a negative value gives a real maximum and a saddle.
    """
    ctx = Z.context
    total = ctx.fsum(weight.log_second_derivative.evaluate(ctx, z) for z in Z.expanded())
    return float(ctx.re(total))


def classify_scan(result: ScanResult) -> ScanClass:
    """Label the behaviour of ``f`` at ``z = 0``.

    ``neither`` if some real sample exceeds ``+ε``; a real maximum needs
    ``log f < -ε (t/w)²`` at every real ``t ≠ 0``; a saddle needs circle
    samples both above ``+ε`` and below ``-ε``.
    """
    eps = result.spec.epsilon
    w = result.spec.window
    real = [s for s in result.real_samples if s.z != 0]
    if any(s.log_f > eps for s in real):
        return ScanClass.NEITHER
    real_max = bool(real) and all(s.log_f < -eps * (s.z.real / w) ** 2 for s in real)
    circle = [s.log_f for s in result.circle_samples]
    saddle = any(v > eps for v in circle) and any(v < -eps for v in circle)
    if real_max and saddle:
        return ScanClass.REAL_MAX_AND_SADDLE
    if real_max:
        return ScanClass.REAL_MAX_ONLY
    return ScanClass.INCONCLUSIVE


@dataclass(frozen=True)
class ScanStability:
    stable: bool
    coarse: ScanClass
    fine: ScanClass


def scan_stability(Z: ZeroSet, weight: WeightSpec, spec: Optional[ScanSpec] = None) -> ScanStability:
    """Repeat the scan at doubled density; the label must not change."""
    spec = spec or ScanSpec()
    coarse = classify_scan(scan_f(Z, weight, spec))
    fine = classify_scan(scan_f(Z, weight, spec.doubled()))
    if coarse is not fine:
        _logger.warning(f"Scan label changed from {coarse.value} to {fine.value} when doubling the grid")
    return ScanStability(coarse is fine, coarse, fine)
