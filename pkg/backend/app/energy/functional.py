"""Energy function ``T_ω`` of a point configuration, in log domain.

A configuration has ``n`` real points ``y_1..y_n`` and ``m`` complex points
``y_{n+t} + iμ_t`` whose imaginary parts stay fixed; only the ``y`` are free.
``log|T_ω|² = 2 Σ_j Re log ω(z_j) + 4 Σ_{i<j} log|z_i - z_j|``.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from backend.app.core.config import get_config
from backend.app.core.errors import CoincidentPointsError, DomainError
from backend.app.core.numeric import numeric_context
from backend.app.energy.weights import WeightSpec
from backend.app.roots.zeros import ZeroSet


class HessianConvention(str, Enum):
    """``modulus``: Hessian of ``-log|T_ω|²``; ``classical``: of ``-log T_ω`` (real points only)."""
    MODULUS = "modulus"
    CLASSICAL = "classical"


@dataclass(frozen=True)
class Configuration:
    """Free coordinates ``y`` (length n+m) and fixed imaginary parts ``mu`` (length m)."""
    y: Tuple
    mu: Tuple = ()
    precision: int = 53

    def __post_init__(self):
        object.__setattr__(self, "y", tuple(self.y))
        object.__setattr__(self, "mu", tuple(self.mu))
        if len(self.mu) > len(self.y):
            raise ValueError(f"{len(self.mu)} imaginary parts for {len(self.y)} coordinates")
        if any(mu == 0 for mu in self.mu):
            raise ValueError("imaginary parts must be non-zero; enter real points as real coordinates")

    @classmethod
    def from_zero_set(cls, Z: ZeroSet) -> "Configuration":
        """Real zeros ascending, then each pair as ``+μ`` followed by ``-μ``."""
        y = list(Z.real_zeros)
        mu = []
        for x, m in Z.pairs:
            y.extend((x, x))
            mu.extend((m, -m))
        return cls(tuple(y), tuple(mu), Z.precision)

    @property
    def n(self) -> int:
        return len(self.y) - len(self.mu)

    @property
    def m(self) -> int:
        return len(self.mu)

    @property
    def size(self) -> int:
        return len(self.y)

    @property
    def context(self):
        return numeric_context(self.precision)

    def imaginary_parts(self) -> List:
        ctx = self.context
        return [ctx.zero] * self.n + [ctx.mpf(mu) for mu in self.mu]

    def points(self) -> List:
        ctx = self.context
        return [ctx.mpc(y, mu) for y, mu in zip(self.y, self.imaginary_parts())]

    def with_y(self, y: Sequence) -> "Configuration":
        return Configuration(tuple(y), self.mu, self.precision)

    def real_parts(self) -> List:
        ctx = self.context
        return [ctx.mpf(y) for y in self.y]


def _require_distinct(ctx, points: Sequence) -> None:
    guard = get_config().COINCIDENCE_GUARD
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if abs(points[i] - points[j]) <= guard * max(1, abs(points[i])):
                raise CoincidentPointsError(f"points {i} and {j} coincide at {ctx.nstr(points[i], 17)}")


def _require_domain(c: Configuration, weight: WeightSpec) -> None:
    for i in range(c.n):
        if not weight.contains(float(c.y[i])):
            raise DomainError(f"real point {i} = {float(c.y[i])} lies outside {weight.domain}")


def log_T(points: Sequence, weight: WeightSpec, precision: Optional[int] = None):
    """``Σ log ω(z_j) + 2 Σ_{i<j} log(z_i - z_j)`` with principal logarithms.

    Only the real part (``log|T_ω|``) is branch independent.
    """
    ctx = numeric_context(precision or get_config().PRECISION_BITS)
    points = [ctx.mpc(z) for z in points]
    _require_distinct(ctx, points)
    total = ctx.mpc(0)
    for z in points:
        total += weight.log_weight(z, ctx)
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            total += 2 * ctx.log(points[i] - points[j])
    return total


def log_abs_T_sq(c: Configuration, weight: WeightSpec):
    """``log|T_ω(Y)|² = 2 Re log_T``."""
    _require_domain(c, weight)
    return 2 * log_T(c.points(), weight, c.precision).real


def log_abs_T_sq_expanded(c: Configuration, weight: WeightSpec):
    """Same quantity from the real product form of ``T_ω · conj(T_ω)``.

    Real points contribute ``ω(y)²`` and ``(y_i - y_j)^4``; complex points
    contribute ``ω(z) ω(z̄)`` and ``((y_i - y_j)² + (μ_i - μ_j)²)²``.
    """
    _require_domain(c, weight)
    ctx = c.context
    y = c.real_parts()
    mu = c.imaginary_parts()
    _require_distinct(ctx, c.points())
    total = ctx.mpf(0)
    for i in range(c.size):
        if i < c.n:
            total += 2 * ctx.re(weight.log_weight(y[i], ctx))
        else:
            z = ctx.mpc(y[i], mu[i])
            total += (weight.log_weight(z, ctx) + weight.log_weight(ctx.conj(z), ctx)).real
    for i in range(c.size):
        for j in range(i + 1, c.size):
            d, e = y[i] - y[j], mu[i] - mu[j]
            total += 2 * ctx.log(d * d + e * e)
    return total


def gradient(c: Configuration, weight: WeightSpec) -> List:
    """Partials of ``log|T_ω|²`` in ``y``.

    ``2 Re ω'/ω(z_i) + Σ_{j≠i} 4 d/(d² + e²)`` with ``d = y_i - y_j`` and
    ``e = μ_i - μ_j`` (``μ = 0`` for real points).
    """
    _require_domain(c, weight)
    ctx = c.context
    points = c.points()
    _require_distinct(ctx, points)
    y = c.real_parts()
    mu = c.imaginary_parts()
    grad = []
    for i in range(c.size):
        value = 2 * ctx.re(weight.log_derivative.evaluate(ctx, points[i]))
        for j in range(c.size):
            if j != i:
                d, e = y[i] - y[j], mu[i] - mu[j]
                value += 4 * d / (d * d + e * e)
        grad.append(value)
    return grad


def hessian(c: Configuration, weight: WeightSpec,
            convention: HessianConvention = HessianConvention.MODULUS) -> np.ndarray:
    """Hessian of the negated log energy.

    ``modulus``: ``-log|T_ω|²``, off-diagonal ``-4(d² - e²)/(d² + e²)²`` and
    diagonal ``-2 Re L'(z_i) + Σ_j 4(d² - e²)/(d² + e²)²``.
    ``classical``: ``-log T_ω`` for real configurations, off-diagonal
    ``-2/(y_i - y_j)²`` and diagonal ``-L'(y_i) + Σ_j 2/(y_i - y_j)²``.
    """
    convention = HessianConvention(convention)
    if convention is HessianConvention.CLASSICAL and c.m:
        raise ValueError("the classical convention applies to real configurations only")
    _require_domain(c, weight)
    ctx = c.context
    points = c.points()
    _require_distinct(ctx, points)
    y = c.real_parts()
    mu = c.imaginary_parts()
    scale = 1 if convention is HessianConvention.CLASSICAL else 2

    H = [[ctx.mpf(0)] * c.size for _ in range(c.size)]
    for i in range(c.size):
        diag = -scale * ctx.re(weight.log_second_derivative.evaluate(ctx, points[i]))
        for j in range(c.size):
            if j == i:
                continue
            d, e = y[i] - y[j], mu[i] - mu[j]
            r2 = d * d + e * e
            term = 2 * scale * (d * d - e * e) / (r2 * r2)
            H[i][j] = -term
            diag += term
        H[i][i] = diag
    return np.array([[float(v) for v in row] for row in H], dtype=float)
