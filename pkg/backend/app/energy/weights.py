"""Weight families ``ω = ω̂ · p_factor`` for the energy function.

``ω̂`` is a classical or exceptional Hermite, Laguerre or Jacobi weight
(base weight divided by ``η²``). ``p`` and ``q`` are the first- and
second-order coefficients of the family's differential equation, given by
their explicit family formulas; the Pearson equation ``(p ω̂)' = q ω̂`` is
checked numerically rather than assumed.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from backend.app.core.config import get_config
from backend.app.core.errors import (
    DomainError,
    IllPosedWeightError,
    ParameterRangeError,
    PearsonError,
    SingularEvaluationError,
)
from backend.app.core.numeric import from_exact, numeric_context, private_context
from backend.app.core.singletons import get_logger
from backend.app.polycore.classical import Family
from backend.app.polycore.exact import ExactPoly, RationalFunction
from backend.app.polycore.exceptional import eta_hermite
from backend.app.polycore.partitions import Partition

_logger = get_logger()

Rational = Union[int, Fraction, str]

_ONE = ExactPoly.constant(1)
_X = ExactPoly.x()
_XR = RationalFunction(_X)

_DOMAINS = {
    Family.HERMITE: (-math.inf, math.inf),
    Family.LAGUERRE: (0.0, math.inf),
    Family.JACOBI: (-1.0, 1.0),
}


class WeightKind(str, Enum):
    CLASSICAL = "classical"
    EXCEPTIONAL = "exceptional"


def _family_p(family: Family) -> ExactPoly:
    if family is Family.HERMITE:
        return _ONE
    if family is Family.LAGUERRE:
        return _X
    return ExactPoly((1, 0, -1))


@dataclass(frozen=True)
class GridSpec:
    """Evenly spaced sample points ``lo..hi`` (inclusive)."""
    lo: float
    hi: float
    count: int

    def __post_init__(self):
        if self.count < 2 or not self.lo < self.hi:
            raise ValueError(f"invalid grid [{self.lo}, {self.hi}] with {self.count} points")

    def points(self) -> List[float]:
        step = (self.hi - self.lo) / (self.count - 1)
        return [self.lo + k * step for k in range(self.count)]


@dataclass(frozen=True)
class PearsonReport:
    max_residual: float
    points: int
    holds: bool


@dataclass(frozen=True)
class WeightSpec:
    """Weight descriptor: family, parameters, η, domain and ODE coefficients."""
    family: Family
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    eta: ExactPoly = _ONE
    p_factor: ExactPoly = _ONE
    kind: WeightKind = field(init=False)
    p: RationalFunction = field(init=False)
    q: RationalFunction = field(init=False)
    log_derivative: RationalFunction = field(init=False)
    log_second_derivative: RationalFunction = field(init=False)
    eta_log_second_derivative: RationalFunction = field(init=False)
    domain: Tuple[float, float] = field(init=False)

    def __post_init__(self):
        family = Family(self.family)
        alpha, beta = Fraction(self.alpha), Fraction(self.beta)
        if family is not Family.HERMITE and alpha <= -1:
            raise ParameterRangeError(f"alpha must exceed -1, got {alpha}")
        if family is Family.JACOBI and beta <= -1:
            raise ParameterRangeError(f"beta must exceed -1, got {beta}")
        if self.eta.is_zero or self.p_factor.is_zero:
            raise ParameterRangeError("eta and p_factor must be non-zero polynomials")

        eta_ratio = RationalFunction(self.eta.differentiate(), self.eta)
        p = _family_p(family)

        if family is Family.HERMITE:
            base = RationalFunction(ExactPoly((0, -2)))
            q = RationalFunction(ExactPoly((0, -2))) - 2 * eta_ratio
        elif family is Family.LAGUERRE:
            base = RationalFunction(ExactPoly((alpha, -1)), _X)
            q = RationalFunction(ExactPoly((alpha + 1, -1))) - 2 * _XR * eta_ratio
        else:
            base = RationalFunction(ExactPoly((beta - alpha, -(alpha + beta))), p)
            q = (RationalFunction(ExactPoly((beta - alpha, -(alpha + beta + 2))))
                 - 2 * RationalFunction(p) * eta_ratio)

        log_derivative = base - 2 * eta_ratio
        if self.p_factor.degree > 0:
            log_derivative = log_derivative + RationalFunction(self.p_factor.differentiate()) / RationalFunction(self.p_factor)

        object.__setattr__(self, "family", family)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "kind", WeightKind.CLASSICAL if self.eta.degree <= 0 else WeightKind.EXCEPTIONAL)
        object.__setattr__(self, "p", RationalFunction(p))
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "log_derivative", log_derivative)
        object.__setattr__(self, "log_second_derivative", log_derivative.differentiate())
        object.__setattr__(self, "eta_log_second_derivative", eta_ratio.differentiate())
        object.__setattr__(self, "domain", _DOMAINS[family])

    # ---------------------- constructors ---------------------- #
    @classmethod
    def hermite(cls, eta: Optional[ExactPoly] = None) -> "WeightSpec":
        return cls(Family.HERMITE, eta=_ONE if eta is None else eta)

    @classmethod
    def laguerre(cls, alpha: Rational = 0, eta: Optional[ExactPoly] = None,
                 p_factor: Optional[ExactPoly] = None) -> "WeightSpec":
        """Laguerre weight; ``p_factor`` defaults to ``x``."""
        return cls(Family.LAGUERRE, alpha=Fraction(alpha), eta=_ONE if eta is None else eta,
                   p_factor=_X if p_factor is None else p_factor)

    @classmethod
    def jacobi(cls, alpha: Rational = 0, beta: Rational = 0, eta: Optional[ExactPoly] = None,
               p_factor: Optional[ExactPoly] = None) -> "WeightSpec":
        """Jacobi weight; ``p_factor`` defaults to ``1 - x²``."""
        return cls(Family.JACOBI, alpha=Fraction(alpha), beta=Fraction(beta), eta=_ONE if eta is None else eta,
                   p_factor=_family_p(Family.JACOBI) if p_factor is None else p_factor)

    @classmethod
    def exceptional_hermite(cls, partition: Partition) -> "WeightSpec":
        return cls(Family.HERMITE, eta=eta_hermite(partition))

    @classmethod
    def classical(cls, family: Union[Family, str], alpha: Rational = 0, beta: Rational = 0) -> "WeightSpec":
        family = Family(family)
        if family is Family.HERMITE:
            return cls.hermite()
        if family is Family.LAGUERRE:
            return cls.laguerre(alpha)
        return cls.jacobi(alpha, beta)

    # ----------------------- properties ----------------------- #
    @property
    def k_alpha(self) -> int:
        """1 for Hermite, 0 for Laguerre and Jacobi."""
        return 1 if self.family is Family.HERMITE else 0

    @property
    def F(self) -> RationalFunction:
        """``q p' - p q'``."""
        return self.q * self.p.differentiate() - self.p * self.q.differentiate()

    def contains(self, x: float) -> bool:
        lo, hi = self.domain
        return lo < x < hi

    def default_grid(self, count: Optional[int] = None, window: Optional[float] = None) -> GridSpec:
        """Grid strictly inside I; unbounded ends are cut at ``±window``."""
        cfg = get_config()
        count = count or cfg.CONDITION_GRID_POINTS
        window = window or cfg.UNBOUNDED_WINDOW
        offset = cfg.BOUNDARY_OFFSET
        lo, hi = self.domain
        lo = -window if math.isinf(lo) else lo + offset
        hi = window if math.isinf(hi) else hi - offset
        return GridSpec(lo, hi, count)

    def require_grid(self, grid: GridSpec) -> GridSpec:
        if not (self.contains(grid.lo) and self.contains(grid.hi)):
            raise DomainError(f"grid [{grid.lo}, {grid.hi}] leaves the domain {self.domain}")
        return grid

    # ----------------------- evaluation ----------------------- #
    def log_base_weight(self, z, ctx):
        """``log ω̂(z)`` with principal branches."""
        z = ctx.convert(z)
        if self.family is Family.HERMITE:
            value = -z * z
        elif self.family is Family.LAGUERRE:
            value = -z
            if self.alpha != 0:
                value += from_exact(ctx, self.alpha) * _log(ctx, z)
        else:
            value = ctx.mpf(0)
            if self.alpha != 0:
                value += from_exact(ctx, self.alpha) * _log(ctx, 1 - z)
            if self.beta != 0:
                value += from_exact(ctx, self.beta) * _log(ctx, 1 + z)
        if self.eta.degree > 0:
            value -= 2 * _log(ctx, self.eta.evaluate(ctx, z))
        return value

    def log_weight(self, z, ctx=None):
        """``log ω(z) = log ω̂(z) + log p_factor(z)``."""
        ctx = ctx or numeric_context(get_config().PRECISION_BITS)
        value = self.log_base_weight(z, ctx)
        if self.p_factor.degree > 0 or self.p_factor.leading_coefficient != 1:
            value += _log(ctx, self.p_factor.evaluate(ctx, ctx.convert(z)))
        return value

    # ----------------------- validation ----------------------- #
    def pearson_residual(self, grid: Optional[GridSpec] = None,
                         precision: Optional[int] = None) -> PearsonReport:
        """Relative residual of ``(p ω̂)' = q ω̂`` on a grid inside I.

        Uses ``d/dx log(p ω̂) - q/p`` scaled by ``max(|q/p|, 1)``; the
        derivative comes from mpmath's numerical differentiation.
        """
        cfg = get_config()
        grid = self.require_grid(grid or self.default_grid(cfg.PEARSON_GRID_POINTS, window=4.0))
        ctx = private_context(precision or cfg.PRECISION_BITS)
        p_poly = self.p.numerator

        def log_p_weight(t):
            value = self.log_base_weight(t, ctx)
            if p_poly.degree > 0:
                value += ctx.log(p_poly.evaluate(ctx, t))
            return ctx.re(value)

        worst = 0.0
        for x in grid.points():
            t = ctx.mpf(x)
            derivative = ctx.diff(log_p_weight, t)
            target = self.q.evaluate(ctx, t) / self.p.evaluate(ctx, t)
            residual = abs(derivative - target) / max(abs(target), 1)
            worst = max(worst, float(residual))
        return PearsonReport(worst, grid.count, worst < cfg.PEARSON_TOL)

    def real_eta_zeros(self, precision: Optional[int] = None) -> List[float]:
        """Real zeros of η lying inside I."""
        if self.eta.degree <= 0:
            return []
        from backend.app.roots.aberth import find_roots

        cfg = get_config()
        roots = find_roots(self.eta, precision=precision)
        inside = []
        for z in roots:
            if abs(z.imag) <= cfg.REAL_TAU * max(1, abs(z)) and self.contains(float(z.real)):
                inside.append(float(z.real))
        return inside

    def validate(self, precision: Optional[int] = None) -> "WeightSpec":
        """Raise unless η is zero-free on I and the Pearson equation holds."""
        zeros = self.real_eta_zeros(precision)
        if zeros:
            raise IllPosedWeightError(f"eta vanishes inside {self.domain} at {zeros}")
        report = self.pearson_residual(precision=precision)
        if not report.holds:
            raise PearsonError(f"Pearson residual {report.max_residual:.3e} exceeds tolerance")
        _logger.debug(f"Weight {self.describe()} validated (Pearson residual {report.max_residual:.2e})")
        return self

    def describe(self) -> str:
        parts = [self.kind.value, self.family.value]
        if self.family is not Family.HERMITE:
            parts.append(f"alpha={self.alpha}")
        if self.family is Family.JACOBI:
            parts.append(f"beta={self.beta}")
        if self.eta.degree > 0:
            parts.append(f"deg(eta)={self.eta.degree}")
        if self.p_factor.degree > 0:
            parts.append(f"p_factor={self.p_factor}")
        return " ".join(parts)


def _log(ctx, value):
    if value == 0:
        raise SingularEvaluationError("logarithm of zero in weight evaluation")
    return ctx.log(value)
