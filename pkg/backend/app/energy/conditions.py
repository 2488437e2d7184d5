"""Sufficient conditions for the zero configuration to maximise ``|T_ω|²``.

Two layers are checked. The Hessian-level inequalities compare
``(-ω'/ω)'`` at each zero against ``4/(x_i - x_j)²`` sums. The η-level
inequalities replace ``-ω'/ω`` by ``(log η)''`` plus the family constant
``k`` (1 for Hermite, 0 otherwise) and are the ones the weight designer
controls. Right-hand sides use real parts only, so a term whose real parts
coincide (a conjugate partner) is ``+inf`` and the inequality fails there.
"""

import math
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from backend.app.core.errors import IllPosedWeightError
from backend.app.core.singletons import get_logger
from backend.app.energy.weights import GridSpec, WeightSpec
from backend.app.roots.zeros import ZeroSet

_logger = get_logger()


class ConditionResult(BaseModel):
    """Per-index margins ``lhs - rhs``; the condition holds iff every margin is positive
    (non-negative for the grid convexity check)."""
    holds: bool
    margins: List[float]
    min_margin: float
    indices: List[int] = Field(default_factory=list)


class SufficientConditionsReport(BaseModel):
    k_alpha: int
    n_real: int
    n_complex: int
    grid_points: int
    conditions: Dict[str, ConditionResult]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.conditions.values())


def _result(margins: List[float], indices: List[int], strict: bool = True) -> ConditionResult:
    if not margins:
        return ConditionResult(holds=True, margins=[], min_margin=math.inf, indices=[])
    lowest = min(margins)
    holds = lowest > 0 if strict else lowest >= 0
    return ConditionResult(holds=holds, margins=margins, min_margin=lowest, indices=indices)


def _inverse_square_sum(ctx, x_i, others, scale: int) -> float:
    total = ctx.mpf(0)
    for x_j in others:
        d = x_i - x_j
        if d == 0:
            return math.inf
        total += scale / (d * d)
    return float(total)


def check_sufficient_conditions(weight: WeightSpec, Z: ZeroSet,
                                grid: Optional[GridSpec] = None) -> SufficientConditionsReport:
    """Evaluate every sufficient condition at the zero set ``Z``.

    Keys of ``conditions``:

    - ``eta_convexity``: ``(log η)'' + k ≥ 0`` on the grid
    - ``eta_bound_at_complex_point`` / ``eta_bound_at_real_part``:
      ``(log η)'' + k > Σ_{complex j≠i} 1/(x_i - x_j)²`` for every index, the
      left side evaluated at ``z_i`` (real part taken) or at ``Re z_i``
    - ``real_index_dominance``: ``(-2ω'/ω)'(x_i) > Σ_{complex j} 4/(x_i - x_j)²``
    - ``complex_index_dominance``: ``(-ω'/ω)'(z_i) + (-ω'/ω)'(z̄_i) > Σ_{j≠i} 4/(x_i - x_j)²``
    - ``real_index_eta_bound``: ``k + (log η)''(x_i) > Σ_{complex j} 1/(x_i - x_j)²``
    - ``complex_index_eta_bound``: ``2k + (log η)''(z_i) + (log η)''(z̄_i) > Σ_{j≠i} 2/(x_i - x_j)²``
    """
    if weight.real_eta_zeros(Z.precision):
        raise IllPosedWeightError(f"eta vanishes inside {weight.domain}")
    ctx = Z.context
    k = weight.k_alpha
    eta2 = weight.eta_log_second_derivative
    L1 = weight.log_second_derivative
    grid = weight.require_grid(grid or weight.default_grid())

    convexity = [float(eta2.evaluate(ctx, ctx.mpf(x))) + k for x in grid.points()]
    lowest = min(convexity)
    conditions = {
        "eta_convexity": ConditionResult(holds=lowest >= 0, margins=[lowest], min_margin=lowest, indices=[]),
    }

    points = Z.expanded()
    real_parts = [z.real for z in points]
    n = Z.n_real
    complex_real_parts = real_parts[n:]

    at_point, at_real = [], []
    for i, z in enumerate(points):
        others = [x for j, x in enumerate(complex_real_parts, start=n) if j != i]
        rhs = _inverse_square_sum(ctx, z.real, others, 1)
        at_point.append(float(ctx.re(eta2.evaluate(ctx, z))) + k - rhs)
        at_real.append(float(eta2.evaluate(ctx, z.real)) + k - rhs)
    everyone = list(range(len(points)))
    conditions["eta_bound_at_complex_point"] = _result(at_point, everyone)
    conditions["eta_bound_at_real_part"] = _result(at_real, everyone)

    real_dom, real_eta = [], []
    for i in range(n):
        x = real_parts[i]
        real_dom.append(float(-2 * L1.evaluate(ctx, x)) - _inverse_square_sum(ctx, x, complex_real_parts, 4))
        real_eta.append(k + float(eta2.evaluate(ctx, x)) - _inverse_square_sum(ctx, x, complex_real_parts, 1))
    conditions["real_index_dominance"] = _result(real_dom, list(range(n)))
    conditions["real_index_eta_bound"] = _result(real_eta, list(range(n)))

    complex_dom, complex_eta = [], []
    for i in range(n, len(points)):
        z = points[i]
        others = [x for j, x in enumerate(real_parts) if j != i]
        lhs_dom = -(L1.evaluate(ctx, z) + L1.evaluate(ctx, ctx.conj(z)))
        lhs_eta = 2 * k + eta2.evaluate(ctx, z) + eta2.evaluate(ctx, ctx.conj(z))
        complex_dom.append(float(ctx.re(lhs_dom)) - _inverse_square_sum(ctx, z.real, others, 4))
        complex_eta.append(float(ctx.re(lhs_eta)) - _inverse_square_sum(ctx, z.real, others, 2))
    complex_indices = list(range(n, len(points)))
    conditions["complex_index_dominance"] = _result(complex_dom, complex_indices)
    conditions["complex_index_eta_bound"] = _result(complex_eta, complex_indices)

    report = SufficientConditionsReport(
        k_alpha=k,
        n_real=n,
        n_complex=Z.n_complex,
        grid_points=grid.count,
        conditions=conditions,
    )
    failing = sorted(name for name, c in conditions.items() if not c.holds)
    _logger.info(f"Sufficient conditions for {weight.describe()}: failing {failing or 'none'}")
    return report
