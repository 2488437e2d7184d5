"""Closed-form and recurrence predictions of ``S_{m,j}`` from the differential equation.

At a simple zero ``x_j`` normalize ``y(x_j) = 0, y'(x_j) = 1`` and write
``y(x_j + h) = h g(h)``. Then ``g'/g = Σ_s (-1)^s S_{s+1,j} h^s`` and the
Taylor coefficients of ``g`` follow from differentiating the equation. All
derivatives of ``p, q, r`` are taken exactly; numbers enter only at the end.
"""

import concurrent.futures
from math import comb, factorial
from typing import Callable, List, Optional, Sequence

from pydantic import BaseModel, Field

from backend.app.core.config import get_config
from backend.app.core.errors import SingularEvaluationError
from backend.app.core.numeric import complex_to_dict, numeric_context
from backend.app.core.singletons import get_logger
from backend.app.stieltjes.ode import OdeCoefficients
from backend.app.stieltjes.sums import direct_sum

_logger = get_logger()


def _context(precision: Optional[int]):
    return numeric_context(precision or get_config().PRECISION_BITS)


def _values(ode: OdeCoefficients, ctx, x, order: int):
    """Numeric ``(p^(i), q^(i), r^(i))(x)`` for ``i = 0..order``."""
    table = ode.derivative_table(order)
    return [tuple(f.evaluate(ctx, x) for f in row) for row in table]


def _leading(ctx, value):
    if value == 0:
        raise SingularEvaluationError("leading coefficient p vanishes at the zero")
    return value


def predict_S1(ode: OdeCoefficients, x_j, precision: Optional[int] = None):
    """``S_1 = -q / (2p)``."""
    ctx = _context(precision)
    x = ctx.mpc(x_j)
    (p, q, _), = _values(ode, ctx, x, 0)
    return -q / (2 * _leading(ctx, p))


def predict_S2(ode: OdeCoefficients, x_j, precision: Optional[int] = None):
    """``S_2 = S_1^2 + (2(p' + q) S_1 + q' + r) / (3p)``."""
    ctx = _context(precision)
    x = ctx.mpc(x_j)
    (p, q, r), (p1, q1, _) = _values(ode, ctx, x, 1)
    p = _leading(ctx, p)
    s1 = -q / (2 * p)
    return s1 ** 2 + (2 * (p1 + q) * s1 + q1 + r) / (3 * p)


def predict_S3(ode: OdeCoefficients, x_j, precision: Optional[int] = None):
    """Third power sum from the twice-differentiated equation.

    ``p y'''' = -[3(2p'+q)(S_1^2-S_2) + 2(p''+2q'+r) S_1 + q''+2r']`` and
    ``S_3 = y''''/8 + (3/2) S_1 S_2 - (1/2) S_1^3``. The ``q''+2r'`` block
    vanishes when q and r are polynomials.
    """
    ctx = _context(precision)
    x = ctx.mpc(x_j)
    (p, q, r), (p1, q1, r1), (p2, q2, _) = _values(ode, ctx, x, 2)
    p = _leading(ctx, p)
    s1 = -q / (2 * p)
    s2 = s1 ** 2 + (2 * (p1 + q) * s1 + q1 + r) / (3 * p)
    fourth = -(3 * (2 * p1 + q) * (s1 ** 2 - s2) + 2 * (p2 + 2 * q1 + r) * s1 + q2 + 2 * r1) / p
    return fourth / 8 + ctx.mpf(3) / 2 * s1 * s2 - s1 ** 3 / 2


def taylor_derivatives(ode: OdeCoefficients, x_j, order: int, precision: Optional[int] = None) -> List:
    """``y^(k)(x_j)`` for ``k = 0..order`` with ``y(x_j) = 0``, ``y'(x_j) = 1``.

    Differentiating ``p y'' + q y' + r y = 0`` k times gives
    ``Σ_i C(k,i) [p^(i) y^(k+2-i) + q^(i) y^(k+1-i) + r^(i) y^(k-i)] = 0``.
    """
    ctx = _context(precision)
    x = ctx.mpc(x_j)
    values = _values(ode, ctx, x, max(order - 2, 0))
    p0 = _leading(ctx, values[0][0])
    y = [ctx.mpc(0), ctx.mpc(1)]
    for k in range(order - 1):
        acc = ctx.mpc(0)
        for i in range(k + 1):
            p_i, q_i, r_i = values[i]
            weight = comb(k, i)
            if i > 0:
                acc += weight * p_i * y[k + 2 - i]
            acc += weight * (q_i * y[k + 1 - i] + r_i * y[k - i])
        y.append(-acc / p0)
    return y[:order + 1]


def _g_coefficients(ode, x_j, r, precision):
    """Taylor coefficients ``g_0..g_r`` of ``y(x_j + h) / h``."""
    y = taylor_derivatives(ode, x_j, r + 1, precision)
    return [y[k + 1] / factorial(k + 1) for k in range(r + 1)]


def _log_derivative_series(ctx, g: Sequence, length: int) -> List:
    """First ``length`` coefficients of ``g'/g`` for ``g_0 = 1``."""
    out = []
    for s in range(length):
        value = (s + 1) * g[s + 1]
        for t in range(1, s + 1):
            value -= g[t] * out[s - t]
        out.append(value)
    return out


def z_recurrence_predict(ode: OdeCoefficients, x_j, r: int, precision: Optional[int] = None):
    """``S_{r,j}`` for any ``r >= 1`` from the series of ``g'/g``."""
    if r < 1:
        raise ValueError(f"order must be positive, got {r}")
    ctx = _context(precision)
    g = _g_coefficients(ode, x_j, r, precision)
    series = _log_derivative_series(ctx, g, r)
    return (-1) ** (r - 1) * series[r - 1]


def z_values(ode: OdeCoefficients, x_j, r_max: int, precision: Optional[int] = None) -> List:
    """``Z_1(x_j), ..., Z_{r_max}(x_j)`` where ``Z_r = y_j^(r) / y_j``.

    Computed by running ``Z_{r+1} = Z_r' + Z_1 Z_r`` on truncated Taylor
    series around ``x_j``, starting from ``Z_1 = g'/g``.
    """
    if r_max < 1:
        raise ValueError(f"order must be positive, got {r_max}")
    ctx = _context(precision)
    g = _g_coefficients(ode, x_j, r_max, precision)
    length = r_max
    z1 = _log_derivative_series(ctx, g, length)
    current = list(z1)
    values = [current[0]]
    for step in range(1, r_max):
        size = length - step
        derivative = [(i + 1) * current[i + 1] for i in range(size)]
        product = [sum(z1[a] * current[i - a] for a in range(i + 1)) for i in range(size)]
        current = [d + q for d, q in zip(derivative, product)]
        values.append(current[0])
    return values


class RelationRow(BaseModel):
    index: int
    zero: dict
    direct: dict
    predicted: dict
    abs_residual: float = Field(ge=0)
    rel_residual: float = Field(ge=0)


class RelationReport(BaseModel):
    """Direct versus predicted ``S_{m,j}`` for every zero."""
    power: int
    precision: int
    method: str
    rows: List[RelationRow]
    max_abs_residual: float = Field(ge=0)
    max_rel_residual: float = Field(ge=0)


def _predictor(method: str, m: int) -> Callable:
    closed = {1: predict_S1, 2: predict_S2, 3: predict_S3}
    if method == "closed_form":
        if m not in closed:
            raise ValueError(f"closed forms exist for powers 1-3 only, got {m}")
        return lambda ode, x, bits: closed[m](ode, x, bits)
    if method == "recurrence":
        return lambda ode, x, bits: z_recurrence_predict(ode, x, m, bits)
    raise ValueError(f"unknown prediction method {method!r}")


def check_relation(zeros: Sequence, m: int, ode: Optional[OdeCoefficients] = None,
                   precision: Optional[int] = None, method: str = "recurrence",
                   expected: Optional[Callable] = None,
                   max_workers: Optional[int] = None) -> RelationReport:
    """Compare ``direct_sum`` against a prediction at every zero.

    Args:
        zeros: all zeros as individual complex numbers
        m: power of the sum
        ode: equation the zeros solve (needed unless ``expected`` is given)
        precision: working precision in bits
        method: "recurrence" or "closed_form"
        expected: optional explicit formula ``x -> S_m`` replacing the ODE prediction
        max_workers: threads for the per-zero checks

    Returns:
        RelationReport with per-index rows in index order.
    """
    cfg = get_config()
    bits = precision or cfg.PRECISION_BITS
    ctx = numeric_context(bits)
    if expected is None:
        if ode is None:
            raise ValueError("either an ODE or an explicit formula is required")
        predict = _predictor(method, m)
        method_name = method
    else:
        method_name = "explicit"

    def row(j: int) -> RelationRow:
        x = ctx.mpc(zeros[j])
        direct = direct_sum(zeros, m, j, bits)
        predicted = ctx.mpc(expected(x)) if expected is not None else predict(ode, x, bits)
        error = abs(direct - predicted)
        return RelationRow(
            index=j,
            zero=complex_to_dict(ctx, x),
            direct=complex_to_dict(ctx, direct),
            predicted=complex_to_dict(ctx, predicted),
            abs_residual=float(error),
            rel_residual=float(error / max(abs(direct), 1)),
        )

    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers or cfg.ROOT_POLISH_WORKERS) as executor:
        rows = list(executor.map(row, range(len(zeros))))

    report = RelationReport(
        power=m,
        precision=bits,
        method=method_name,
        rows=rows,
        max_abs_residual=max((r.abs_residual for r in rows), default=0.0),
        max_rel_residual=max((r.rel_residual for r in rows), default=0.0),
    )
    _logger.debug(f"S_{m} check ({method_name}, {bits} bits): max residual {report.max_abs_residual:.3e}")
    return report
