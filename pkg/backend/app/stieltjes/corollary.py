"""Stationarity identities at the zeros of an exceptional polynomial.

At a zero configuration the electrostatic forces balance: for a real zero
the pull of each complex zero is matched by its conjugate partner, and for
a complex zero the weight's log-derivative cancels the sum of pair forces.
Indices are 0-based into ``Z.real_zeros`` and ``Z.complex_zeros()``.
"""

from typing import NamedTuple

from backend.app.core.errors import SingularEvaluationError
from backend.app.roots.zeros import ZeroSet


class ComplexIdentityResidual(NamedTuple):
    equality: float
    zero: float


def _check_index(i: int, size: int, kind: str) -> None:
    if not 0 <= i < size:
        raise IndexError(f"{kind} zero index {i} out of range for {size} zeros")


def corollary_identity_real(Z: ZeroSet, i: int) -> float:
    """``|Σ 1/((x_i - x_t) + iμ_t) - Σ 1/((x_i - x_t) - iμ_t)|`` over complex zeros."""
    _check_index(i, Z.n_real, "real")
    ctx = Z.context
    x_i = ctx.mpf(Z.real_zeros[i])
    lhs = ctx.mpc(0)
    rhs = ctx.mpc(0)
    for z in Z.complex_zeros():
        lhs += 1 / ctx.mpc(x_i - z.real, z.imag)
        rhs += 1 / ctx.mpc(x_i - z.real, -z.imag)
    return float(abs(lhs - rhs))


def real_form_residual(Z: ZeroSet, i: int) -> float:
    """``|Σ μ_t / ((x_i - x_t)² + μ_t²)|`` with signed ``μ_t``."""
    _check_index(i, Z.n_real, "real")
    ctx = Z.context
    x_i = ctx.mpf(Z.real_zeros[i])
    total = ctx.mpf(0)
    for z in Z.complex_zeros():
        d = x_i - z.real
        total += z.imag / (d * d + z.imag * z.imag)
    return float(abs(total))


def _force_balance(Z: ZeroSet, weight, point, others, real_zeros):
    ctx = Z.context
    value = weight.log_derivative.evaluate(ctx, point)
    for w in others:
        value += 2 / (point - w)
    for x_s in real_zeros:
        value += 2 / (point - x_s)
    return value


def corollary_identity_complex(Z: ZeroSet, weight, i: int) -> ComplexIdentityResidual:
    """Residuals of the force balance at complex zero ``i``.

    ``zero`` is ``|L(z_i) + Σ_{l≠i} 2/(z_i - z_l) + Σ_s 2/(z_i - x_s)|`` with
    ``L = ω'/ω``; ``equality`` compares that sum against the same expression
    evaluated at the conjugated arguments.
    """
    complex_zeros = Z.complex_zeros()
    _check_index(i, len(complex_zeros), "complex")
    ctx = Z.context
    z_i = complex_zeros[i]
    others = [z for k, z in enumerate(complex_zeros) if k != i]
    try:
        lhs = _force_balance(Z, weight, z_i, others, Z.real_zeros)
        rhs = _force_balance(Z, weight, ctx.conj(z_i), [ctx.conj(z) for z in others], Z.real_zeros)
    except ZeroDivisionError as exc:
        raise SingularEvaluationError(f"coincident points in the force balance at index {i}") from exc
    return ComplexIdentityResidual(float(abs(lhs - rhs)), float(abs(lhs)))
