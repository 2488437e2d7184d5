"""Simultaneous polynomial root finding (Aberth–Ehrlich) with Newton polish.

Coefficients are rounded once into the working-precision context; all
iteration happens there. Exact zero roots are split off before iterating.
"""

import concurrent.futures
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from backend.app.core.config import get_config
from backend.app.core.errors import RootFindingError
from backend.app.core.numeric import default_tolerance, from_exact, numeric_context
from backend.app.core.singletons import get_logger
from backend.app.polycore.exact import ExactPoly

_logger = get_logger()

# angle offset of the initial circle, keeps guesses off the symmetry axes
_START_ANGLE = 0.4


@dataclass(frozen=True)
class RootFindResult:
    """Roots of a polynomial at a fixed working precision."""
    roots: Tuple
    residuals: Tuple
    precision: int
    tol: float
    sweeps: int

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def _horner(coeffs: Sequence, z):
    """Value and first derivative; ``coeffs`` lowest degree first."""
    value = coeffs[-1]
    slope = 0
    for c in reversed(coeffs[:-1]):
        slope = slope * z + value
        value = value * z + c
    return value, slope


def _cauchy_radius(ctx, coeffs: Sequence):
    lead = abs(coeffs[-1])
    return 1 + max(abs(c) / lead for c in coeffs[:-1])


def _aberth(ctx, coeffs: Sequence, tol: float, max_sweeps: int) -> Tuple[List, int]:
    degree = len(coeffs) - 1
    radius = _cauchy_radius(ctx, coeffs)
    z = [radius * ctx.expj(2 * ctx.pi * k / degree + _START_ANGLE) for k in range(degree)]
    floor = ctx.mpf(2) ** (-ctx.prec)

    worst_index = 0
    for sweep in range(1, max_sweeps + 1):
        largest = ctx.mpf(0)
        for i in range(degree):
            value, slope = _horner(coeffs, z[i])
            if value == 0:
                continue
            repulsion = ctx.mpc(0)
            for j in range(degree):
                if j != i:
                    gap = z[i] - z[j]
                    repulsion += 1 / (gap if gap != 0 else floor)
            if slope == 0:
                correction = -1 / repulsion
            else:
                ratio = value / slope
                correction = ratio / (1 - ratio * repulsion)
            z[i] -= correction
            relative = abs(correction) / max(abs(z[i]), 1)
            if relative > largest:
                largest, worst_index = relative, i
        _logger.debug(f"Aberth sweep {sweep}: max relative correction {float(largest):.3e}")
        if largest <= tol:
            return z, sweep

    raise RootFindingError(
        f"Aberth iteration did not converge within {max_sweeps} sweeps (root {worst_index})",
        root_index=worst_index,
        sweeps=max_sweeps,
    )


def _newton_polish(ctx, coeffs: Sequence, z, tol: float, max_steps: int, index: int):
    value, slope = _horner(coeffs, z)
    for _ in range(max_steps):
        if value == 0:
            return z
        if slope == 0:
            raise RootFindingError(f"zero derivative while polishing root {index}", root_index=index)
        step = value / slope
        candidate = z - step
        new_value, new_slope = _horner(coeffs, candidate)
        if abs(new_value) >= abs(value):
            # rounding floor reached: |p| can no longer decrease
            return z
        z, value, slope = candidate, new_value, new_slope
        if abs(step) <= tol * max(abs(z), 1):
            return z
    raise RootFindingError(
        f"Newton polish did not converge within {max_steps} steps (root {index})",
        root_index=index,
    )


def find_roots(p: ExactPoly,
               precision: Optional[int] = None,
               tol: Optional[float] = None,
               max_workers: Optional[int] = None) -> RootFindResult:
    """All complex roots of an exact polynomial.

    Args:
        p: polynomial of degree >= 1
        precision: working precision in bits (default from config)
        tol: relative Newton step tolerance (default depends on precision)
        max_workers: threads used for per-root polishing

    Returns:
        RootFindResult with roots sorted by real then imaginary part and
        the residual |p(root)| of each.
    """
    cfg = get_config()
    bits = precision or cfg.PRECISION_BITS
    tol = tol if tol is not None else default_tolerance(bits)
    workers = max_workers or cfg.ROOT_POLISH_WORKERS
    if p.degree < 1:
        raise ValueError(f"root finding needs degree >= 1, got {p.degree}")

    ctx = numeric_context(bits)

    # exact zeros at the origin
    zero_multiplicity = next(i for i, c in enumerate(p.coeffs) if c != 0)
    reduced = ExactPoly(p.coeffs[zero_multiplicity:])
    roots = [ctx.mpc(0)] * zero_multiplicity
    sweeps = 0

    if reduced.degree == 1:
        c0, c1 = reduced.numeric_coefficients(ctx)
        roots.append(ctx.mpc(-c0 / c1))
    elif reduced.degree > 1:
        coeffs = reduced.numeric_coefficients(ctx)
        aberth_tol = max(tol, float(ctx.mpf(2) ** (-(bits // 2))))
        approx, sweeps = _aberth(ctx, coeffs, aberth_tol, cfg.ABERTH_MAX_SWEEPS)

        def polish(item):
            index, guess = item
            return _newton_polish(ctx, coeffs, guess, tol, cfg.NEWTON_MAX_STEPS, index)

        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            roots.extend(executor.map(polish, enumerate(approx)))

    roots.sort(key=lambda z: (float(z.real), float(z.imag)))
    full = p.numeric_coefficients(ctx)
    residuals = tuple(abs(_horner(full, z)[0]) for z in roots)
    _logger.debug(
        f"Found {len(roots)} roots of degree-{p.degree} polynomial at {bits} bits "
        f"in {sweeps} sweeps; max residual {float(max(residuals)):.3e}"
    )
    return RootFindResult(tuple(roots), residuals, bits, tol, sweeps)


def vieta_residual(p: ExactPoly, roots: Sequence, precision: Optional[int] = None) -> float:
    """Relative mismatch between the root sum and ``-c_{n-1}/c_n``."""
    ctx = numeric_context(precision or get_config().PRECISION_BITS)
    expected = -from_exact(ctx, p.coefficient(p.degree - 1)) / from_exact(ctx, p.leading_coefficient)
    total = ctx.fsum(roots)
    return float(abs(total - expected) / max(abs(expected), 1))
