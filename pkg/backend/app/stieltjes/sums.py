"""Power sums of reciprocal zero differences, ``S_{m,j} = Σ_{k≠j} (x_j - x_k)^{-m}``."""

from typing import Optional, Sequence

from backend.app.core.config import get_config
from backend.app.core.errors import CoincidentPointsError
from backend.app.core.numeric import numeric_context


def direct_sum(zeros: Sequence, m: int, j: int, precision: Optional[int] = None):
    """Literal sum over every other zero.

    Args:
        zeros: all zeros as individual complex numbers (see ``ZeroSet.expanded``)
        m: positive power
        j: 0-based index of the distinguished zero
        precision: working precision in bits

    Returns:
        The complex value of ``S_{m,j}``.
    """
    if m < 1:
        raise ValueError(f"power must be positive, got {m}")
    if not 0 <= j < len(zeros):
        raise IndexError(f"zero index {j} out of range for {len(zeros)} zeros")
    cfg = get_config()
    ctx = numeric_context(precision or cfg.PRECISION_BITS)
    anchor = ctx.mpc(zeros[j])
    guard = cfg.COINCIDENCE_GUARD * max(1, abs(anchor))
    total = ctx.mpc(0)
    for k, other in enumerate(zeros):
        if k == j:
            continue
        gap = anchor - ctx.mpc(other)
        if abs(gap) < guard:
            raise CoincidentPointsError(f"zeros {j} and {k} coincide (separation {float(abs(gap)):.3e})")
        total += 1 / gap ** m
    return total
