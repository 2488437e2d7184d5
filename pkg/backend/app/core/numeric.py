"""Working-precision contexts and number formatting.

Every floating computation in the package runs inside an mpmath ``MPContext``
at a fixed number of bits. Contexts returned by :func:`numeric_context` are
shared and must be treated as read-only; code that needs mpmath to raise its
working precision (``diff``, ``workprec``) takes a :func:`private_context`.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Union

from mpmath.ctx_mp import MPContext

from .config import get_config

ExactNumber = Union[int, Fraction]


def _make_context(bits: int) -> MPContext:
    if bits < 24:
        raise ValueError(f"precision must be at least 24 bits, got {bits}")
    ctx = MPContext()
    ctx.prec = bits
    return ctx


@lru_cache(maxsize=None)
def numeric_context(bits: int = 53) -> MPContext:
    """Shared read-only context with ``prec = bits``."""
    return _make_context(bits)


def private_context(bits: int = 53) -> MPContext:
    """Fresh context for callers that temporarily change precision."""
    return _make_context(bits)


def context_bits(ctx: MPContext) -> int:
    return int(ctx.prec)


def from_exact(ctx: MPContext, value: ExactNumber):
    """Round an exact rational to the context once."""
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    return ctx.mpf(value)


def default_tolerance(bits: int) -> float:
    return get_config().root_tolerance(bits)


def to_decimal(ctx: MPContext, value: Any) -> str:
    """Decimal string with enough digits to round-trip at the context's precision."""
    return ctx.nstr(value, ctx.dps + 2)


def complex_to_dict(ctx: MPContext, value: Any) -> Dict[str, str]:
    z = ctx.mpc(value)
    return {"re": to_decimal(ctx, z.real), "im": to_decimal(ctx, z.imag)}


def fraction_to_string(value: ExactNumber) -> str:
    """Exact rational as ``"num/den"`` (integers print without denominator)."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: Union[str, int, float, Fraction]) -> Fraction:
    """Parse ``"3/2"``, ``"0.5"`` or an int into an exact Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, float):
        return Fraction(str(text))
    return Fraction(str(text).strip())
