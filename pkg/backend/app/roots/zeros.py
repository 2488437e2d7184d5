"""Classified zero sets: real zeros and complex-conjugate pairs."""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from backend.app.core.config import get_config
from backend.app.core.errors import MultipleZeroError, UnpairedRootError
from backend.app.core.numeric import numeric_context, to_decimal
from backend.app.core.singletons import get_logger
from backend.app.polycore.exact import ExactPoly, exact_gcd
from backend.app.polycore.exceptional import exceptional_hermite
from backend.app.polycore.partitions import Partition
from backend.app.roots.aberth import RootFindResult, find_roots

_logger = get_logger()


@dataclass(frozen=True)
class ZeroSet:
    """Real zeros ``x_1 < ... < x_n`` and conjugate pairs ``x ± iμ`` with ``μ > 0``.

    Individual-zero indexing (used by sums and energy configurations) comes
    from :meth:`expanded`: real zeros ascending, then each pair by ascending
    real part, ``+iμ`` before ``-iμ``.
    """
    real_zeros: Tuple
    pairs: Tuple[Tuple, ...]
    source_degree: int
    precision: int = 53
    residuals: Tuple = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.real_zeros) + 2 * len(self.pairs) != self.source_degree:
            raise ValueError(
                f"{len(self.real_zeros)} real zeros and {len(self.pairs)} pairs "
                f"do not account for degree {self.source_degree}"
            )
        if any(mu <= 0 for _, mu in self.pairs):
            raise ValueError("imaginary parts of stored pairs must be positive")

    @property
    def context(self):
        return numeric_context(self.precision)

    @property
    def n_real(self) -> int:
        return len(self.real_zeros)

    @property
    def n_pairs(self) -> int:
        return len(self.pairs)

    @property
    def n_complex(self) -> int:
        return 2 * len(self.pairs)

    def expanded(self) -> List:
        """Every zero as an individual complex number, in the fixed order."""
        ctx = self.context
        points = [ctx.mpc(x) for x in self.real_zeros]
        for x, mu in self.pairs:
            points.append(ctx.mpc(x, mu))
            points.append(ctx.mpc(x, -mu))
        return points

    def complex_zeros(self) -> List:
        return self.expanded()[self.n_real:]

    def to_json(self) -> Dict:
        ctx = self.context
        return {
            "real": [to_decimal(ctx, x) for x in self.real_zeros],
            "pairs": [{"x": to_decimal(ctx, x), "mu": to_decimal(ctx, mu)} for x, mu in self.pairs],
            "degree": self.source_degree,
            "residuals": [to_decimal(ctx, r) for r in self.residuals],
        }


def check_simplicity(p: ExactPoly) -> bool:
    """True iff ``gcd(p, p')`` is constant."""
    if p.is_zero:
        return False
    if p.degree <= 1:
        return True
    return exact_gcd(p, p.differentiate()).degree == 0


def classify_zeros(roots, tau: Optional[float] = None, precision: Optional[int] = None) -> ZeroSet:
    """Split roots into real zeros and conjugate pairs.

    Args:
        roots: RootFindResult or sequence of complex numbers
        tau: relative threshold on |Im| for a zero to count as real
        precision: bits of the context the values live in

    Returns:
        ZeroSet with real zeros ascending and pairs by ascending real part.

    Raises:
        UnpairedRootError: a non-real root has no conjugate within tolerance.
    """
    cfg = get_config()
    tau = cfg.REAL_TAU if tau is None else tau
    residuals: Tuple = ()
    if isinstance(roots, RootFindResult):
        precision = precision or roots.precision
        residuals = roots.residuals
        values = list(roots.roots)
    else:
        values = list(roots)
    precision = precision or cfg.PRECISION_BITS
    ctx = numeric_context(precision)
    values = [ctx.mpc(z) for z in values]

    real, upper, lower = [], [], []
    for z in values:
        scale = max(1, abs(z))
        if abs(z.imag) <= tau * scale:
            real.append(z.real)
        elif z.imag > 0:
            upper.append(z)
        else:
            lower.append(z)

    if len(upper) != len(lower):
        raise UnpairedRootError(
            f"{len(upper)} roots above the real axis but {len(lower)} below"
        )

    pairs = []
    unused = list(lower)
    for z in sorted(upper, key=lambda w: (float(w.real), float(w.imag))):
        partner = min(unused, key=lambda w: abs(z - ctx.conj(w)))
        mismatch = abs(z - ctx.conj(partner))
        if mismatch > tau * max(1, abs(z)):
            raise UnpairedRootError(
                f"root {ctx.nstr(z, 17)} has no conjugate partner (closest mismatch {float(mismatch):.3e})"
            )
        unused.remove(partner)
        pairs.append(((z.real + partner.real) / 2, (z.imag - partner.imag) / 2))

    real.sort()
    pairs.sort(key=lambda pair: (pair[0], pair[1]))
    return ZeroSet(tuple(real), tuple(pairs), len(values), precision, tuple(residuals))


def compute_zero_set(p: ExactPoly,
                     precision: Optional[int] = None,
                     tol: Optional[float] = None,
                     tau: Optional[float] = None) -> ZeroSet:
    """Simplicity check, root finding and classification in one step."""
    if not check_simplicity(p):
        raise MultipleZeroError(f"polynomial of degree {p.degree} has a repeated zero")
    roots = find_roots(p, precision=precision, tol=tol)
    zero_set = classify_zeros(roots, tau=tau)
    _logger.debug(
        f"Degree {p.degree}: {zero_set.n_real} real zeros, {zero_set.n_complex} complex zeros"
    )
    return zero_set


@lru_cache(maxsize=64)
def exceptional_zero_set(partition: Partition, n: int, precision: Optional[int] = None) -> ZeroSet:
    """Zero set of ``H^(λ)_n`` (cached per partition, degree and precision)."""
    return compute_zero_set(exceptional_hermite(partition, n), precision=precision)
