"""Exceptional Hermite polynomials from double partitions.

``η^(λ) = Wr[H_{λ1}, H_{λ2+1}, ..., H_{λr+r-1}]`` and
``H^(λ)_n = Wr[H_{λ1}, ..., H_{λr+r-1}, H_{n-|λ|+r}]``.
"""

from fractions import Fraction
from functools import lru_cache
from backend.app.core.errors import InadmissibleDegreeError, InvalidPartitionError, OdeFitError
from backend.app.core.singletons import get_logger
from backend.app.polycore.classical import hermite
from backend.app.polycore.exact import ExactPoly, RationalFunction
from backend.app.polycore.partitions import Partition
from backend.app.polycore.wronskian import wronskian

_logger = get_logger()

_X = ExactPoly.x()


def _require_double(partition: Partition) -> None:
    if not partition.is_double:
        raise InvalidPartitionError(f"partition ({partition}) is not a double partition")


def hermite_index(partition: Partition, n: int) -> int:
    """Degree of the last Wronskian entry, validated against the missing degrees.

    Zero is accepted as a natural number here.
    """
    index = n - partition.weight + partition.length
    if index < 0 or index in partition.hermite_indices():
        raise InadmissibleDegreeError(
            f"degree {n} is not admissible for partition ({partition}): entry index {index}"
        )
    return index


def is_admissible(partition: Partition, n: int) -> bool:
    try:
        hermite_index(partition, n)
    except InadmissibleDegreeError:
        return False
    return True


@lru_cache(maxsize=64)
def eta_hermite(partition: Partition) -> ExactPoly:
    """Denominator polynomial of degree ``|λ|``; constant 1 for the empty partition."""
    _require_double(partition)
    if partition.is_empty:
        return ExactPoly.constant(1)
    return wronskian([hermite(k) for k in partition.hermite_indices()])


@lru_cache(maxsize=256)
def exceptional_hermite(partition: Partition, n: int) -> ExactPoly:
    """Exceptional Hermite polynomial ``H^(λ)_n`` of degree ``n`` (not normalized)."""
    _require_double(partition)
    index = hermite_index(partition, n)
    entries = [hermite(k) for k in partition.hermite_indices()] + [hermite(index)]
    result = wronskian(entries)
    if result.degree != n:
        raise InadmissibleDegreeError(
            f"Wronskian for ({partition}), n={n} has degree {result.degree}"
        )
    _logger.debug(f"Built exceptional Hermite polynomial for ({partition}), n={n}")
    return result


def hermite_ode_residual(y: ExactPoly, eta: ExactPoly, constant: Fraction) -> ExactPoly:
    """``η y'' - 2(xη + η') y' + (η'' + 2xη' + Cη) y`` as an exact polynomial."""
    eta_d1 = eta.differentiate()
    eta_d2 = eta.differentiate(2)
    return (eta * y.differentiate(2)
            - (_X * eta + eta_d1) * y.differentiate() * 2
            + (eta_d2 + _X * eta_d1 * 2 + eta.scale(constant)) * y)


def fit_ode_constant(y: ExactPoly, eta: ExactPoly) -> Fraction:
    """Recover the eigenvalue block ``C`` of the exceptional Hermite equation.

    Args:
        y: candidate solution (non-zero)
        eta: denominator polynomial

    Returns:
        The exact rational ``C`` making ``hermite_ode_residual`` identically zero.

    Raises:
        OdeFitError: if no constant works.
    """
    if y.is_zero:
        raise OdeFitError("cannot fit an ODE constant to the zero polynomial")
    base = hermite_ode_residual(y, eta, Fraction(0))
    scaled = eta * y
    top = scaled.degree
    if base.degree > top:
        raise OdeFitError(
            f"residual degree {base.degree} exceeds deg(ηy) = {top}; no constant can cancel it"
        )
    constant = -base.coefficient(top) / scaled.leading_coefficient
    residual = base + scaled.scale(constant)
    if not residual.is_zero:
        raise OdeFitError(f"no constant solves the ODE; residual {residual}")
    return constant


def fit_zeroth_order_constant(y: ExactPoly, p, q, r0=None) -> Fraction:
    """Unique ``C`` with ``p y'' + q y' + (r0 + C) y == 0`` for rational p, q, r0."""
    if y.is_zero:
        raise OdeFitError("cannot fit an ODE constant to the zero polynomial")
    p, q = RationalFunction.of(p), RationalFunction.of(q)
    r0 = RationalFunction.of(0 if r0 is None else r0)
    base = p * y.differentiate(2) + q * y.differentiate() + r0 * y
    if base.is_zero:
        return Fraction(0)
    # base + C*y == 0 forces base/y to be a constant
    ratio = base / y
    if not ratio.is_polynomial or ratio.numerator.degree > 0:
        raise OdeFitError(f"no constant solves the ODE; residual ratio {ratio}")
    return -ratio.numerator.coefficient(0)


def exceptional_hermite_constant(partition: Partition, n: int) -> Fraction:
    """Fitted constant for ``H^(λ)_n``, verified exactly."""
    return fit_ode_constant(exceptional_hermite(partition, n), eta_hermite(partition))

