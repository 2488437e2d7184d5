"""Second-order equations ``p y'' + q y' + (r - λ) y = 0`` with rational coefficients.

Only the combined zeroth-order block ``r - λ`` is ever determined, so it is
stored as one rational function.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

from backend.app.core.errors import ParameterRangeError
from backend.app.polycore.classical import Family
from backend.app.polycore.exact import ExactPoly, RationalFunction
from backend.app.polycore.exceptional import (
    eta_hermite,
    exceptional_hermite,
    fit_ode_constant,
    fit_zeroth_order_constant,
)
from backend.app.polycore.partitions import Partition

Rational = Union[int, Fraction]

_X = RationalFunction(ExactPoly.x())
_ONE = RationalFunction(ExactPoly.constant(1))


def _within(bound: int, degree: Optional[int]) -> bool:
    return degree is None or degree <= bound


@dataclass(frozen=True)
class OdeCoefficients:
    """Coefficients of ``p y'' + q y' + r_plus_lambda y = 0``."""
    p: RationalFunction
    q: RationalFunction
    r_plus_lambda: RationalFunction

    def __post_init__(self):
        for name, bound in (("p", 2), ("q", 1), ("r_plus_lambda", 0)):
            value = RationalFunction.of(getattr(self, name))
            object.__setattr__(self, name, value)
            if not _within(bound, value.degree):
                raise ValueError(f"deg({name}) = {value.degree} exceeds {bound}")
        if self.p.is_zero:
            raise ValueError("leading coefficient p must not vanish identically")

    def residual(self, y: ExactPoly) -> RationalFunction:
        return self.p * y.differentiate(2) + self.q * y.differentiate() + self.r_plus_lambda * y

    def derivative_table(self, order: int) -> Tuple[Tuple[RationalFunction, ...], ...]:
        """``(p^(i), q^(i), r^(i))`` for ``i = 0..order`` as exact rational functions."""
        return _derivative_table(self, order)


@lru_cache(maxsize=256)
def _derivative_table(ode: OdeCoefficients, order: int):
    table = [(ode.p, ode.q, ode.r_plus_lambda)]
    for _ in range(order):
        p, q, r = table[-1]
        table.append((p.differentiate(), q.differentiate(), r.differentiate()))
    return tuple(table)


def _log_derivatives(eta: ExactPoly) -> Tuple[RationalFunction, RationalFunction]:
    """``η'/η`` and ``η''/η``."""
    eta_r = RationalFunction(eta)
    return (RationalFunction(eta.differentiate()) / eta_r,
            RationalFunction(eta.differentiate(2)) / eta_r)


def hermite_ode(eta: ExactPoly, constant: Rational) -> OdeCoefficients:
    """Exceptional Hermite equation with denominator η and eigenvalue block ``constant``."""
    u1, u2 = _log_derivatives(eta)
    return OdeCoefficients(
        p=_ONE,
        q=-2 * (_X + u1),
        r_plus_lambda=u2 + 2 * _X * u1 + Fraction(constant),
    )


def exceptional_hermite_ode(partition: Partition, n: int) -> OdeCoefficients:
    """Equation satisfied by ``H^(λ)_n``, constant fitted exactly."""
    eta = eta_hermite(partition)
    return hermite_ode(eta, fit_ode_constant(exceptional_hermite(partition, n), eta))


def exceptional_laguerre_ode(alpha: Rational, k_prime: Rational, eta: ExactPoly,
                             constant: Rational) -> OdeCoefficients:
    """``x y'' + (α+k'+1-x-2xη'/η) y' + (xη''/η + (x-α-k')η'/η + C) y = 0``.

    ``constant`` collects the eigenvalue terms of the family.
    """
    alpha, k_prime = Fraction(alpha), Fraction(k_prime)
    if alpha <= -1:
        raise ParameterRangeError(f"alpha must exceed -1, got {alpha}")
    u1, u2 = _log_derivatives(eta)
    return OdeCoefficients(
        p=_X,
        q=alpha + k_prime + 1 - _X - 2 * _X * u1,
        r_plus_lambda=_X * u2 + (_X - alpha - k_prime) * u1 + Fraction(constant),
    )


def exceptional_jacobi_ode(alpha: Rational, beta: Rational, k1: Rational, k2: Rational,
                           eta: ExactPoly, constant: Rational) -> OdeCoefficients:
    """Exceptional Jacobi equation on (-1, 1) with user-supplied eigenvalue block."""
    alpha, beta, k1, k2 = (Fraction(v) for v in (alpha, beta, k1, k2))
    if alpha <= -1 or beta <= -1:
        raise ParameterRangeError(f"alpha and beta must exceed -1, got {alpha}, {beta}")
    u1, u2 = _log_derivatives(eta)
    one_minus_x2 = 1 - _X * _X
    return OdeCoefficients(
        p=one_minus_x2,
        q=beta - alpha - 2 * k2 - (alpha + beta + 2 * k1 + 2) * _X - 2 * one_minus_x2 * u1,
        r_plus_lambda=one_minus_x2 * u2 + (alpha - beta + 2 * k2 + (2 * k1 + alpha + beta) * _X) * u1
        + Fraction(constant),
    )


def classical_ode(family: Union[Family, str], n: int,
                  alpha: Optional[Rational] = None,
                  beta: Optional[Rational] = None) -> OdeCoefficients:
    """Equation of the classical polynomial of degree n."""
    family = Family(family)
    one = ExactPoly.constant(1)
    if family is Family.HERMITE:
        return hermite_ode(one, 2 * n)
    alpha = Fraction(alpha or 0)
    if family is Family.LAGUERRE:
        return exceptional_laguerre_ode(alpha, 0, one, n)
    beta = Fraction(beta or 0)
    return exceptional_jacobi_ode(alpha, beta, 0, 0, one, n * (n + alpha + beta + 1))


def fitted_ode(y: ExactPoly, p, q, r0=None) -> OdeCoefficients:
    """OdeCoefficients for a user-supplied solution with the constant fitted exactly."""
    r0 = RationalFunction.of(0 if r0 is None else r0)
    constant = fit_zeroth_order_constant(y, p, q, r0)
    return OdeCoefficients(RationalFunction.of(p), RationalFunction.of(q), r0 + constant)
