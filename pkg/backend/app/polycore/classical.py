"""Classical orthogonal polynomials with exact coefficients."""

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from backend.app.core.errors import ParameterRangeError
from backend.app.polycore.exact import ExactPoly

Rational = Union[int, Fraction]

_X = ExactPoly.x()


class Family(str, Enum):
    """Classical weight families."""
    HERMITE = "hermite"
    LAGUERRE = "laguerre"
    JACOBI = "jacobi"


@lru_cache(maxsize=128)
def hermite(n: int) -> ExactPoly:
    """Physicists' Hermite polynomial, ``H_{k+1} = 2x H_k - 2k H_{k-1}``."""
    if n < 0:
        raise ParameterRangeError(f"degree must be non-negative, got {n}")
    previous, current = ExactPoly.constant(1), ExactPoly((0, 2))
    if n == 0:
        return previous
    for k in range(1, n):
        previous, current = current, _X * current * 2 - previous * (2 * k)
    return current


@lru_cache(maxsize=128)
def laguerre(n: int, alpha: Fraction = Fraction(0)) -> ExactPoly:
    """Generalized Laguerre polynomial ``L_n^(α)``."""
    previous, current = ExactPoly.constant(1), ExactPoly((1 + alpha, -1))
    if n == 0:
        return previous
    for k in range(1, n):
        nxt = (ExactPoly((2 * k + 1 + alpha, -1)) * current - previous * (k + alpha)).scale(Fraction(1, k + 1))
        previous, current = current, nxt
    return current


@lru_cache(maxsize=128)
def jacobi(n: int, alpha: Fraction = Fraction(0), beta: Fraction = Fraction(0)) -> ExactPoly:
    """Jacobi polynomial ``P_n^(α,β)`` by the standard three-term recurrence."""
    previous = ExactPoly.constant(1)
    # P_1 = (α+1) + (α+β+2)(x-1)/2
    current = ExactPoly(((alpha - beta) / 2, (alpha + beta + 2) / 2))
    if n == 0:
        return previous
    s = alpha + beta
    for k in range(1, n):
        a = 2 * (k + 1) * (k + s + 1) * (2 * k + s)
        b = (2 * k + s + 1)
        linear = ExactPoly((alpha * alpha - beta * beta, (2 * k + s + 2) * (2 * k + s)))
        c = 2 * (k + alpha) * (k + beta) * (2 * k + s + 2)
        nxt = (linear * current * b - previous * c).scale(Fraction(1) / a)
        previous, current = current, nxt
    return current


def classical_poly(family: Union[Family, str], n: int,
                   alpha: Optional[Rational] = None,
                   beta: Optional[Rational] = None) -> ExactPoly:
    """Exact classical polynomial of degree ``n``.

    Args:
        family: hermite, laguerre or jacobi
        n: degree (non-negative)
        alpha: Laguerre/Jacobi parameter, rational and > -1
        beta: Jacobi parameter, rational and > -1

    Returns:
        The polynomial in the standard normalization of each family.
    """
    family = Family(family)
    if n < 0:
        raise ParameterRangeError(f"degree must be non-negative, got {n}")
    if family is Family.HERMITE:
        return hermite(n)

    alpha = Fraction(0 if alpha is None else alpha)
    if alpha <= -1:
        raise ParameterRangeError(f"alpha must exceed -1, got {alpha}")
    if family is Family.LAGUERRE:
        return laguerre(n, alpha)

    beta = Fraction(0 if beta is None else beta)
    if beta <= -1:
        raise ParameterRangeError(f"beta must exceed -1, got {beta}")
    return jacobi(n, alpha, beta)
