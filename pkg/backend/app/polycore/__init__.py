"""Polycore package for xopenergy.

This package provides exact-arithmetic functionality for:
1. Polynomials and rational functions over the rationals
2. Classical Hermite, Laguerre and Jacobi polynomials
3. Wronskian determinants by fraction-free elimination
4. Exceptional Hermite polynomials indexed by double partitions
"""

from backend.app.polycore.classical import Family, classical_poly, hermite
from backend.app.polycore.exact import ExactPoly, RationalFunction, differentiate, exact_gcd
from backend.app.polycore.exceptional import (
    eta_hermite,
    exceptional_hermite,
    fit_ode_constant,
    fit_zeroth_order_constant,
)
from backend.app.polycore.partitions import Partition
from backend.app.polycore.wronskian import wronskian

__all__ = [
    "ExactPoly",
    "Family",
    "Partition",
    "RationalFunction",
    "classical_poly",
    "differentiate",
    "eta_hermite",
    "exact_gcd",
    "exceptional_hermite",
    "fit_ode_constant",
    "fit_zeroth_order_constant",
    "hermite",
    "wronskian",
]
