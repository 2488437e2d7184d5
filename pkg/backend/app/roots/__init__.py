"""Roots package for xopenergy.

This package provides functionality for:
1. Finding all complex roots of exact polynomials at a chosen precision
2. Classifying them into real zeros and conjugate pairs
3. Measuring how close exceptional zeros sit to the zeros of η
"""

from .aberth import RootFindResult, find_roots, vieta_residual
from .proximity import ProximityEntry, ProximityTrend, eta_proximity, proximity_trend
from .zeros import ZeroSet, check_simplicity, classify_zeros, compute_zero_set, exceptional_zero_set

__all__ = [
    "ProximityEntry",
    "ProximityTrend",
    "RootFindResult",
    "ZeroSet",
    "check_simplicity",
    "classify_zeros",
    "compute_zero_set",
    "eta_proximity",
    "exceptional_zero_set",
    "find_roots",
    "proximity_trend",
    "vieta_residual",
]
