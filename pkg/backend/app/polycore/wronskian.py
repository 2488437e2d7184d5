"""Wronskian determinants over the exact polynomial ring."""

from typing import List, Sequence

from backend.app.core.singletons import get_logger
from backend.app.polycore.exact import ExactPoly

_logger = get_logger()


def _bareiss_determinant(matrix: List[List[ExactPoly]]) -> ExactPoly:
    """Fraction-free Bareiss elimination; every division is exact in Q[x]."""
    size = len(matrix)
    m = [row[:] for row in matrix]
    sign = 1
    previous_pivot = ExactPoly.constant(1)

    for k in range(size - 1):
        if m[k][k].is_zero:
            swap = next((i for i in range(k + 1, size) if not m[i][k].is_zero), None)
            if swap is None:
                return ExactPoly()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]).exact_divide(previous_pivot)
        previous_pivot = pivot

    det = m[size - 1][size - 1]
    return det if sign > 0 else -det


def wronskian(polys: Sequence[ExactPoly]) -> ExactPoly:
    """Determinant of the matrix with entry (i, j) = i-th derivative of polys[j].

    Args:
        polys: non-empty sequence of exact polynomials

    Returns:
        The Wronskian as an exact polynomial (possibly zero). No normalization
        is applied.
    """
    if not polys:
        raise ValueError("wronskian of an empty sequence is undefined")
    size = len(polys)
    rows = [list(polys)]
    for _ in range(1, size):
        rows.append([p.differentiate() for p in rows[-1]])
    result = _bareiss_determinant(rows)
    _logger.debug(f"Wronskian of {size} polynomials has degree {result.degree}")
    return result
