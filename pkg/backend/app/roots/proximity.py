"""Distance from exceptional zeros to the zeros of the denominator η.

Exceptional zeros are expected to approach the zeros of η as the degree
grows. The trend is tabulated and reported, never asserted.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from mpmath import mpc, mpf

from backend.app.core.singletons import get_logger
from backend.app.polycore.exceptional import eta_hermite
from backend.app.polycore.partitions import Partition
from backend.app.roots.aberth import find_roots
from backend.app.roots.zeros import exceptional_zero_set

_logger = get_logger()


@dataclass(frozen=True)
class ProximityEntry:
    zero: mpc
    distance: mpf


@dataclass(frozen=True)
class ProximityTrend:
    degrees: Tuple[int, ...]
    max_distances: Tuple[mpf, ...]
    decreasing: bool


def eta_proximity(partition: Partition, n: int, precision: Optional[int] = None) -> List[ProximityEntry]:
    """For each exceptional zero of ``H^(λ)_n``, the distance to the nearest zero of η."""
    if partition.is_empty:
        return []
    zero_set = exceptional_zero_set(partition, n, precision)
    eta_roots = find_roots(eta_hermite(partition), precision=zero_set.precision).roots
    entries = []
    for z in zero_set.complex_zeros():
        entries.append(ProximityEntry(z, min(abs(z - w) for w in eta_roots)))
    return entries


def proximity_trend(partition: Partition, degrees: Sequence[int],
                    precision: Optional[int] = None) -> ProximityTrend:
    """Tabulate the largest η-distance per degree and whether it decreases."""
    maxima: List[mpf] = []
    for n in degrees:
        entries = eta_proximity(partition, n, precision)
        maxima.append(max((e.distance for e in entries), default=mpf(0)))
    decreasing = all(b < a for a, b in zip(maxima, maxima[1:]))
    _logger.info(
        f"Proximity trend for ({partition}): "
        + ", ".join(f"n={n}: {float(d):.4g}" for n, d in zip(degrees, maxima))
        + f" (decreasing={decreasing})"
    )
    return ProximityTrend(tuple(degrees), tuple(maxima), decreasing)
