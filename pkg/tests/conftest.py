"""
Shared pytest configuration for xopenergy.

Puts the project root on the import path and provides the zero sets of the
three reference partitions, computed once per session.
"""

import sys
from pathlib import Path

import pytest

# Add the project root to the Python path
project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root))

from backend.app.energy.weights import WeightSpec
from backend.app.polycore.exceptional import exceptional_hermite
from backend.app.polycore.partitions import Partition
from backend.app.roots.zeros import compute_zero_set

REFERENCE_CASES = {
    "four_ones": (Partition((1, 1, 1, 1)), 8),
    "ones_and_threes": (Partition((1, 1, 3, 3)), 8),
    "twos_and_threes": (Partition((2, 2, 3, 3)), 10),
}


def _case(name: str, precision: int = 53):
    partition, n = REFERENCE_CASES[name]
    zero_set = compute_zero_set(exceptional_hermite(partition, n), precision=precision)
    return partition, n, zero_set, WeightSpec.exceptional_hermite(partition)


@pytest.fixture(scope="session")
def four_ones():
    """λ = (1,1,1,1), n = 8: four real and four complex zeros."""
    return _case("four_ones")


@pytest.fixture(scope="session")
def ones_and_threes():
    """λ = (1,1,3,3), n = 8: two real and six complex zeros."""
    return _case("ones_and_threes")


@pytest.fixture(scope="session")
def twos_and_threes():
    """λ = (2,2,3,3), n = 10: two real and eight complex zeros."""
    return _case("twos_and_threes")


@pytest.fixture(scope="session")
def four_ones_high_precision(high_precision_case):
    return high_precision_case("four_ones")


@pytest.fixture(scope="session")
def high_precision_case():
    """Build a reference case at 256 bits by name, once per session."""
    cache = {}

    def build(name: str):
        if name not in cache:
            cache[name] = _case(name, precision=256)
        return cache[name]

    return build
