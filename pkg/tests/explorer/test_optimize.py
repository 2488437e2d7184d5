"""Tests for the multistart maximiser."""

import math
from fractions import Fraction

import pytest

from backend.app.energy.definiteness import HessianClass, classify_hessian
from backend.app.energy.functional import Configuration, hessian, log_abs_T_sq
from backend.app.energy.weights import WeightSpec
from backend.app.explorer.optimize import multistart_maximize
from backend.app.polycore.classical import classical_poly, hermite
from backend.app.roots.zeros import compute_zero_set


def test_single_hermite_point():
    result = multistart_maximize(WeightSpec.hermite(), 1, starts=5, seed=0)
    assert result.converged == 5
    assert abs(result.best_y[0]) < 1e-8
    assert result.best_value == pytest.approx(0.0, abs=1e-12)


def test_reproducible_with_seed():
    first = multistart_maximize(WeightSpec.hermite(), 2, starts=4, seed=3)
    second = multistart_maximize(WeightSpec.hermite(), 2, starts=4, seed=3)
    assert [o.y for o in first.outcomes] == [o.y for o in second.outcomes]


def test_at_least_one_start():
    with pytest.raises(ValueError):
        multistart_maximize(WeightSpec.hermite(), 2, starts=0)


def test_local_starts_need_a_full_reference():
    with pytest.raises(ValueError):
        multistart_maximize(WeightSpec.hermite(), 2, starts=2, spread=0.1)
    with pytest.raises(ValueError):
        multistart_maximize(WeightSpec.hermite(), 2, starts=2, reference=[0.0], spread=0.1)


def test_local_starts_return_to_hermite_zeros():
    reference = [float(x) for x in compute_zero_set(hermite(2)).real_zeros]
    result = multistart_maximize(WeightSpec.hermite(), 2, starts=4, seed=5, reference=reference, spread=0.1)
    assert result.box == pytest.approx((reference[0] - 0.1, reference[1] + 0.1))
    assert result.hit_fraction(reference, tol=1e-6) == 1.0


def test_laguerre_stays_in_domain():
    result = multistart_maximize(WeightSpec.laguerre(0.5), 2, starts=4, seed=1)
    assert result.box[0] > 0
    assert all(v > 0 for o in result.outcomes if math.isfinite(o.value) for v in o.y)


@pytest.mark.slow
def test_hermite_three_finds_the_zeros():
    zero_set = compute_zero_set(hermite(3))
    reference = [float(x) for x in Configuration.from_zero_set(zero_set).y]
    result = multistart_maximize(WeightSpec.hermite(), 3, starts=50, seed=42, reference=reference)
    assert result.hit_fraction(reference, tol=1e-6) >= 0.9
    assert result.position_spread < 1e-6


@pytest.mark.slow
def test_hermite_six_finds_the_zeros():
    zero_set = compute_zero_set(hermite(6))
    reference = [float(x) for x in zero_set.real_zeros]
    result = multistart_maximize(WeightSpec.hermite(), 6, starts=20, seed=7, reference=reference)
    assert result.hit_fraction(reference, tol=1e-6) >= 0.9


ORACLE_CASES = [
    ("hermite", WeightSpec.hermite(), 3),
    ("hermite", WeightSpec.hermite(), 4),
    ("laguerre", WeightSpec.laguerre(Fraction(1, 2)), 3),
    ("jacobi", WeightSpec.jacobi(Fraction(1, 2), Fraction(1, 2)), 3),
]


@pytest.mark.slow
@pytest.mark.parametrize("family,weight,n", ORACLE_CASES, ids=lambda v: str(v))
def test_classical_oracle(family, weight, n):
    poly = classical_poly(family, n, weight.alpha, weight.beta)
    reference = [float(x) for x in compute_zero_set(poly).real_zeros]
    result = multistart_maximize(weight, n, starts=50, seed=42, reference=reference)
    assert result.hit_fraction(reference, tol=1e-6) >= 0.9


@pytest.mark.slow
def test_four_ones_with_fixed_imaginary_parts(four_ones):
    # local ascent returns to the zero set exactly when the zero set is a strict local maximum
    _, _, zero_set, weight = four_ones
    configuration = Configuration.from_zero_set(zero_set)
    reference = [float(y) for y in configuration.y]
    mu = [float(m) for m in configuration.mu]
    result = multistart_maximize(weight, configuration.n, mu, starts=20, seed=42,
                                 reference=reference, spread=0.02)
    hits = result.hit_fraction(reference, tol=1e-5)
    if classify_hessian(hessian(configuration, weight)).label is HessianClass.POSITIVE_DEFINITE:
        assert hits >= 0.9
        assert result.best_value == pytest.approx(float(log_abs_T_sq(configuration, weight)), abs=1e-6)
    else:
        assert hits < 0.9
