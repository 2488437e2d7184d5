"""Tests for power sums of zero differences and their ODE predictions."""

from fractions import Fraction

import mpmath
import pytest

from backend.app.core.errors import CoincidentPointsError
from backend.app.polycore.classical import classical_poly, hermite
from backend.app.polycore.exact import ExactPoly, RationalFunction
from backend.app.polycore.exceptional import exceptional_hermite, is_admissible
from backend.app.polycore.partitions import Partition
from backend.app.roots.zeros import check_simplicity, compute_zero_set
from backend.app.stieltjes.corollary import (
    corollary_identity_complex,
    corollary_identity_real,
    real_form_residual,
)
from backend.app.stieltjes.ode import (
    OdeCoefficients,
    classical_ode,
    exceptional_hermite_ode,
    fitted_ode,
)
from backend.app.stieltjes.relations import (
    check_relation,
    predict_S1,
    predict_S2,
    predict_S3,
    taylor_derivatives,
    z_recurrence_predict,
    z_values,
)
from backend.app.stieltjes.sums import direct_sum


@pytest.fixture(scope="module")
def hermite_six():
    return compute_zero_set(hermite(6)).expanded()


class TestDirectSum:
    def test_hermite_two(self):
        zeros = compute_zero_set(hermite(2)).expanded()
        for j, z in enumerate(zeros):
            assert abs(direct_sum(zeros, 1, j) - z) < 1e-14

    def test_power_must_be_positive(self):
        with pytest.raises(ValueError):
            direct_sum([0, 1], 0, 0)

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            direct_sum([0, 1], 1, 2)

    def test_coincident_points(self):
        with pytest.raises(CoincidentPointsError):
            direct_sum([0.5, 0.5, 1.0], 2, 0)


class TestOdeCoefficients:
    def test_degree_bounds(self):
        with pytest.raises(ValueError):
            OdeCoefficients(p=1, q=ExactPoly((0, 0, 1)), r_plus_lambda=0)

    def test_zero_leading(self):
        with pytest.raises(ValueError):
            OdeCoefficients(p=0, q=1, r_plus_lambda=0)

    def test_classical_hermite_residual(self):
        ode = classical_ode("hermite", 5)
        assert ode.residual(hermite(5)).is_zero

    def test_exceptional_residual(self):
        partition = Partition((1, 1, 3, 3))
        ode = exceptional_hermite_ode(partition, 8)
        assert ode.residual(exceptional_hermite(partition, 8)).is_zero

    def test_fitted_constant(self):
        ode = fitted_ode(hermite(4), 1, ExactPoly((0, -2)))
        assert ode.r_plus_lambda == RationalFunction.of(8)

    def test_laguerre_and_jacobi(self):
        alpha = Fraction(1, 2)
        assert classical_ode("laguerre", 4, alpha).residual(classical_poly("laguerre", 4, alpha)).is_zero
        jacobi = classical_ode("jacobi", 3, alpha, Fraction(3, 2))
        assert jacobi.residual(classical_poly("jacobi", 3, alpha, Fraction(3, 2))).is_zero


class TestClassicalHermite:
    def test_first_sum_is_the_zero(self, hermite_six):
        report = check_relation(hermite_six, 1, expected=lambda x: x)
        assert report.method == "explicit"
        assert report.max_abs_residual < 1e-10

    def test_second_sum(self, hermite_six):
        report = check_relation(hermite_six, 2, expected=lambda x: (2 * 5 - x ** 2) / 3)
        assert report.max_abs_residual < 1e-10

    def test_third_sum_is_half_the_zero(self, hermite_six):
        report = check_relation(hermite_six, 3, expected=lambda x: x / 2)
        assert report.max_abs_residual < 1e-10

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_closed_forms(self, hermite_six, m):
        report = check_relation(hermite_six, m, classical_ode("hermite", 6), method="closed_form")
        assert report.max_rel_residual < 1e-10
        assert len(report.rows) == 6

    def test_taylor_second_derivative(self, hermite_six):
        x = hermite_six[2]
        y = taylor_derivatives(classical_ode("hermite", 6), x, 3)
        assert y[0] == 0 and y[1] == 1
        assert abs(y[2] - 2 * x) < 1e-14


class TestExceptionalRelations:
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_closed_forms(self, four_ones, m):
        partition, n, zero_set, _ = four_ones
        report = check_relation(zero_set.expanded(), m, exceptional_hermite_ode(partition, n),
                                method="closed_form")
        assert report.max_rel_residual < 1e-8

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_recurrence_matches_closed_forms(self, ones_and_threes, m):
        partition, n, zero_set, _ = ones_and_threes
        ode = exceptional_hermite_ode(partition, n)
        closed = {1: predict_S1, 2: predict_S2, 3: predict_S3}[m]
        for z in zero_set.expanded():
            assert abs(z_recurrence_predict(ode, z, m) - closed(ode, z)) < 1e-8 * max(1, abs(closed(ode, z)))

    def test_fourth_power(self):
        partition = Partition((1, 1))
        zeros = compute_zero_set(exceptional_hermite(partition, 6)).expanded()
        report = check_relation(zeros, 4, exceptional_hermite_ode(partition, 6))
        assert report.max_rel_residual < 1e-10

    @pytest.mark.slow
    def test_high_precision_shrinks_residual(self, four_ones, four_ones_high_precision):
        partition, n, low, _ = four_ones
        high = four_ones_high_precision[2]
        ode = exceptional_hermite_ode(partition, n)
        coarse = check_relation(low.expanded(), 3, ode, precision=53)
        fine = check_relation(high.expanded(), 3, ode, precision=256)
        assert fine.max_abs_residual < 1e-40
        assert fine.max_abs_residual < coarse.max_abs_residual

    def test_order_must_be_positive(self):
        with pytest.raises(ValueError):
            z_recurrence_predict(classical_ode("hermite", 3), 0, 0)

    def test_z_values_length(self, hermite_six):
        values = z_values(classical_ode("hermite", 6), hermite_six[0], 4)
        assert len(values) == 4
        # Z_1 at a zero is the first power sum
        assert abs(values[0] - direct_sum(hermite_six, 1, 0)) < 1e-10

    def test_second_z_value(self, ones_and_threes):
        partition, n, zero_set, _ = ones_and_threes
        zeros = zero_set.expanded()
        ode = exceptional_hermite_ode(partition, n)
        z1, z2 = z_values(ode, zeros[0], 2)
        s1 = direct_sum(zeros, 1, 0)
        s2 = direct_sum(zeros, 2, 0)
        assert abs(z1 - s1) < 1e-8
        assert abs(z2 - (s1 ** 2 - s2)) < 1e-8 * max(1, abs(s2))

    def test_unknown_method(self, hermite_six):
        with pytest.raises(ValueError):
            check_relation(hermite_six, 2, classical_ode("hermite", 6), method="series")

    def test_closed_form_limited_to_three(self, hermite_six):
        with pytest.raises(ValueError):
            check_relation(hermite_six, 4, classical_ode("hermite", 6), method="closed_form")


class TestCorollaryIdentities:
    @pytest.mark.parametrize("fixture", ["four_ones", "ones_and_threes", "twos_and_threes"])
    def test_real_zeros(self, request, fixture):
        _, _, zero_set, _ = request.getfixturevalue(fixture)
        for i in range(zero_set.n_real):
            assert corollary_identity_real(zero_set, i) < 1e-10
            assert real_form_residual(zero_set, i) < 1e-10

    @pytest.mark.parametrize("fixture", ["four_ones", "ones_and_threes", "twos_and_threes"])
    def test_complex_zeros(self, request, fixture):
        _, _, zero_set, weight = request.getfixturevalue(fixture)
        for i in range(zero_set.n_complex):
            residual = corollary_identity_complex(zero_set, weight, i)
            assert residual.zero < 1e-8
            assert residual.equality < 1e-8

    def test_index_checked(self, four_ones):
        _, _, zero_set, weight = four_ones
        with pytest.raises(IndexError):
            corollary_identity_real(zero_set, zero_set.n_real)
        with pytest.raises(IndexError):
            corollary_identity_complex(zero_set, weight, zero_set.n_complex)


@pytest.mark.slow
class TestHighPrecision:
    """At 256 bits every residual tracks root accuracy, far below double precision."""

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_classical_hermite(self, m):
        zeros = compute_zero_set(hermite(12), precision=256).expanded()
        report = check_relation(zeros, m, classical_ode("hermite", 12), precision=256, method="closed_form")
        assert report.max_abs_residual < 1e-20

    @pytest.mark.parametrize("fixture", ["four_ones", "ones_and_threes", "twos_and_threes"])
    @pytest.mark.parametrize("m", [1, 2])
    def test_exceptional_low_orders(self, high_precision_case, fixture, m):
        partition, n, zero_set, _ = high_precision_case(fixture)
        ode = exceptional_hermite_ode(partition, n)
        for method in ("closed_form", "recurrence"):
            report = check_relation(zero_set.expanded(), m, ode, precision=256, method=method)
            assert report.max_abs_residual < 1e-20

    @pytest.mark.parametrize("fixture", ["four_ones", "ones_and_threes", "twos_and_threes"])
    def test_force_balance(self, high_precision_case, fixture):
        _, _, zero_set, weight = high_precision_case(fixture)
        for i in range(zero_set.n_real):
            assert corollary_identity_real(zero_set, i) < 1e-20
            assert real_form_residual(zero_set, i) < 1e-20
        for i in range(zero_set.n_complex):
            residual = corollary_identity_complex(zero_set, weight, i)
            assert residual.zero < 1e-20
            assert residual.equality < 1e-20


def test_mpmath_constant_sanity():
    # S_1 at the positive zero of H_2 equals 1/sqrt(2)
    zeros = compute_zero_set(hermite(2)).expanded()
    assert abs(direct_sum(zeros, 1, 1) - 1 / mpmath.sqrt(2)) < 1e-14


@pytest.mark.parametrize("n", range(2, 21))
def test_classical_hermite_sweep(n):
    zeros = compute_zero_set(hermite(n)).expanded()
    ode = classical_ode("hermite", n)
    for m in (1, 2, 3):
        assert check_relation(zeros, m, ode, method="closed_form").max_abs_residual < 1e-8


@pytest.mark.slow
@pytest.mark.parametrize("parts,degrees", [((1, 1), range(3, 13)), ((1, 1, 1, 1), range(5, 13))])
def test_exceptional_sweep(parts, degrees):
    partition = Partition(parts)
    for n in degrees:
        if not is_admissible(partition, n):
            continue
        poly = exceptional_hermite(partition, n)
        if not check_simplicity(poly):
            continue
        zeros = compute_zero_set(poly).expanded()
        ode = exceptional_hermite_ode(partition, n)
        for m in (1, 2, 3):
            assert check_relation(zeros, m, ode).max_rel_residual < 1e-8
        assert check_relation(zeros, 3, expected=lambda x: x / 2).max_abs_residual < 1e-8
