"""Tests for root finding, zero classification and η-proximity."""

import mpmath
import pytest
from mpmath.ctx_mp_python import _mpc, _mpf

from backend.app.core.errors import MultipleZeroError, UnpairedRootError
from backend.app.polycore.classical import hermite
from backend.app.polycore.exact import ExactPoly
from backend.app.polycore.exceptional import exceptional_hermite
from backend.app.polycore.partitions import Partition
from backend.app.roots.aberth import find_roots, vieta_residual
from backend.app.roots.proximity import eta_proximity, proximity_trend
from backend.app.roots.zeros import check_simplicity, classify_zeros, compute_zero_set


class TestFindRoots:
    def test_hermite_two(self):
        result = find_roots(hermite(2))
        expected = 1 / mpmath.sqrt(2)
        assert len(result) == 2
        assert abs(result.roots[0] + expected) < 1e-14
        assert abs(result.roots[1] - expected) < 1e-14

    def test_zero_root_split_off(self):
        # 128x^3 + 192x has an exact zero at the origin
        result = find_roots(exceptional_hermite(Partition((1, 1)), 3))
        assert any(z == 0 for z in result.roots)
        assert max(result.residuals) < 1e-10

    def test_linear(self):
        result = find_roots(ExactPoly((3, 2)))
        assert abs(result.roots[0] + 1.5) < 1e-15

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            find_roots(ExactPoly.constant(5))

    def test_high_precision_residuals(self):
        p = exceptional_hermite(Partition((1, 1, 1, 1)), 8)
        result = find_roots(p, precision=256)
        assert result.precision == 256
        assert vieta_residual(p, result.roots, precision=256) < 1e-25

    @pytest.mark.parametrize("n", [5, 10, 20])
    def test_vieta(self, n):
        p = hermite(n)
        assert vieta_residual(p, find_roots(p).roots) < 1e-12


class TestSimplicity:
    def test_square_is_not_simple(self):
        assert not check_simplicity(ExactPoly((0, 0, 1)))

    def test_hermite_is_simple(self):
        assert check_simplicity(hermite(6))

    def test_compute_rejects_repeated_zero(self):
        with pytest.raises(MultipleZeroError):
            compute_zero_set(ExactPoly.from_roots([1, 1, 2]))


class TestClassify:
    def test_pairs_and_reals(self):
        zero_set = classify_zeros([complex(1, 2), 0.5, complex(1, -2)])
        assert zero_set.n_real == 1
        assert zero_set.n_pairs == 1
        x, mu = zero_set.pairs[0]
        assert (float(x), float(mu)) == (1.0, 2.0)

    def test_expanded_order(self):
        zero_set = classify_zeros([complex(1, 2), 0.5, complex(1, -2), -3])
        points = zero_set.expanded()
        assert [float(z.real) for z in points[:2]] == [-3.0, 0.5]
        assert float(points[2].imag) == 2.0
        assert float(points[3].imag) == -2.0

    def test_unpaired(self):
        with pytest.raises(UnpairedRootError):
            classify_zeros([complex(0, 1), 2])

    def test_mismatched_pair(self):
        with pytest.raises(UnpairedRootError):
            classify_zeros([complex(0, 1), complex(1, -1)])

    def test_to_json_is_decimal_strings(self):
        zero_set = classify_zeros([complex(1, 2), complex(1, -2)])
        payload = zero_set.to_json()
        assert payload["degree"] == 2
        assert isinstance(payload["pairs"][0]["mu"], str)


class TestReferenceZeroCounts:
    def test_four_ones(self, four_ones):
        _, _, zero_set, _ = four_ones
        assert (zero_set.n_real, zero_set.n_complex) == (4, 4)

    def test_ones_and_threes(self, ones_and_threes):
        _, _, zero_set, _ = ones_and_threes
        assert (zero_set.n_real, zero_set.n_complex) == (2, 6)

    def test_twos_and_threes(self, twos_and_threes):
        _, _, zero_set, _ = twos_and_threes
        assert (zero_set.n_real, zero_set.n_complex) == (2, 8)

    def test_real_zeros_symmetric(self, four_ones):
        _, _, zero_set, _ = four_ones
        xs = [float(x) for x in zero_set.real_zeros]
        assert xs == sorted(xs)
        assert abs(xs[0] + xs[-1]) < 1e-10

    def test_precision_agrees(self, four_ones, four_ones_high_precision):
        low = four_ones[2].expanded()
        high = four_ones_high_precision[2].expanded()
        assert max(abs(complex(a) - complex(b)) for a, b in zip(low, high)) < 1e-10


class TestProximity:
    def test_classical_has_no_entries(self):
        assert eta_proximity(Partition(()), 5) == []

    def test_one_entry_per_complex_zero(self):
        entries = eta_proximity(Partition((1, 1, 1, 1)), 8)
        assert len(entries) == 4
        assert all(e.distance > 0 for e in entries)

    def test_entries_keep_working_precision(self):
        entries = eta_proximity(Partition((1, 1)), 6, precision=256)
        assert all(isinstance(e.zero, _mpc) and isinstance(e.distance, _mpf) for e in entries)
        assert all(e.distance.context.prec == 256 for e in entries)

    def test_trend_is_tabulated(self):
        trend = proximity_trend(Partition((1, 1)), [4, 6, 8])
        assert trend.degrees == (4, 6, 8)
        assert len(trend.max_distances) == 3
        assert isinstance(trend.decreasing, bool)
