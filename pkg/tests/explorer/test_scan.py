"""Tests for the translation scan and its classification."""

import pytest

from backend.app.core.config import get_config
from backend.app.energy.weights import WeightSpec
from backend.app.explorer.examples import EXAMPLE_CASES, run_example
from backend.app.explorer.scan import (
    ScanClass,
    ScanResult,
    ScanSample,
    ScanSpec,
    classify_scan,
    scan_f,
    scan_stability,
    translation_curvature,
)
from backend.app.polycore.classical import hermite
from backend.app.roots.zeros import compute_zero_set

SMALL = ScanSpec(window=0.2, real_samples=21, radius=0.05, circle_samples=16, epsilon=1e-8)
NEAR = ScanSpec(window=0.01, real_samples=5, radius=0.01, circle_samples=8, epsilon=1e-8)
REFERENCE_FIXTURES = ["four_ones", "ones_and_threes", "twos_and_threes"]


@pytest.fixture(scope="module")
def hermite_three():
    return compute_zero_set(hermite(3))


class TestScanSpec:
    def test_defaults_from_config(self):
        spec = ScanSpec()
        assert spec.real_samples == get_config().SCAN_REAL_SAMPLES
        assert spec.circle_samples == get_config().SCAN_CIRCLE_SAMPLES

    def test_doubled(self):
        fine = SMALL.doubled()
        assert fine.real_samples == 41
        assert fine.circle_samples == 32
        assert fine.window == SMALL.window

    def test_validation(self):
        with pytest.raises(ValueError):
            ScanSpec(window=0)


class TestScanF:
    def test_origin_is_zero(self, hermite_three):
        result = scan_f(hermite_three, WeightSpec.hermite(), SMALL)
        origin = [s for s in result.real_samples if s.z == 0]
        assert len(origin) == 1
        assert origin[0].log_f == 0.0

    def test_sample_counts(self, hermite_three):
        result = scan_f(hermite_three, WeightSpec.hermite(), SMALL)
        assert len(result.real_samples) == 21
        assert len(result.circle_samples) == 16
        assert result.skipped == []

    def test_hermite_closed_form(self, hermite_three):
        # zeros sum to 0, so log f(z) = -n Re(z^2)
        result = scan_f(hermite_three, WeightSpec.hermite(), SMALL)
        for s in result.samples:
            assert s.log_f == pytest.approx(-3 * (s.z * s.z).real, abs=1e-12)

    def test_conjugate_symmetry(self, four_ones):
        _, _, zero_set, weight = four_ones
        result = scan_f(zero_set, weight, SMALL)
        circle = result.circle_samples
        count = len(circle)
        for k in range(1, count // 2):
            assert circle[k].log_f == pytest.approx(circle[count - k].log_f, abs=1e-8)

    @pytest.mark.parametrize("fixture", REFERENCE_FIXTURES)
    def test_even_on_the_real_axis(self, request, fixture):
        _, _, zero_set, weight = request.getfixturevalue(fixture)
        values = {s.z.real: s.log_f for s in scan_f(zero_set, weight, SMALL).real_samples}
        for t, value in values.items():
            assert value == pytest.approx(values[-t], abs=1e-10)


class TestTranslationCurvature:
    def test_classical_hermite(self, hermite_three):
        # (log ω)'' = -2 at every zero
        assert translation_curvature(hermite_three, WeightSpec.hermite()) == pytest.approx(-6.0)

    @pytest.mark.parametrize("fixture", REFERENCE_FIXTURES)
    def test_matches_scan_near_origin(self, request, fixture):
        _, _, zero_set, weight = request.getfixturevalue(fixture)
        curvature = translation_curvature(zero_set, weight)
        for s in scan_f(zero_set, weight, NEAR).real_samples:
            if s.z != 0:
                assert s.log_f == pytest.approx(curvature * s.z.real ** 2 / 2, rel=1e-2)

    @pytest.mark.parametrize("fixture", REFERENCE_FIXTURES)
    def test_sign_decides_the_label(self, request, fixture):
        _, _, zero_set, weight = request.getfixturevalue(fixture)
        assert translation_curvature(zero_set, weight) < 0
        assert classify_scan(scan_f(zero_set, weight, SMALL)) is ScanClass.REAL_MAX_AND_SADDLE


class TestClassifyScan:
    def _result(self, real, circle):
        samples = [ScanSample(complex(t, 0), v, False) for t, v in real]
        samples += [ScanSample(complex(0, 0.05), v, True) for v in circle]
        return ScanResult(SMALL, samples)

    def test_neither(self):
        result = self._result([(0.0, 0.0), (0.1, 1e-3), (-0.1, -1e-3)], [1e-3, -1e-3])
        assert classify_scan(result) is ScanClass.NEITHER

    def test_real_max_and_saddle(self):
        result = self._result([(0.0, 0.0), (0.1, -1e-3), (-0.1, -1e-3)], [1e-3, -1e-3])
        assert classify_scan(result) is ScanClass.REAL_MAX_AND_SADDLE

    def test_real_max_only(self):
        result = self._result([(0.0, 0.0), (0.1, -1e-3), (-0.1, -1e-3)], [-1e-3, -2e-3])
        assert classify_scan(result) is ScanClass.REAL_MAX_ONLY

    def test_flat_is_inconclusive(self):
        result = self._result([(0.0, 0.0), (0.1, -1e-12), (-0.1, -1e-12)], [0.0, 0.0])
        assert classify_scan(result) is ScanClass.INCONCLUSIVE

    def test_classical_hermite(self, hermite_three):
        result = scan_f(hermite_three, WeightSpec.hermite(), SMALL)
        assert classify_scan(result) is ScanClass.REAL_MAX_AND_SADDLE


@pytest.mark.slow
class TestReferenceScans:
    @pytest.mark.parametrize("case", EXAMPLE_CASES, ids=lambda c: str(c.partition))
    def test_expected_label(self, case):
        report = run_example(case)
        assert (report.n_real, report.n_complex) == (case.n_real, case.n_complex)
        assert report.matches_expectation
        assert report.stated_scan_class is case.stated_scan
        assert report.translation_curvature < 0
        assert report.stationarity_residual < 1e-7
        assert set(report.runtimes) == {"construct", "roots", "energy", "scan"}

    @pytest.mark.parametrize("fixture", REFERENCE_FIXTURES)
    def test_stable_under_refinement(self, request, fixture):
        _, _, zero_set, weight = request.getfixturevalue(fixture)
        stability = scan_stability(zero_set, weight)
        assert stability.stable
        assert stability.coarse is ScanClass.REAL_MAX_AND_SADDLE
