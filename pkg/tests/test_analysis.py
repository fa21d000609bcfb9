import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beamkit import (
    AnalysisError,
    DomainError,
    PatternCut,
    SteeringTarget,
    UccaSpec,
    ValidationError,
    beam_packing_gain,
    build_ucca,
    hpbw_sweep,
    measure_hpbw,
    measure_layout,
    measure_max_sll,
)
from beamkit.pattern import ELEVATION


def synthetic_cut(angles, power, steering_angle=30.0):
    return PatternCut(ELEVATION, angles, power, SteeringTarget(steering_angle, 60.0))


def parabola_cut(shift_db=0.0):
    # dyadic grid so the -3 dB samples land exactly on 25 and 35 degrees
    angles = 30.0 + 0.0625 * np.arange(-480, 481)
    power = -3.0 * ((angles - 30.0) / 5.0) ** 2 + shift_db
    return synthetic_cut(angles, power)


class TestMeasureHpbw:
    def test_parabola_is_exactly_ten_degrees(self):
        assert measure_hpbw(parabola_cut()) == 10.0

    def test_depends_only_on_peak_relative_values(self):
        base = parabola_cut()
        rezeroed = synthetic_cut(base.angles_deg, base.power_db - base.power_db.max())
        assert measure_hpbw(rezeroed) == measure_hpbw(base)
        # a nonzero shift reroutes the interpolation arithmetic, so only
        # equality up to float rounding is claimed
        shifted = parabola_cut(shift_db=6.0)
        assert measure_hpbw(shifted) == pytest.approx(measure_hpbw(base), abs=1e-9)

    def test_missing_crossing_raises(self):
        angles = np.arange(0.0, 91.0)
        flat = synthetic_cut(angles, np.zeros_like(angles))
        with pytest.raises(AnalysisError):
            measure_hpbw(flat)

    def test_crossing_on_one_side_only_raises(self):
        angles = np.arange(0.0, 10.25, 0.25)
        power = -0.5 * (angles - 9.0) ** 2  # peak near the right edge
        with pytest.raises(AnalysisError):
            measure_hpbw(synthetic_cut(angles, power, steering_angle=9.0))


class TestMeasureMaxSll:
    def test_constructed_secondary_bump(self):
        angles = np.arange(0.0, 90.25, 0.25)
        main = -20.0 * ((angles - 30.0) / 4.0) ** 2
        right_bump = -7.0 - 3.0 * ((angles - 45.0) / 1.5) ** 2
        left_bump = -9.0 - 3.0 * ((angles - 15.0) / 1.5) ** 2
        power = np.maximum(main, np.maximum(right_bump, left_bump))
        assert measure_max_sll(synthetic_cut(angles, power)) == -7.0

    def test_monotone_cut_has_no_main_lobe_boundary(self):
        angles = np.arange(0.0, 91.0)
        power = -0.1 * (angles - 30.0) ** 2
        with pytest.raises(AnalysisError):
            measure_max_sll(synthetic_cut(angles, power))

    def test_study_arrays_stay_below_half_db(self, paper_run):
        report, _, _ = paper_run
        for beam in report.beams:
            assert beam["max_sll_theta_db"] < -0.5
            assert beam["max_sll_phi_db"] < -0.5


class TestStudyArrayMeasurements:
    def test_rpa_matches_reported_values(self, paper_run):
        report, _, _ = paper_run
        rpa = next(b for b in report.beams if b["array"] == "rpa")
        assert rpa["hpbw_theta_deg"] == pytest.approx(12.0, abs=1.2)
        assert rpa["hpbw_phi_deg"] == pytest.approx(20.7, abs=2.07)
        assert rpa["max_sll_theta_db"] == pytest.approx(-24.11, abs=1.5)
        assert rpa["max_sll_phi_db"] == pytest.approx(-14.64, abs=1.5)

    def test_ucca_2wl_matches_reported_values(self, paper_run):
        report, _, _ = paper_run
        beam = next(b for b in report.beams if b["array"] == "ucca_2wl")
        assert beam["hpbw_theta_deg"] == pytest.approx(3.1, abs=0.31)
        assert beam["hpbw_phi_deg"] == pytest.approx(5.4, abs=0.54)


class TestBeamPackingGain:
    def test_hemisphere_single_beam(self):
        assert beam_packing_gain(90.0, 360.0) == 1.0

    def test_reported_grid_beamwidths(self):
        # (90/12) * (360/20.7), evaluated independently as 32400/(12*20.7)
        assert beam_packing_gain(12.0, 20.7) == pytest.approx(32400.0 / 248.4, rel=1e-12)
        assert beam_packing_gain(12.0, 20.7) == pytest.approx(130.43478260869566, rel=1e-12)

    def test_reported_ring_beamwidths_and_ratio(self):
        g2 = beam_packing_gain(3.1, 5.4)
        assert g2 == pytest.approx(1935.4838709677415, rel=1e-12)
        ratio = g2 / beam_packing_gain(12.0, 20.7)
        assert ratio == pytest.approx(14.84, abs=0.01)

    def test_rejects_nonpositive_widths(self):
        with pytest.raises(DomainError):
            beam_packing_gain(0.0, 10.0)
        with pytest.raises(DomainError):
            beam_packing_gain(10.0, -1.0)

    @given(
        theta=st.floats(0.1, 90.0),
        phi=st.floats(0.1, 360.0),
        scale=st.floats(0.05, 10.0),
    )
    @settings(max_examples=100)
    def test_scale_property(self, theta, phi, scale):
        scaled = beam_packing_gain(scale * theta, scale * phi)
        assert scaled * scale**2 == pytest.approx(beam_packing_gain(theta, phi), rel=1e-12)

    @given(theta=st.floats(0.5, 90.0), phi=st.floats(0.5, 360.0))
    @settings(max_examples=50)
    def test_at_least_one_beam_fits(self, theta, phi):
        assert beam_packing_gain(theta, phi) >= 1.0


class TestHpbwSweep:
    def test_reported_spacings(self, steering):
        sweep = hpbw_sweep(5, [2.0, 3.0], steering)
        (s2, t2, p2), (s3, t3, p3) = sweep
        assert (s2, s3) == (2.0, 3.0)
        assert t2 == pytest.approx(3.1, abs=0.31)
        assert p2 == pytest.approx(5.4, abs=0.54)
        assert t3 == pytest.approx(2.0, abs=0.3)
        assert p3 == pytest.approx(3.6, abs=0.36)
        # narrower beams at wider spacing
        assert t3 < t2 and p3 < p2

    def test_hpbw_strictly_decreasing_in_spacing(self, steering):
        sweep = hpbw_sweep(5, [1.0, 2.0, 3.0], steering, step_deg=0.02)
        thetas = [t for _, t, _ in sweep]
        phis = [p for _, _, p in sweep]
        assert thetas == sorted(thetas, reverse=True)
        assert phis == sorted(phis, reverse=True)
        assert len(set(thetas)) == 3 and len(set(phis)) == 3

    def test_single_spacing(self, steering):
        ((spacing, theta, phi),) = hpbw_sweep(5, [0.5], steering, step_deg=0.02)
        assert spacing == 0.5
        assert 0.0 < theta < 90.0
        assert 0.0 < phi < 360.0

    def test_rejects_bad_spacing_lists(self, steering):
        with pytest.raises(ValidationError):
            hpbw_sweep(5, [], steering)
        with pytest.raises(ValidationError):
            hpbw_sweep(5, [2.0, 1.0], steering)
        with pytest.raises(ValidationError):
            hpbw_sweep(5, [-1.0, 2.0], steering)


class TestMeasureLayout:
    def test_returns_paired_results(self, steering):
        layout = build_ucca(UccaSpec(2, 1.0))
        hpbw, sll = measure_layout(layout, steering, step_deg=0.05)
        assert hpbw.theta_3db_deg > 0
        assert hpbw.phi_3db_deg > 0
        assert sll.max_sll_theta_db < -0.5
        assert sll.max_sll_phi_db < -0.5
