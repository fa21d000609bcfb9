"""Beamwidth, sidelobe, and beam-packing extraction from pattern cuts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import AnalysisError, DomainError, ValidationError
from .geometry import ArrayLayout, UccaSpec, build_ucca
from .pattern import (
    AZIMUTH,
    DEFAULT_CUT_STEP_DEG,
    ELEVATION,
    PatternCut,
    SteeringTarget,
    sample_cut,
)

# half power relative to the peak; the conventional -3 dB figure, not the
# exact 10*log10(1/2) = -3.0103 dB (difference is below reporting precision)
HALF_POWER_DB = -3.0

DEFAULT_THETA_RANGE_DEG = (0.0, 90.0)
DEFAULT_PHI_RANGE_DEG = (0.0, 360.0)


@dataclass(frozen=True)
class HpbwResult:
    """Half-power beamwidths on the two principal cuts, degrees."""

    theta_3db_deg: float
    phi_3db_deg: float

    def __post_init__(self):
        if not (self.theta_3db_deg > 0 and self.phi_3db_deg > 0):
            raise ValidationError("beamwidths must be positive")


@dataclass(frozen=True)
class SllResult:
    """Maximum side-lobe level per cut, dB relative to the mainlobe peak."""

    max_sll_theta_db: float
    max_sll_phi_db: float


def _half_power_crossing(angles: np.ndarray, power: np.ndarray, peak: int, step: int) -> float:
    """Angle where power crosses peak-3 dB walking from the peak in `step`
    direction, linearly interpolated in dB between the bracketing samples."""
    threshold = power[peak] + HALF_POWER_DB
    i = peak
    while True:
        j = i + step
        if j < 0 or j >= power.size:
            raise AnalysisError(
                "half-power crossing lies outside the cut range (beam wider than the cut)"
            )
        if power[j] < threshold:
            break
        i = j
    frac = (threshold - power[i]) / (power[j] - power[i])
    return float(angles[i] + frac * (angles[j] - angles[i]))


def measure_hpbw(cut: PatternCut) -> float:
    """Width in degrees between the two half-power crossings nearest the peak."""
    power = cut.power_db
    peak = int(np.argmax(power))
    left = _half_power_crossing(cut.angles_deg, power, peak, -1)
    right = _half_power_crossing(cut.angles_deg, power, peak, +1)
    return right - left


def _first_minimum(power: np.ndarray, peak: int, step: int) -> int:
    """Index of the first local minimum walking from the peak in `step`
    direction; raises if power is still falling when the cut ends."""
    i = peak
    while True:
        j = i + step
        if j < 0 or j >= power.size:
            raise AnalysisError("no local minimum flanking the peak inside the cut")
        if power[j] >= power[i]:
            return i
        i = j


def measure_max_sll(cut: PatternCut) -> float:
    """Largest sample outside the main lobe, dB relative to the peak.

    The main lobe is bounded by the first local minimum on each side of the
    peak (steered cuts need not contain true nulls); those bounds and
    everything between them are excised before taking the maximum.
    """
    power = cut.power_db
    peak = int(np.argmax(power))
    left = _first_minimum(power, peak, -1)
    right = _first_minimum(power, peak, +1)
    remaining = np.concatenate([power[:left], power[right + 1 :]])
    if remaining.size == 0:
        raise AnalysisError("no samples remain outside the main lobe")
    return float(remaining.max() - power[peak])


def beam_packing_gain(theta_3db_deg: float, phi_3db_deg: float) -> float:
    """Count of non-overlapping half-power beams tiling the service
    hemisphere: (90/theta_3db) * (360/phi_3db), left unrounded."""
    if not theta_3db_deg > 0:
        raise DomainError(f"theta beamwidth must be positive, got {theta_3db_deg}")
    if not phi_3db_deg > 0:
        raise DomainError(f"phi beamwidth must be positive, got {phi_3db_deg}")
    return (90.0 / theta_3db_deg) * (360.0 / phi_3db_deg)


def principal_cuts(
    layout: ArrayLayout,
    steering: SteeringTarget,
    step_deg: float = DEFAULT_CUT_STEP_DEG,
    theta_range_deg: tuple[float, float] = DEFAULT_THETA_RANGE_DEG,
    phi_range_deg: tuple[float, float] = DEFAULT_PHI_RANGE_DEG,
) -> tuple[PatternCut, PatternCut]:
    """Elevation and azimuth cuts through the steering direction."""
    el = sample_cut(layout, steering, ELEVATION, *theta_range_deg, step_deg)
    az = sample_cut(layout, steering, AZIMUTH, *phi_range_deg, step_deg)
    return el, az


def measure_layout(
    layout: ArrayLayout,
    steering: SteeringTarget,
    step_deg: float = DEFAULT_CUT_STEP_DEG,
    theta_range_deg: tuple[float, float] = DEFAULT_THETA_RANGE_DEG,
    phi_range_deg: tuple[float, float] = DEFAULT_PHI_RANGE_DEG,
) -> tuple[HpbwResult, SllResult]:
    """HPBW and maximum SLL on both principal cuts of a layout."""
    el, az = principal_cuts(layout, steering, step_deg, theta_range_deg, phi_range_deg)
    hpbw = HpbwResult(measure_hpbw(el), measure_hpbw(az))
    sll = SllResult(measure_max_sll(el), measure_max_sll(az))
    return hpbw, sll


def hpbw_sweep(
    rings: int,
    spacings_wl: Sequence[float],
    steering: SteeringTarget,
    include_center: bool = True,
    step_deg: float = DEFAULT_CUT_STEP_DEG,
    theta_range_deg: tuple[float, float] = DEFAULT_THETA_RANGE_DEG,
    phi_range_deg: tuple[float, float] = DEFAULT_PHI_RANGE_DEG,
) -> list[tuple[float, float, float]]:
    """Per-spacing beamwidths (spacing_wl, theta_3db, phi_3db) for freshly
    built ring arrays with the given ring count.

    Spacings must be positive and ascending; measurement errors for a point
    propagate to the caller.
    """
    spacings = list(spacings_wl)
    if not spacings:
        raise ValidationError("spacing sweep needs at least one spacing")
    if any(s <= 0 for s in spacings):
        raise ValidationError("sweep spacings must be positive")
    if any(b <= a for a, b in zip(spacings, spacings[1:])):
        raise ValidationError("sweep spacings must be strictly ascending")
    out = []
    for spacing in spacings:
        layout = build_ucca(UccaSpec(rings, spacing, include_center))
        el, az = principal_cuts(layout, steering, step_deg, theta_range_deg, phi_range_deg)
        out.append((spacing, measure_hpbw(el), measure_hpbw(az)))
    return out
