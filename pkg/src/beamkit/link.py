"""System-level 5G metrics: inter-user separations, SINR, spectral
efficiency, and the seeded interference Monte Carlo experiment.

The Monte Carlo model normalizes the desired-signal power to the mainlobe
gain (P = 1); interferers contribute the normalized pattern gain at their
drawn angles and the noise floor is 10**(-snr_db/10), so the
interference-free SINR equals the configured SNR exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, ValidationError
from .geometry import ArrayLayout
from .pattern import ELEVATION, PLANES, SteeringTarget, normalized_gain

_MAX_SEED = 2**64

# angle block size for chunked pattern evaluation over all trials
_BLOCK = 16384


@dataclass(frozen=True)
class CellGeometry:
    """Base-station ground range and antenna height, meters."""

    range_m: float
    height_m: float

    def __post_init__(self):
        if not self.range_m > 0:
            raise ValidationError(f"range must be positive, got {self.range_m}")
        if not self.height_m > 0:
            raise ValidationError(f"antenna height must be positive, got {self.height_m}")


@dataclass(frozen=True)
class SinrScenario:
    """Configuration of one interference Monte Carlo run.

    Interferer angles are drawn uniformly from angle_range_deg in the varying
    coordinate of the chosen plane; the other coordinate stays fixed at the
    desired user's angle. The desired angle is not excluded from the draw.
    """

    interferers: int
    snr_db: float
    trials: int
    seed: int
    plane: str
    angle_range_deg: tuple[float, float]
    desired: SteeringTarget

    def __post_init__(self):
        if not (isinstance(self.interferers, int) and self.interferers >= 1):
            raise ValidationError(f"interferer count must be a positive integer, got {self.interferers!r}")
        if not (isinstance(self.trials, int) and self.trials >= 1):
            raise ValidationError(f"trial count must be a positive integer, got {self.trials!r}")
        if not (isinstance(self.seed, int) and 0 <= self.seed < _MAX_SEED):
            raise ValidationError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if self.plane not in PLANES:
            raise ValidationError(f"plane must be one of {PLANES}, got {self.plane!r}")
        lo, hi = self.angle_range_deg
        if not lo < hi:
            raise ValidationError(f"empty interferer angle range [{lo}, {hi}]")
        domain = (0.0, 90.0) if self.plane == ELEVATION else (0.0, 360.0)
        if lo < domain[0] or hi > domain[1]:
            raise ValidationError(
                f"angle range [{lo}, {hi}] outside the {self.plane} domain {domain}"
            )


@dataclass(frozen=True)
class LinkStats:
    """Summary of a Monte Carlo run.

    mean_sinr_db is the dB value of the trial-mean linear SINR; mean_se is
    the mean over trials of log2(1 + SINR_t) in bps/Hz. se_of_mean_sinr
    applies the rate formula to the mean SINR instead, for comparison with
    reports that aggregate the other way. The per-trial linear SINR series is
    retained on request.
    """

    mean_sinr_db: float
    mean_se: float
    se_of_mean_sinr: float
    trials: int
    sinr_series: np.ndarray | None = None


def azimuthal_separation(range_m: float, phi_3db_deg: float) -> float:
    """Minimum side-by-side ground spacing of two users at the cell edge:
    2 * R * tan(phi_3db / 2)."""
    if not range_m > 0:
        raise DomainError(f"range must be positive, got {range_m}")
    if not 0.0 < phi_3db_deg < 180.0:
        raise DomainError(f"azimuth beamwidth must lie in (0, 180) deg, got {phi_3db_deg}")
    return 2.0 * range_m * math.tan(math.radians(phi_3db_deg) / 2.0)


def elevation_separation(cell: CellGeometry, theta_3db_deg: float) -> float:
    """Minimum radial ground spacing of two users along boresight:
    R - h * tan(arctan(R/h) - theta_3db)."""
    if theta_3db_deg < 0:
        raise DomainError(f"elevation beamwidth must be non-negative, got {theta_3db_deg}")
    inner = math.atan(cell.range_m / cell.height_m) - math.radians(theta_3db_deg)
    if not -math.pi / 2.0 < inner < math.pi / 2.0:
        raise DomainError("tangent argument out of range; beamwidth too large for the geometry")
    return cell.range_m - cell.height_m * math.tan(inner)


def sinr(desired_power: float, interference_power: float, noise_power: float) -> float:
    """Linear signal-to-interference-plus-noise ratio P / (I + N)."""
    if desired_power < 0:
        raise DomainError(f"signal power must be non-negative, got {desired_power}")
    if interference_power < 0:
        raise DomainError(f"interference power must be non-negative, got {interference_power}")
    if not noise_power > 0:
        raise DomainError(f"noise power must be positive, got {noise_power}")
    return desired_power / (interference_power + noise_power)


def spectral_efficiency(sinr_linear: float) -> float:
    """Shannon rate per unit bandwidth, log2(1 + SINR), bps/Hz."""
    if sinr_linear < 0:
        raise DomainError(f"SINR must be non-negative, got {sinr_linear}")
    return math.log2(1.0 + sinr_linear)


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    # counter-based generator keyed on (seed, trial): per-trial substreams
    # that do not depend on evaluation order
    return np.random.Generator(np.random.Philox(key=(seed << 64) | trial))


def draw_interferer_angles(scenario: SinrScenario) -> np.ndarray:
    """All interferer angle draws, shape (trials, interferers), degrees.

    Trial t takes its draws from an independent substream, so extending the
    interferer count extends each trial's draws without reshuffling them.
    """
    lo, hi = scenario.angle_range_deg
    angles = np.empty((scenario.trials, scenario.interferers))
    for t in range(scenario.trials):
        angles[t] = _trial_rng(scenario.seed, t).uniform(lo, hi, scenario.interferers)
    return angles


def monte_carlo_link(
    layout: ArrayLayout,
    scenario: SinrScenario,
    keep_trials: bool = False,
    gain_fn: Callable[[np.ndarray], np.ndarray] | None = None,
) -> LinkStats:
    """Run the seeded interference experiment and summarize SINR and SE.

    Per trial: draw the interferer angles, sum their normalized pattern gains
    into the interference power, add the noise floor 10**(-snr_db/10), and
    form SINR_t = 1 / (I_t + N) and SE_t = log2(1 + SINR_t). Results are
    bit-reproducible for a fixed (seed, scenario, layout).

    gain_fn overrides the pattern-based interferer gain lookup (angles ->
    linear gains); it exists for stubbing and for plugging in measured
    patterns.
    """
    angles = draw_interferer_angles(scenario)
    flat = angles.ravel()

    if gain_fn is None:
        steering = scenario.desired

        def gain_fn(a: np.ndarray) -> np.ndarray:
            if scenario.plane == ELEVATION:
                return normalized_gain(layout, steering, a, steering.phi_deg)
            return normalized_gain(layout, steering, steering.theta_deg, a)

    gains = np.concatenate(
        [np.asarray(gain_fn(flat[lo : lo + _BLOCK]), dtype=float) for lo in range(0, flat.size, _BLOCK)]
    )
    interference = gains.reshape(angles.shape).sum(axis=1)

    noise = 10.0 ** (-scenario.snr_db / 10.0)
    sinr_series = 1.0 / (interference + noise)
    se_series = np.log2(1.0 + sinr_series)

    mean_sinr = float(sinr_series.mean())
    return LinkStats(
        mean_sinr_db=10.0 * math.log10(mean_sinr),
        mean_se=float(se_series.mean()),
        se_of_mean_sinr=float(np.log2(1.0 + mean_sinr)),
        trials=scenario.trials,
        sinr_series=sinr_series if keep_trials else None,
    )
