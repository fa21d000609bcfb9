"""Steered array factors and normalized power patterns.

The evaluator uses one position-space phase sum for every layout kind:
each element contributes w * exp(i*2*pi*(x*u + y*v)) with x, y in
wavelengths, u = sin(theta)cos(phi) - sin(theta0)cos(phi0) and
v = sin(theta)sin(phi) - sin(theta0)sin(phi0). For ring layouts this is
algebraically the same as the per-ring cosine form (kept as a test
oracle); for grid layouts it is the usual planar-array product form.

Angles are degrees at every interface, radians internally. Theta is
measured from the array normal (theta = 0 is boresight). Elements are
isotropic; only the array factor is modeled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ValidationError
from .geometry import ArrayLayout

ELEVATION = "elevation"
AZIMUTH = "azimuth"
PLANES = (ELEVATION, AZIMUTH)

DEFAULT_CUT_STEP_DEG = 0.01

# angle block size for chunked evaluation, keeps the (angles x elements)
# phase matrix from ballooning on fine cuts
_BLOCK = 16384


@dataclass(frozen=True)
class SteeringTarget:
    """Direction of the desired signal: elevation and azimuth in degrees."""

    theta_deg: float
    phi_deg: float

    def __post_init__(self):
        if not 0.0 <= self.theta_deg <= 90.0:
            raise ValidationError(f"steering theta must lie in [0, 90] deg, got {self.theta_deg}")
        if not 0.0 <= self.phi_deg < 360.0:
            raise ValidationError(f"steering phi must lie in [0, 360) deg, got {self.phi_deg}")


@dataclass(frozen=True)
class PatternCut:
    """One-dimensional normalized power cut through the steering direction.

    Elevation cuts vary theta at phi = phi0; azimuth cuts vary phi at
    theta = theta0. Power is in dB relative to the steering-direction gain,
    so the peak sample is 0 dB and everything else is at or below it.
    """

    plane: str
    angles_deg: np.ndarray
    power_db: np.ndarray
    steering: SteeringTarget

    def __post_init__(self):
        if self.plane not in PLANES:
            raise ValidationError(f"plane must be one of {PLANES}, got {self.plane!r}")
        angles = np.asarray(self.angles_deg, dtype=float)
        power = np.asarray(self.power_db, dtype=float)
        if angles.ndim != 1 or angles.shape != power.shape:
            raise ValidationError("angles and power must be 1-D arrays of equal length")
        angles.setflags(write=False)
        power.setflags(write=False)
        object.__setattr__(self, "angles_deg", angles)
        object.__setattr__(self, "power_db", power)

    @property
    def steering_angle_deg(self) -> float:
        return self.steering.theta_deg if self.plane == ELEVATION else self.steering.phi_deg


def array_factor(layout: ArrayLayout, steering: SteeringTarget, theta_deg, phi_deg):
    """Complex field sum over the elements, phase-aligned at the steering
    direction.

    theta_deg and phi_deg may be scalars or broadcastable arrays (degrees);
    the return is a complex scalar or an array of the broadcast shape. At the
    steering direction every per-element phase vanishes and the weights add
    coherently, so |F| equals the weight sum there.
    """
    if layout.element_count == 0:
        raise DomainError("array factor of an empty layout")
    th = np.radians(np.asarray(theta_deg, dtype=float))
    ph = np.radians(np.asarray(phi_deg, dtype=float))
    th0 = math.radians(steering.theta_deg)
    ph0 = math.radians(steering.phi_deg)
    u = np.sin(th) * np.cos(ph) - math.sin(th0) * math.cos(ph0)
    v = np.sin(th) * np.sin(ph) - math.sin(th0) * math.sin(ph0)
    phase = 2.0 * np.pi * (
        np.multiply.outer(u, layout.x_wl) + np.multiply.outer(v, layout.y_wl)
    )
    field = np.exp(1j * phase) @ layout.weights
    if field.ndim == 0:
        return complex(field)
    return field


def normalized_gain(layout: ArrayLayout, steering: SteeringTarget, theta_deg, phi_deg):
    """Linear power pattern |F(theta,phi)|^2 / |F(theta0,phi0)|^2."""
    ref = abs(array_factor(layout, steering, steering.theta_deg, steering.phi_deg)) ** 2
    if ref == 0.0:
        raise DomainError("zero gain toward the steering direction (degenerate weighting)")
    f = array_factor(layout, steering, theta_deg, phi_deg)
    return np.abs(f) ** 2 / ref


def normalized_power(layout: ArrayLayout, steering: SteeringTarget, theta_deg, phi_deg):
    """Power pattern in dB relative to the steering-direction gain.

    0 dB at the steering direction; pattern nulls come out as -inf.
    """
    g = normalized_gain(layout, steering, theta_deg, phi_deg)
    with np.errstate(divide="ignore"):
        p = 10.0 * np.log10(g)
    if np.ndim(p) == 0:
        return float(p)
    return p


def sample_cut(
    layout: ArrayLayout,
    steering: SteeringTarget,
    plane: str,
    start_deg: float,
    stop_deg: float,
    step_deg: float = DEFAULT_CUT_STEP_DEG,
) -> PatternCut:
    """Sample the normalized pattern along one principal cut.

    The sample grid is anchored at the steering angle of the chosen plane, so
    the mainlobe peak is hit exactly; the off-plane coordinate stays fixed at
    the steering value. The range must contain the steering angle.
    """
    if plane not in PLANES:
        raise ValidationError(f"plane must be one of {PLANES}, got {plane!r}")
    if not step_deg > 0:
        raise ValidationError(f"cut step must be positive, got {step_deg}")
    if not stop_deg > start_deg:
        raise ValidationError(f"empty cut range [{start_deg}, {stop_deg}]")
    anchor = steering.theta_deg if plane == ELEVATION else steering.phi_deg
    if not start_deg <= anchor <= stop_deg:
        raise ValidationError(
            f"cut range [{start_deg}, {stop_deg}] deg excludes the steering angle {anchor} deg"
        )
    # integer offsets from the anchor; the small slack absorbs division rounding
    n_lo = math.ceil((start_deg - anchor) / step_deg - 1e-9)
    n_hi = math.floor((stop_deg - anchor) / step_deg + 1e-9)
    angles = anchor + step_deg * np.arange(n_lo, n_hi + 1)
    # boundary samples may drift off the range edge by rounding; snap them back
    if abs(angles[0] - start_deg) < 1e-6 * step_deg:
        angles[0] = start_deg
    if abs(angles[-1] - stop_deg) < 1e-6 * step_deg:
        angles[-1] = stop_deg

    blocks = []
    for lo in range(0, angles.size, _BLOCK):
        block = angles[lo : lo + _BLOCK]
        if plane == ELEVATION:
            blocks.append(normalized_power(layout, steering, block, steering.phi_deg))
        else:
            blocks.append(normalized_power(layout, steering, steering.theta_deg, block))
    power = np.concatenate(blocks)
    return PatternCut(plane, angles, power, steering)
