"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import cmath
import math
from pathlib import Path

import pytest

from beamkit import RpaSpec, SteeringTarget, UccaSpec, build_rpa, build_ucca
from beamkit.runner import reproduce_paper


@pytest.fixture(scope="session")
def steering() -> SteeringTarget:
    return SteeringTarget(30.0, 60.0)


@pytest.fixture(scope="session")
def rpa_layout():
    return build_rpa(RpaSpec(10, 10, 0.5, 0.5))


@pytest.fixture(scope="session")
def ucca2_layout():
    return build_ucca(UccaSpec(5, 2.0))


@pytest.fixture(scope="session")
def ucca3_layout():
    return build_ucca(UccaSpec(5, 3.0))


@pytest.fixture(scope="session")
def paper_run(tmp_path_factory):
    """One full reproduction run shared by every test that inspects it."""
    out = tmp_path_factory.mktemp("reproduction")
    report, summary_path = reproduce_paper(out)
    return report, Path(out), summary_path


def brute_force_ring_count(ring_index: int) -> int:
    """Smallest element count whose arc spacing stays at or below the ring
    step: counts up until n >= 2*pi*i, no ceil call involved."""
    n = 0
    while n < 2.0 * math.pi * ring_index:
        n += 1
    return n


def ring_form_factor(
    rings: int,
    spacing_wl: float,
    steering: SteeringTarget,
    theta_deg: float,
    phi_deg: float,
    include_center: bool = True,
) -> complex:
    """Per-ring cosine-form field sum, evaluated element by element with the
    scalar math library; independent of the vectorized position-space path."""
    th = math.radians(theta_deg)
    ph = math.radians(phi_deg)
    th0 = math.radians(steering.theta_deg)
    ph0 = math.radians(steering.phi_deg)
    total = 1.0 + 0.0j if include_center else 0.0 + 0.0j
    for i in range(1, rings + 1):
        n_i = brute_force_ring_count(i)
        radius = i * spacing_wl
        for j in range(n_i):
            phi_ij = 2.0 * math.pi * j / n_i
            f_ij = math.sin(th) * math.cos(ph - phi_ij) - math.sin(th0) * math.cos(ph0 - phi_ij)
            total += cmath.exp(1j * 2.0 * math.pi * radius * f_ij)
    return total


def rpa_scalar_factor(
    nx: int,
    ny: int,
    dx_wl: float,
    dy_wl: float,
    steering: SteeringTarget,
    theta_deg: float,
    phi_deg: float,
) -> complex:
    """Double-loop grid-form field sum with the scalar math library."""
    th = math.radians(theta_deg)
    ph = math.radians(phi_deg)
    th0 = math.radians(steering.theta_deg)
    ph0 = math.radians(steering.phi_deg)
    h = dx_wl * (math.sin(th) * math.cos(ph) - math.sin(th0) * math.cos(ph0))
    g = dy_wl * (math.sin(th) * math.sin(ph) - math.sin(th0) * math.sin(ph0))
    total = 0.0 + 0.0j
    for m in range(nx):
        for n in range(ny):
            total += cmath.exp(1j * 2.0 * math.pi * (m * h + n * g))
    return total


def small_config_dict(out_dir: str) -> dict:
    """A cheap but complete config exercising every section."""
    return {
        "schema": 1,
        "frequency_hz": 28e9,
        "arrays": [
            {"name": "grid", "kind": "rpa", "nx": 6, "ny": 6, "dx_wl": 0.5, "dy_wl": 0.5},
            {"name": "ring", "kind": "ucca", "rings": 2, "spacing_wl": 1.0, "include_center": True},
        ],
        "steering": {"theta_deg": 30.0, "phi_deg": 60.0},
        "output_dir": out_dir,
        "cut_step_deg": 0.05,
        "theta_range_deg": [0.0, 90.0],
        "phi_range_deg": [0.0, 360.0],
        "cell": {"ranges_m": [10.0, 20.0, 30.0], "height_m": 10.0},
        "montecarlo": {
            "interferers": 2,
            "snr_db": 10.0,
            "trials": 25,
            "seed": 7,
            "planes": ["elevation", "azimuth"],
            "angle_range_deg": [0.0, 90.0],
        },
        "ucca_sweep": {"rings": 2, "spacings_wl": [0.5, 1.0], "include_center": True},
    }
