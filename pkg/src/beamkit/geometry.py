"""Element layouts for concentric-ring (UCCA) and rectangular planar (RPA) arrays.

Positions are stored in wavelength units; physical meters only enter when a
layout is paired with a carrier (aperture area, separation distances).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ValidationError

SPEED_OF_LIGHT_M_S = 299_792_458.0

UCCA = "ucca"
RPA = "rpa"
CUSTOM = "custom"


@dataclass(frozen=True)
class CarrierSpec:
    """Carrier frequency; the wavelength everything else is scaled by."""

    frequency_hz: float

    def __post_init__(self):
        if not self.frequency_hz > 0:
            raise ValidationError(f"carrier frequency must be positive, got {self.frequency_hz}")

    @property
    def wavelength_m(self) -> float:
        return SPEED_OF_LIGHT_M_S / self.frequency_hz


@dataclass(frozen=True)
class UccaSpec:
    """Concentric-ring array specification.

    Ring i (1-based) sits at radius ``i * spacing_wl`` and is populated with
    enough equally spaced elements that the arc spacing does not exceed
    ``spacing_wl``; the inter-ring step and the target arc spacing are the
    same number by construction. An optional center element sits at the
    origin.
    """

    rings: int
    spacing_wl: float
    include_center: bool = True

    def __post_init__(self):
        if not (isinstance(self.rings, int) and self.rings >= 1):
            raise ValidationError(f"ring count must be a positive integer, got {self.rings!r}")
        if not self.spacing_wl > 0:
            raise ValidationError(f"element spacing must be positive, got {self.spacing_wl}")


@dataclass(frozen=True)
class RpaSpec:
    """Rectangular planar array: an nx-by-ny grid with per-axis spacings."""

    nx: int
    ny: int
    dx_wl: float
    dy_wl: float

    def __post_init__(self):
        if not (isinstance(self.nx, int) and self.nx >= 1):
            raise ValidationError(f"nx must be a positive integer, got {self.nx!r}")
        if not (isinstance(self.ny, int) and self.ny >= 1):
            raise ValidationError(f"ny must be a positive integer, got {self.ny!r}")
        if not self.dx_wl > 0:
            raise ValidationError(f"dx_wl must be positive, got {self.dx_wl}")
        if not self.dy_wl > 0:
            raise ValidationError(f"dy_wl must be positive, got {self.dy_wl}")


@dataclass(frozen=True)
class ArrayLayout:
    """Explicit planar element positions (wavelengths) with complex weights.

    Immutable after construction; the position and weight arrays are marked
    read-only so layouts can be shared freely across threads.
    """

    kind: str
    positions_wl: np.ndarray  # shape (n, 2)
    weights: np.ndarray  # shape (n,), complex
    source: UccaSpec | RpaSpec | None = None

    def __post_init__(self):
        pos = np.asarray(self.positions_wl, dtype=float)
        w = np.asarray(self.weights, dtype=complex)
        if pos.ndim != 2 or pos.shape[1] != 2:
            raise ValidationError(f"positions must have shape (n, 2), got {pos.shape}")
        if w.shape != (pos.shape[0],):
            raise ValidationError("positions and weights must pair one to one")
        pos.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "positions_wl", pos)
        object.__setattr__(self, "weights", w)

    @property
    def element_count(self) -> int:
        return self.weights.size

    @property
    def x_wl(self) -> np.ndarray:
        return self.positions_wl[:, 0]

    @property
    def y_wl(self) -> np.ndarray:
        return self.positions_wl[:, 1]


def ring_element_counts(rings: int) -> list[int]:
    """Elements per ring: the smallest count keeping arc spacing at or below
    the ring step, i.e. ceil(2*pi*i) for ring index i."""
    if rings < 1:
        raise ValidationError(f"ring count must be at least 1, got {rings}")
    return [math.ceil(2.0 * math.pi * i) for i in range(1, rings + 1)]


def build_ucca(spec: UccaSpec) -> ArrayLayout:
    """Construct a concentric-ring layout with uniform unit weights.

    Ring i carries ceil(2*pi*i) elements at azimuths 2*pi*(j-1)/N_i, so the
    arc spacing never exceeds the requested element spacing. For rings=5 this
    gives per-ring counts [7, 13, 19, 26, 32] and, with the center element,
    98 elements total.
    """
    parts = []
    if spec.include_center:
        parts.append(np.zeros((1, 2)))
    for i, n_i in enumerate(ring_element_counts(spec.rings), start=1):
        radius = i * spec.spacing_wl
        azimuths = 2.0 * np.pi * np.arange(n_i) / n_i
        parts.append(np.column_stack([radius * np.cos(azimuths), radius * np.sin(azimuths)]))
    positions = np.vstack(parts)
    return ArrayLayout(UCCA, positions, np.ones(len(positions), dtype=complex), spec)


def build_rpa(spec: RpaSpec) -> ArrayLayout:
    """Construct a rectangular grid layout with uniform unit weights.

    Element (m, n) sits at (m*dx_wl, n*dy_wl) for m in [0, nx), n in [0, ny).
    """
    mm, nn = np.meshgrid(np.arange(spec.nx), np.arange(spec.ny), indexing="ij")
    positions = np.column_stack([(mm * spec.dx_wl).ravel(), (nn * spec.dy_wl).ravel()])
    return ArrayLayout(RPA, positions.astype(float), np.ones(len(positions), dtype=complex), spec)


def aperture_area(layout: ArrayLayout, carrier: CarrierSpec) -> float:
    """Physical footprint in square meters.

    Ring arrays use the disc bounded by the outermost ring radius (no
    half-spacing pad); grid arrays use the bounding rectangle between the
    outermost elements. Area therefore scales with the square of the element
    spacing.
    """
    if layout.element_count == 0:
        raise DomainError("aperture area of an empty layout")
    lam = carrier.wavelength_m
    spec = layout.source
    if layout.kind == UCCA and isinstance(spec, UccaSpec):
        return math.pi * (spec.rings * spec.spacing_wl * lam) ** 2
    if layout.kind == RPA and isinstance(spec, RpaSpec):
        return ((spec.nx - 1) * spec.dx_wl * lam) * ((spec.ny - 1) * spec.dy_wl * lam)
    raise DomainError(f"aperture area is undefined for layout kind {layout.kind!r}")
