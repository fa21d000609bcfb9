"""Beam pattern analysis and 5G system metrics for concentric-ring (UCCA)
and rectangular planar (RPA) antenna arrays."""

__version__ = "0.1.0"

from .errors import AnalysisError, DomainError, ValidationError
from .geometry import (
    SPEED_OF_LIGHT_M_S,
    ArrayLayout,
    CarrierSpec,
    RpaSpec,
    UccaSpec,
    aperture_area,
    build_rpa,
    build_ucca,
    ring_element_counts,
)
from .pattern import (
    AZIMUTH,
    ELEVATION,
    PatternCut,
    SteeringTarget,
    array_factor,
    normalized_gain,
    normalized_power,
    sample_cut,
)
from .analysis import (
    HpbwResult,
    SllResult,
    beam_packing_gain,
    hpbw_sweep,
    measure_hpbw,
    measure_layout,
    measure_max_sll,
    principal_cuts,
)
from .link import (
    CellGeometry,
    LinkStats,
    SinrScenario,
    azimuthal_separation,
    draw_interferer_angles,
    elevation_separation,
    monte_carlo_link,
    sinr,
    spectral_efficiency,
)

__all__ = [
    "__version__",
    "AnalysisError",
    "DomainError",
    "ValidationError",
    "SPEED_OF_LIGHT_M_S",
    "ArrayLayout",
    "CarrierSpec",
    "RpaSpec",
    "UccaSpec",
    "aperture_area",
    "build_rpa",
    "build_ucca",
    "ring_element_counts",
    "AZIMUTH",
    "ELEVATION",
    "PatternCut",
    "SteeringTarget",
    "array_factor",
    "normalized_gain",
    "normalized_power",
    "sample_cut",
    "HpbwResult",
    "SllResult",
    "beam_packing_gain",
    "hpbw_sweep",
    "measure_hpbw",
    "measure_layout",
    "measure_max_sll",
    "principal_cuts",
    "CellGeometry",
    "LinkStats",
    "SinrScenario",
    "azimuthal_separation",
    "draw_interferer_angles",
    "elevation_separation",
    "monte_carlo_link",
    "sinr",
    "spectral_efficiency",
]
