"""JSON scenario configs: parsing, validation, canonical serialization."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ValidationError
from .geometry import RPA, UCCA, RpaSpec, UccaSpec
from .link import SinrScenario
from .pattern import DEFAULT_CUT_STEP_DEG, PLANES, SteeringTarget

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class ArrayEntry:
    name: str
    spec: UccaSpec | RpaSpec

    def __post_init__(self):
        if not self.name or not isinstance(self.name, str):
            raise ValidationError(f"array name must be a non-empty string, got {self.name!r}")

    @property
    def kind(self) -> str:
        return UCCA if isinstance(self.spec, UccaSpec) else RPA


@dataclass(frozen=True)
class CellSweep:
    """Cell ranges (meters) to tabulate separations over, plus antenna height."""

    ranges_m: tuple[float, ...]
    height_m: float

    def __post_init__(self):
        if not self.ranges_m:
            raise ValidationError("cell sweep needs at least one range")
        if any(r <= 0 for r in self.ranges_m):
            raise ValidationError("cell ranges must be positive")
        if not self.height_m > 0:
            raise ValidationError(f"antenna height must be positive, got {self.height_m}")


@dataclass(frozen=True)
class MonteCarloConfig:
    interferers: int
    snr_db: float
    trials: int
    seed: int
    planes: tuple[str, ...]
    angle_range_deg: tuple[float, float]

    def __post_init__(self):
        if not self.planes:
            raise ValidationError("montecarlo needs at least one plane")
        if any(p not in PLANES for p in self.planes):
            raise ValidationError(f"montecarlo planes must be among {PLANES}, got {self.planes}")
        if len(set(self.planes)) != len(self.planes):
            raise ValidationError("montecarlo planes must be unique")


@dataclass(frozen=True)
class UccaSweepConfig:
    """Spacing sweep for ring arrays (beamwidth and area versus spacing)."""

    rings: int
    spacings_wl: tuple[float, ...]
    include_center: bool = True


@dataclass(frozen=True)
class ScenarioConfig:
    frequency_hz: float
    arrays: tuple[ArrayEntry, ...]
    steering: SteeringTarget
    output_dir: str
    cut_step_deg: float = DEFAULT_CUT_STEP_DEG
    theta_range_deg: tuple[float, float] = (0.0, 90.0)
    phi_range_deg: tuple[float, float] = (0.0, 360.0)
    cell: CellSweep | None = None
    montecarlo: MonteCarloConfig | None = None
    ucca_sweep: UccaSweepConfig | None = None

    def __post_init__(self):
        if not self.frequency_hz > 0:
            raise ValidationError(f"frequency must be positive, got {self.frequency_hz}")
        if not self.arrays:
            raise ValidationError("config must name at least one array")
        names = [a.name for a in self.arrays]
        if len(set(names)) != len(names):
            raise ValidationError(f"array names must be unique, got {names}")
        if not self.cut_step_deg > 0:
            raise ValidationError(f"cut step must be positive, got {self.cut_step_deg}")
        for label, (lo, hi) in (("theta", self.theta_range_deg), ("phi", self.phi_range_deg)):
            if not lo < hi:
                raise ValidationError(f"empty {label} cut range [{lo}, {hi}]")
        if not self.output_dir:
            raise ValidationError("output_dir must be set")
        # surface every module precondition now, before anything runs
        if self.montecarlo is not None:
            for plane in self.montecarlo.planes:
                SinrScenario(
                    interferers=self.montecarlo.interferers,
                    snr_db=self.montecarlo.snr_db,
                    trials=self.montecarlo.trials,
                    seed=self.montecarlo.seed,
                    plane=plane,
                    angle_range_deg=self.montecarlo.angle_range_deg,
                    desired=self.steering,
                )


def _require(d: dict, key: str, where: str):
    if key not in d:
        raise ValidationError(f"missing key {key!r} in {where}")
    return d[key]


def _check_keys(d: dict, allowed: set[str], where: str):
    unknown = set(d) - allowed
    if unknown:
        raise ValidationError(f"unknown keys {sorted(unknown)} in {where}")


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{where} must be an integer, got {value!r}")
    return value


def _float(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{where} must be a number, got {value!r}")
    return float(value)


def _pair(value, where: str) -> tuple[float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ValidationError(f"{where} must be a [low, high] pair, got {value!r}")
    return (_float(value[0], where), _float(value[1], where))


def _array_entry(d: dict, index: int) -> ArrayEntry:
    where = f"arrays[{index}]"
    if not isinstance(d, dict):
        raise ValidationError(f"{where} must be an object")
    name = _require(d, "name", where)
    kind = _require(d, "kind", where)
    if kind == UCCA:
        _check_keys(d, {"name", "kind", "rings", "spacing_wl", "include_center"}, where)
        spec = UccaSpec(
            rings=_int(_require(d, "rings", where), f"{where}.rings"),
            spacing_wl=_float(_require(d, "spacing_wl", where), f"{where}.spacing_wl"),
            include_center=bool(d.get("include_center", True)),
        )
    elif kind == RPA:
        _check_keys(d, {"name", "kind", "nx", "ny", "dx_wl", "dy_wl"}, where)
        spec = RpaSpec(
            nx=_int(_require(d, "nx", where), f"{where}.nx"),
            ny=_int(_require(d, "ny", where), f"{where}.ny"),
            dx_wl=_float(_require(d, "dx_wl", where), f"{where}.dx_wl"),
            dy_wl=_float(_require(d, "dy_wl", where), f"{where}.dy_wl"),
        )
    else:
        raise ValidationError(f"{where}.kind must be {UCCA!r} or {RPA!r}, got {kind!r}")
    return ArrayEntry(name=name, spec=spec)


def config_from_dict(d: dict) -> ScenarioConfig:
    """Validate a parsed JSON object and build the config; raises
    ValidationError on any structural or domain problem."""
    if not isinstance(d, dict):
        raise ValidationError("config root must be a JSON object")
    schema = d.get("schema")
    if schema != SCHEMA_VERSION:
        raise ValidationError(f"config schema must be {SCHEMA_VERSION}, got {schema!r}")
    _check_keys(
        d,
        {
            "schema",
            "frequency_hz",
            "arrays",
            "steering",
            "output_dir",
            "cut_step_deg",
            "theta_range_deg",
            "phi_range_deg",
            "cell",
            "montecarlo",
            "ucca_sweep",
        },
        "config",
    )

    arrays_raw = _require(d, "arrays", "config")
    if not isinstance(arrays_raw, list):
        raise ValidationError("config.arrays must be a list")
    arrays = tuple(_array_entry(a, i) for i, a in enumerate(arrays_raw))

    steering_raw = _require(d, "steering", "config")
    _check_keys(steering_raw, {"theta_deg", "phi_deg"}, "config.steering")
    steering = SteeringTarget(
        theta_deg=_float(_require(steering_raw, "theta_deg", "config.steering"), "steering.theta_deg"),
        phi_deg=_float(_require(steering_raw, "phi_deg", "config.steering"), "steering.phi_deg"),
    )

    cell = None
    if d.get("cell") is not None:
        cell_raw = d["cell"]
        _check_keys(cell_raw, {"ranges_m", "height_m"}, "config.cell")
        ranges = _require(cell_raw, "ranges_m", "config.cell")
        if not isinstance(ranges, list) or not ranges:
            raise ValidationError("config.cell.ranges_m must be a non-empty list")
        cell = CellSweep(
            ranges_m=tuple(_float(r, "cell.ranges_m") for r in ranges),
            height_m=_float(_require(cell_raw, "height_m", "config.cell"), "cell.height_m"),
        )

    montecarlo = None
    if d.get("montecarlo") is not None:
        mc = d["montecarlo"]
        _check_keys(
            mc,
            {"interferers", "snr_db", "trials", "seed", "planes", "angle_range_deg"},
            "config.montecarlo",
        )
        planes = _require(mc, "planes", "config.montecarlo")
        if not isinstance(planes, list):
            raise ValidationError("config.montecarlo.planes must be a list")
        montecarlo = MonteCarloConfig(
            interferers=_int(_require(mc, "interferers", "config.montecarlo"), "montecarlo.interferers"),
            snr_db=_float(_require(mc, "snr_db", "config.montecarlo"), "montecarlo.snr_db"),
            trials=_int(_require(mc, "trials", "config.montecarlo"), "montecarlo.trials"),
            seed=_int(_require(mc, "seed", "config.montecarlo"), "montecarlo.seed"),
            planes=tuple(planes),
            angle_range_deg=_pair(_require(mc, "angle_range_deg", "config.montecarlo"), "montecarlo.angle_range_deg"),
        )

    ucca_sweep = None
    if d.get("ucca_sweep") is not None:
        sw = d["ucca_sweep"]
        _check_keys(sw, {"rings", "spacings_wl", "include_center"}, "config.ucca_sweep")
        spacings = _require(sw, "spacings_wl", "config.ucca_sweep")
        if not isinstance(spacings, list) or not spacings:
            raise ValidationError("config.ucca_sweep.spacings_wl must be a non-empty list")
        ucca_sweep = UccaSweepConfig(
            rings=_int(_require(sw, "rings", "config.ucca_sweep"), "ucca_sweep.rings"),
            spacings_wl=tuple(_float(s, "ucca_sweep.spacings_wl") for s in spacings),
            include_center=bool(sw.get("include_center", True)),
        )

    return ScenarioConfig(
        frequency_hz=_float(_require(d, "frequency_hz", "config"), "config.frequency_hz"),
        arrays=arrays,
        steering=steering,
        output_dir=str(_require(d, "output_dir", "config")),
        cut_step_deg=_float(d.get("cut_step_deg", DEFAULT_CUT_STEP_DEG), "config.cut_step_deg"),
        theta_range_deg=_pair(d.get("theta_range_deg", [0.0, 90.0]), "config.theta_range_deg"),
        phi_range_deg=_pair(d.get("phi_range_deg", [0.0, 360.0]), "config.phi_range_deg"),
        cell=cell,
        montecarlo=montecarlo,
        ucca_sweep=ucca_sweep,
    )


def config_to_dict(config: ScenarioConfig) -> dict:
    """Serialize back to the JSON shape accepted by config_from_dict."""
    arrays = []
    for entry in config.arrays:
        if isinstance(entry.spec, UccaSpec):
            arrays.append(
                {
                    "name": entry.name,
                    "kind": UCCA,
                    "rings": entry.spec.rings,
                    "spacing_wl": entry.spec.spacing_wl,
                    "include_center": entry.spec.include_center,
                }
            )
        else:
            arrays.append(
                {
                    "name": entry.name,
                    "kind": RPA,
                    "nx": entry.spec.nx,
                    "ny": entry.spec.ny,
                    "dx_wl": entry.spec.dx_wl,
                    "dy_wl": entry.spec.dy_wl,
                }
            )
    out = {
        "schema": SCHEMA_VERSION,
        "frequency_hz": config.frequency_hz,
        "arrays": arrays,
        "steering": {
            "theta_deg": config.steering.theta_deg,
            "phi_deg": config.steering.phi_deg,
        },
        "output_dir": config.output_dir,
        "cut_step_deg": config.cut_step_deg,
        "theta_range_deg": list(config.theta_range_deg),
        "phi_range_deg": list(config.phi_range_deg),
        "cell": None,
        "montecarlo": None,
        "ucca_sweep": None,
    }
    if config.cell is not None:
        out["cell"] = {
            "ranges_m": list(config.cell.ranges_m),
            "height_m": config.cell.height_m,
        }
    if config.montecarlo is not None:
        mc = config.montecarlo
        out["montecarlo"] = {
            "interferers": mc.interferers,
            "snr_db": mc.snr_db,
            "trials": mc.trials,
            "seed": mc.seed,
            "planes": list(mc.planes),
            "angle_range_deg": list(mc.angle_range_deg),
        }
    if config.ucca_sweep is not None:
        sw = config.ucca_sweep
        out["ucca_sweep"] = {
            "rings": sw.rings,
            "spacings_wl": list(sw.spacings_wl),
            "include_center": sw.include_center,
        }
    return out


def load_config(path: str | Path) -> ScenarioConfig:
    """Read and validate a JSON config file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read config {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config {path} is not valid JSON: {exc}") from exc
    return config_from_dict(data)


def config_digest(config: ScenarioConfig) -> str:
    """SHA-256 of the canonical serialization; changes iff any field does."""
    canonical = json.dumps(config_to_dict(config), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
