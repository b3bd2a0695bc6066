"""Scenario files: the JSON configuration consumed by every CLI command.

A scenario is a flat two-level JSON object with sections ``transmitter``,
``geometry``, ``thresholds``, ``green`` and ``sweeps`` plus an
``output_dir``. Only transmitter.power_w and transmitter.freq_mhz are
required; everything else takes documented defaults. Validation collects
every violated field before failing, so one load attempt reports all
problems at once.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .emissions import (
    DEFAULT_DIESEL_KG_CO2_PER_LITER,
    DEFAULT_DIESEL_LITERS_PER_HOUR,
    DEFAULT_GRID_KG_CO2_PER_KWH,
    HOURS_PER_YEAR,
    PowerSourceProfile,
    SourceKind,
)
from .exposure import DEFAULT_NUM_STEPS, ZoneThresholds, default_thresholds
from .propagation import LinkGeometry, TransmitterConfig


class ScenarioError(ValueError):
    """Base for scenario load failures."""


class ScenarioParseError(ScenarioError):
    """The file is not valid JSON; the message carries the line number."""


class ScenarioValidationError(ScenarioError):
    """One or more fields violate their constraints; all are listed."""

    def __init__(self, problems: list[str]):
        self.problems = tuple(problems)
        super().__init__("invalid scenario:\n  " + "\n  ".join(problems))


@dataclass(frozen=True)
class SweepRange:
    """Inclusive sweep bounds and the number of uniform samples."""

    min: float
    max: float
    steps: int = DEFAULT_NUM_STEPS


@dataclass(frozen=True)
class Scenario:
    """A fully validated, fully defaulted simulation configuration."""

    transmitter: TransmitterConfig
    geometry: LinkGeometry
    thresholds: ZoneThresholds
    green_terrestrial: PowerSourceProfile
    green_balloon: PowerSourceProfile
    hours_per_year: float
    ground_offset_sweep: SweepRange
    altitude_sweep: SweepRange
    range_sweep: SweepRange
    table_distances_m: tuple[float, ...]
    output_dir: str
    notes: tuple[str, ...] = ()


def default_scenario_path() -> Path:
    """Path of the bundled default scenario (20 W at linear gain 50, 900 MHz)."""
    return Path(str(resources.files("balloonlink") / "data" / "default_scenario.json"))


def load_scenario(path: str | Path) -> Scenario:
    """Read, parse and validate a scenario file.

    Raises OSError if the file cannot be read, ScenarioParseError for
    malformed JSON and ScenarioValidationError (listing every violation)
    for constraint failures.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return scenario_from_dict(raw)


_TOP_LEVEL_KEYS = {"transmitter", "geometry", "thresholds", "green", "sweeps", "output_dir"}
_TRANSMITTER_KEYS = {"power_w", "gain_db", "gain_linear", "freq_mhz", "antenna_dim_m"}
_GEOMETRY_KEYS = {
    "altitude_m",
    "ground_offset_m",
    "bs_antenna_height_m",
    "rx_antenna_height_m",
    "rx_gain_db",
}
_THRESHOLD_KEYS = {"limit_w_m2", "caution_fraction"}
_GREEN_KEYS = {"hours_per_year", "terrestrial", "balloon"}
_PROFILE_KEYS = {
    "source_kind",
    "fuel_liters_per_hour",
    "emission_factor_kg_per_liter",
    "grid_kwh_per_hour",
    "grid_emission_kg_per_kwh",
}
_SWEEP_KEYS = {"ground_offset", "altitude", "range", "distances_m"}
_SWEEP_RANGE_KEYS = {"min", "max", "steps"}

# Per-kind profile defaults; fields not listed default to 0.
_PROFILE_DEFAULTS = {
    SourceKind.DIESEL: {
        "fuel_liters_per_hour": DEFAULT_DIESEL_LITERS_PER_HOUR,
        "emission_factor_kg_per_liter": DEFAULT_DIESEL_KG_CO2_PER_LITER,
    },
    SourceKind.SOLAR: {},
    SourceKind.GRID: {"grid_emission_kg_per_kwh": DEFAULT_GRID_KG_CO2_PER_KWH},
}


def _section(raw: dict, name: str, known: set[str], problems: list[str]) -> dict:
    value = raw.get(name)
    if value is None:
        return {}
    if not isinstance(value, dict):
        problems.append(f"{name} must be a JSON object")
        return {}
    for key in value:
        if key not in known:
            problems.append(f"unknown key '{key}' in {name}")
    return value


def _number(
    section: dict,
    qualified: str,
    key: str,
    problems: list[str],
    default: float | None = None,
    required: bool = False,
) -> float | None:
    if key not in section:
        if required:
            problems.append(f"{qualified}.{key} is required")
        return default
    value = section[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        problems.append(f"{qualified}.{key} must be a number")
        return default
    if not math.isfinite(float(value)):
        problems.append(f"{qualified}.{key} must be finite")
        return default
    return float(value)


def _constrain(
    value: float | None,
    qualified: str,
    problems: list[str],
    gt: float | None = None,
    ge: float | None = None,
    lt: float | None = None,
) -> float | None:
    if value is None:
        return None
    if gt is not None and not value > gt:
        problems.append(f"{qualified} must be > {gt:g}")
        return None
    if ge is not None and not value >= ge:
        problems.append(f"{qualified} must be >= {ge:g}")
        return None
    if lt is not None and not value < lt:
        problems.append(f"{qualified} must be < {lt:g}")
        return None
    return value


def _profile(
    section: dict,
    qualified: str,
    default_kind: SourceKind,
    problems: list[str],
) -> PowerSourceProfile | None:
    for key in section:
        if key not in _PROFILE_KEYS:
            problems.append(f"unknown key '{key}' in {qualified}")
    kind = default_kind
    if "source_kind" in section:
        raw_kind = section["source_kind"]
        if isinstance(raw_kind, str) and raw_kind.upper() in SourceKind.__members__:
            kind = SourceKind[raw_kind.upper()]
        else:
            problems.append(
                f"{qualified}.source_kind must be one of DIESEL, SOLAR, GRID"
            )
            return None
    defaults = _PROFILE_DEFAULTS[kind]
    fields = {}
    for key in (
        "fuel_liters_per_hour",
        "emission_factor_kg_per_liter",
        "grid_kwh_per_hour",
        "grid_emission_kg_per_kwh",
    ):
        fields[key] = _constrain(
            _number(section, qualified, key, problems, default=defaults.get(key, 0.0)),
            f"{qualified}.{key}",
            problems,
            ge=0.0,
        )
    if any(v is None for v in fields.values()):
        return None
    try:
        return PowerSourceProfile(source_kind=kind, **fields)
    except ValueError as exc:
        problems.append(f"{qualified}: {exc}")
        return None


def _sweep_range(
    section: dict,
    qualified: str,
    defaults: tuple[float, float, int],
    problems: list[str],
    min_exclusive: bool,
) -> SweepRange | None:
    for key in section:
        if key not in _SWEEP_RANGE_KEYS:
            problems.append(f"unknown key '{key}' in {qualified}")
    lo = _number(section, qualified, "min", problems, default=defaults[0])
    hi = _number(section, qualified, "max", problems, default=defaults[1])
    steps = _number(section, qualified, "steps", problems, default=float(defaults[2]))
    if lo is None or hi is None or steps is None:
        return None
    if min_exclusive:
        lo = _constrain(lo, f"{qualified}.min", problems, gt=0.0)
    else:
        lo = _constrain(lo, f"{qualified}.min", problems, ge=0.0)
    if steps != int(steps) or int(steps) < 2:
        problems.append(f"{qualified}.steps must be an integer >= 2")
        return None
    if lo is None:
        return None
    if not hi > lo:
        problems.append(f"{qualified}.max must be > {qualified}.min")
        return None
    return SweepRange(min=lo, max=hi, steps=int(steps))


def scenario_from_dict(raw: dict) -> Scenario:
    """Validate a parsed scenario object and apply defaults."""
    problems: list[str] = []
    if not isinstance(raw, dict):
        raise ScenarioValidationError(["scenario root must be a JSON object"])
    for key in raw:
        if key not in _TOP_LEVEL_KEYS:
            problems.append(f"unknown top-level key '{key}'")

    tx_raw = _section(raw, "transmitter", _TRANSMITTER_KEYS, problems)
    power_w = _constrain(
        _number(tx_raw, "transmitter", "power_w", problems, required=True),
        "transmitter.power_w",
        problems,
        gt=0.0,
    )
    gain_db = _number(tx_raw, "transmitter", "gain_db", problems, default=17.0)
    gain_linear = _constrain(
        _number(tx_raw, "transmitter", "gain_linear", problems),
        "transmitter.gain_linear",
        problems,
        gt=0.0,
    )
    freq_mhz = _constrain(
        _number(tx_raw, "transmitter", "freq_mhz", problems, required=True),
        "transmitter.freq_mhz",
        problems,
        gt=0.0,
    )
    antenna_dim_m = _constrain(
        _number(tx_raw, "transmitter", "antenna_dim_m", problems, default=1.0),
        "transmitter.antenna_dim_m",
        problems,
        ge=0.0,
    )

    geom_raw = _section(raw, "geometry", _GEOMETRY_KEYS, problems)
    altitude_m = _constrain(
        _number(geom_raw, "geometry", "altitude_m", problems, default=150.0),
        "geometry.altitude_m",
        problems,
        ge=0.0,
    )
    ground_offset_m = _constrain(
        _number(geom_raw, "geometry", "ground_offset_m", problems, default=0.0),
        "geometry.ground_offset_m",
        problems,
        ge=0.0,
    )
    bs_antenna_height_m = _constrain(
        _number(geom_raw, "geometry", "bs_antenna_height_m", problems, default=200.0),
        "geometry.bs_antenna_height_m",
        problems,
        gt=0.0,
    )
    rx_antenna_height_m = _constrain(
        _number(geom_raw, "geometry", "rx_antenna_height_m", problems, default=1.5),
        "geometry.rx_antenna_height_m",
        problems,
        gt=0.0,
    )
    rx_gain_db = _number(geom_raw, "geometry", "rx_gain_db", problems, default=0.0)

    thr_raw = _section(raw, "thresholds", _THRESHOLD_KEYS, problems)
    if freq_mhz is not None:
        derived_limit = default_thresholds(freq_mhz).limit_w_m2
    else:
        derived_limit = 4.5
    limit_w_m2 = _constrain(
        _number(thr_raw, "thresholds", "limit_w_m2", problems, default=derived_limit),
        "thresholds.limit_w_m2",
        problems,
        gt=0.0,
    )
    caution_fraction = _number(
        thr_raw, "thresholds", "caution_fraction", problems, default=0.1
    )
    caution_fraction = _constrain(
        _constrain(caution_fraction, "thresholds.caution_fraction", problems, gt=0.0),
        "thresholds.caution_fraction",
        problems,
        lt=1.0,
    )

    green_raw = _section(raw, "green", _GREEN_KEYS, problems)
    hours_per_year = _constrain(
        _number(green_raw, "green", "hours_per_year", problems, default=HOURS_PER_YEAR),
        "green.hours_per_year",
        problems,
        gt=0.0,
    )
    terrestrial_raw = green_raw.get("terrestrial", {})
    balloon_raw = green_raw.get("balloon", {})
    if not isinstance(terrestrial_raw, dict):
        problems.append("green.terrestrial must be a JSON object")
        terrestrial_raw = {}
    if not isinstance(balloon_raw, dict):
        problems.append("green.balloon must be a JSON object")
        balloon_raw = {}
    green_terrestrial = _profile(
        terrestrial_raw, "green.terrestrial", SourceKind.DIESEL, problems
    )
    green_balloon = _profile(balloon_raw, "green.balloon", SourceKind.SOLAR, problems)

    sweeps_raw = _section(raw, "sweeps", _SWEEP_KEYS, problems)
    ground_raw = sweeps_raw.get("ground_offset", {})
    altitude_raw = sweeps_raw.get("altitude", {})
    range_raw = sweeps_raw.get("range", {})
    for name, value in (
        ("ground_offset", ground_raw),
        ("altitude", altitude_raw),
        ("range", range_raw),
    ):
        if not isinstance(value, dict):
            problems.append(f"sweeps.{name} must be a JSON object")
    if not isinstance(ground_raw, dict):
        ground_raw = {}
    if not isinstance(altitude_raw, dict):
        altitude_raw = {}
    if not isinstance(range_raw, dict):
        range_raw = {}
    ground_sweep = _sweep_range(
        ground_raw,
        "sweeps.ground_offset",
        (0.0, 25.0, DEFAULT_NUM_STEPS),
        problems,
        min_exclusive=False,
    )
    if ground_sweep is not None and ground_sweep.min != 0.0:
        problems.append("sweeps.ground_offset.min must be 0 (profile starts under the platform)")
        ground_sweep = None
    altitude_sweep = _sweep_range(
        altitude_raw,
        "sweeps.altitude",
        (200.0, 400.0, DEFAULT_NUM_STEPS),
        problems,
        min_exclusive=True,
    )
    range_sweep = _sweep_range(
        range_raw,
        "sweeps.range",
        (10.0, 500.0, DEFAULT_NUM_STEPS),
        problems,
        min_exclusive=True,
    )

    distances_raw = sweeps_raw.get("distances_m", [10.0, 100.0, 500.0])
    table_distances: list[float] = []
    if not isinstance(distances_raw, list):
        problems.append("sweeps.distances_m must be a list of numbers")
    elif not distances_raw:
        problems.append("sweeps.distances_m must not be empty")
    else:
        for i, value in enumerate(distances_raw):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                problems.append(f"sweeps.distances_m[{i}] must be a number")
            elif not float(value) > 0.0:
                problems.append(f"sweeps.distances_m[{i}] must be > 0")
            else:
                table_distances.append(float(value))

    output_dir = raw.get("output_dir", ".")
    if not isinstance(output_dir, str) or not output_dir:
        problems.append("output_dir must be a non-empty string")
        output_dir = "."

    if problems:
        raise ScenarioValidationError(problems)

    notes: list[str] = []
    if "gain_linear" in tx_raw and "gain_db" in tx_raw:
        notes.append(f"gain_linear={gain_linear:g} overrides gain_db={gain_db:g}")

    return Scenario(
        transmitter=TransmitterConfig(
            power_w=power_w,
            gain_db=gain_db,
            freq_mhz=freq_mhz,
            antenna_dim_m=antenna_dim_m,
            gain_linear=gain_linear,
        ),
        geometry=LinkGeometry(
            altitude_m=altitude_m,
            ground_offset_m=ground_offset_m,
            bs_antenna_height_m=bs_antenna_height_m,
            rx_antenna_height_m=rx_antenna_height_m,
            rx_gain_db=rx_gain_db,
        ),
        thresholds=ZoneThresholds(
            limit_w_m2=limit_w_m2, caution_fraction=caution_fraction
        ),
        green_terrestrial=green_terrestrial,
        green_balloon=green_balloon,
        hours_per_year=hours_per_year,
        ground_offset_sweep=ground_sweep,
        altitude_sweep=altitude_sweep,
        range_sweep=range_sweep,
        table_distances_m=tuple(table_distances),
        output_dir=output_dir,
        notes=tuple(notes),
    )
