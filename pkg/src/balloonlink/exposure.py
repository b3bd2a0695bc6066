"""Ground-level exposure products: density tables, sweep profiles, zones.

Everything here samples the free-space expressions from ``propagation``
at configured geometries. Sweeps are uniform in the swept variable with
inclusive endpoints, and every sampled value is exactly the single-point
evaluation at that abscissa, so series endpoints can be compared bit for
bit against direct calls.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .propagation import (
    TransmitterConfig,
    db_to_linear,
    e_field_rms,
    power_density,
    received_power,
    slant_range,
)

DEFAULT_NUM_STEPS = 101

# Default general-public power-density limit: f/200 W/m^2 for f in MHz,
# the ICNIRP-style band law, held at its 400 and 2000 MHz plateau values
# outside that band.
ZONE_LIMIT_BAND_MHZ = (400.0, 2000.0)
DEFAULT_CAUTION_FRACTION = 0.1


class ExposureZone(enum.IntEnum):
    """Exposure classification, ordered: higher value means more exposure."""

    SAFE = 0
    CAUTION = 1
    EXCEEDS_LIMIT = 2


@dataclass(frozen=True)
class ZoneThresholds:
    """Density limit and the fraction of it where caution starts."""

    limit_w_m2: float
    caution_fraction: float = DEFAULT_CAUTION_FRACTION

    def __post_init__(self) -> None:
        if self.limit_w_m2 <= 0.0:
            raise ValueError("limit_w_m2 must be > 0")
        if not 0.0 < self.caution_fraction < 1.0:
            raise ValueError("caution_fraction must be in (0, 1)")


def default_thresholds(freq_mhz: float) -> ZoneThresholds:
    """Frequency-derived thresholds: f/200 W/m^2, clamped outside the band."""
    if freq_mhz <= 0.0:
        raise ValueError("freq_mhz must be > 0")
    lo, hi = ZONE_LIMIT_BAND_MHZ
    clamped = min(max(freq_mhz, lo), hi)
    return ZoneThresholds(limit_w_m2=clamped / 200.0)


def classify_zone(density_w_m2: float, thresholds: ZoneThresholds) -> ExposureZone:
    """Classify a power density against the configured thresholds."""
    if density_w_m2 < 0.0:
        raise ValueError("density_w_m2 must be >= 0")
    if density_w_m2 >= thresholds.limit_w_m2:
        return ExposureZone.EXCEEDS_LIMIT
    if density_w_m2 >= thresholds.caution_fraction * thresholds.limit_w_m2:
        return ExposureZone.CAUTION
    return ExposureZone.SAFE


@dataclass(frozen=True)
class SweepSeries:
    """An ordered 1-D profile: (abscissa, value) pairs plus labeling."""

    label: str
    abscissa_name: str
    points: tuple[tuple[float, float], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        abscissas = [p[0] for p in self.points]
        if any(b <= a for a, b in zip(abscissas, abscissas[1:])):
            raise ValueError("abscissas must be strictly increasing")
        if any(p[1] < 0.0 for p in self.points):
            raise ValueError("series values must be >= 0")

    def abscissas(self) -> tuple[float, ...]:
        return tuple(p[0] for p in self.points)

    def values(self) -> tuple[float, ...]:
        return tuple(p[1] for p in self.points)


def _sample_axis(lo: float, hi: float, num_steps: int) -> list[float]:
    """Uniform samples on [lo, hi] with both endpoints exact."""
    if num_steps < 2:
        raise ValueError("num_steps must be >= 2")
    step = (hi - lo) / (num_steps - 1)
    xs = [lo + i * step for i in range(num_steps)]
    xs[-1] = hi
    return xs


def table_one(
    tx: TransmitterConfig, distances_m: list[float]
) -> tuple[tuple[float, float], ...]:
    """Power density at each listed distance, as (R, P_d) rows."""
    if not distances_m:
        raise ValueError("distances_m must not be empty")
    gain = tx.linear_gain()
    return tuple((r, power_density(tx.power_w, gain, r)) for r in distances_m)


def ground_density_profile(
    tx: TransmitterConfig,
    altitude_m: float,
    offset_max_m: float,
    num_steps: int = DEFAULT_NUM_STEPS,
) -> SweepSeries:
    """Power density along the ground away from the point under the platform.

    Samples the horizontal offset d on [0, offset_max_m]; each value is the
    density at the slant range sqrt(altitude^2 + d^2). The maximum is
    always at d = 0, directly beneath the platform.
    """
    if altitude_m <= 0.0:
        raise ValueError("altitude_m must be > 0")
    if offset_max_m < 0.0:
        raise ValueError("offset_max_m must be >= 0")
    gain = tx.linear_gain()
    if offset_max_m == 0.0:
        offsets = [0.0]
    else:
        offsets = _sample_axis(0.0, offset_max_m, num_steps)
    points = tuple(
        (d, power_density(tx.power_w, gain, slant_range(altitude_m, d)))
        for d in offsets
    )
    return SweepSeries(
        label=f"ground power density, platform at {altitude_m:g} m",
        abscissa_name="ground_offset_m",
        points=points,
    )


def altitude_density_profile(
    tx: TransmitterConfig,
    altitude_min_m: float,
    altitude_max_m: float,
    ground_offset_m: float = 0.0,
    num_steps: int = DEFAULT_NUM_STEPS,
) -> SweepSeries:
    """Ground-point power density as the platform altitude rises."""
    if not 0.0 < altitude_min_m < altitude_max_m:
        raise ValueError("need 0 < altitude_min_m < altitude_max_m")
    if ground_offset_m < 0.0:
        raise ValueError("ground_offset_m must be >= 0")
    gain = tx.linear_gain()
    points = tuple(
        (a, power_density(tx.power_w, gain, slant_range(a, ground_offset_m)))
        for a in _sample_axis(altitude_min_m, altitude_max_m, num_steps)
    )
    return SweepSeries(
        label=f"power density vs platform altitude, offset {ground_offset_m:g} m",
        abscissa_name="altitude_m",
        points=points,
    )


def efield_profile(
    tx: TransmitterConfig,
    range_min_m: float,
    range_max_m: float,
    num_steps: int = DEFAULT_NUM_STEPS,
) -> SweepSeries:
    """Rms E-field over a straight-line distance sweep; falls off as 1/R."""
    if not 0.0 < range_min_m < range_max_m:
        raise ValueError("need 0 < range_min_m < range_max_m")
    gain = tx.linear_gain()
    points = tuple(
        (r, e_field_rms(tx.power_w, gain, r))
        for r in _sample_axis(range_min_m, range_max_m, num_steps)
    )
    return SweepSeries(
        label="rms E-field vs distance",
        abscissa_name="range_m",
        points=points,
    )


def range_density_profile(
    tx: TransmitterConfig,
    range_min_m: float,
    range_max_m: float,
    num_steps: int = DEFAULT_NUM_STEPS,
) -> SweepSeries:
    """Power density over a straight-line distance sweep (1/R^2 falloff)."""
    if not 0.0 < range_min_m < range_max_m:
        raise ValueError("need 0 < range_min_m < range_max_m")
    gain = tx.linear_gain()
    points = tuple(
        (r, power_density(tx.power_w, gain, r))
        for r in _sample_axis(range_min_m, range_max_m, num_steps)
    )
    return SweepSeries(
        label="power density vs distance",
        abscissa_name="range_m",
        points=points,
    )


def received_power_profile(
    tx: TransmitterConfig,
    rx_gain_db: float,
    freq_mhz: float,
    altitude_min_m: float,
    altitude_max_m: float,
    ground_offset_m: float = 0.0,
    num_steps: int = DEFAULT_NUM_STEPS,
) -> SweepSeries:
    """Received power at a ground point as the platform altitude rises."""
    if not 0.0 < altitude_min_m < altitude_max_m:
        raise ValueError("need 0 < altitude_min_m < altitude_max_m")
    if ground_offset_m < 0.0:
        raise ValueError("ground_offset_m must be >= 0")
    tx_gain = tx.linear_gain()
    rx_gain = db_to_linear(rx_gain_db)
    points = tuple(
        (
            a,
            received_power(
                tx.power_w, tx_gain, rx_gain, freq_mhz, slant_range(a, ground_offset_m)
            ),
        )
        for a in _sample_axis(altitude_min_m, altitude_max_m, num_steps)
    )
    return SweepSeries(
        label=f"received power vs platform altitude, offset {ground_offset_m:g} m",
        abscissa_name="altitude_m",
        points=points,
    )
