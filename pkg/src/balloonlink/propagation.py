"""Closed-form radio link physics for an elevated base-station platform.

Free-space power density, rms E-field and received power around an
isotropic-equivalent transmitter, plus the Hata small-city path-loss
model used for cell sizing. Scalars in, scalars out; frequencies are in
MHz, distances in meters unless a name says otherwise. Every function is
pure, so callers may evaluate concurrently without locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

SPEED_OF_LIGHT_M_S = 299_792_458.0

# Impedance of free space, the 120*pi in P_d = E^2 / (120*pi).
FREE_SPACE_IMPEDANCE_OHM = 120.0 * math.pi

# Empirical fitting ranges of the Hata small-city model. The formula still
# evaluates outside them; hata_validity_warnings() reports the excursions.
HATA_FREQ_RANGE_MHZ = (150.0, 1500.0)
HATA_BS_HEIGHT_RANGE_M = (30.0, 200.0)
HATA_DISTANCE_RANGE_KM = (1.0, 20.0)


def db_to_linear(value_db: float) -> float:
    """Convert a decibel power ratio to linear: 10^(dB/10)."""
    if not math.isfinite(value_db):
        raise ValueError("dB value must be finite")
    return 10.0 ** (value_db / 10.0)


def linear_to_db(ratio: float) -> float:
    """Convert a positive linear power ratio to decibels."""
    if not (math.isfinite(ratio) and ratio > 0.0):
        raise ValueError("linear ratio must be finite and > 0")
    return 10.0 * math.log10(ratio)


def wavelength_m(freq_mhz: float) -> float:
    """Free-space wavelength in meters for a carrier given in MHz."""
    if not (math.isfinite(freq_mhz) and freq_mhz > 0.0):
        raise ValueError("freq_mhz must be > 0")
    return SPEED_OF_LIGHT_M_S / (freq_mhz * 1e6)


def near_field_distance(antenna_dim_m: float, freq_mhz: float) -> float:
    """Far-field boundary 2*L^2/lambda for an antenna of largest dimension L.

    Used only as a distance marker; no separate near-field model is applied
    inside it.
    """
    if antenna_dim_m < 0.0:
        raise ValueError("antenna_dim_m must be >= 0")
    return 2.0 * antenna_dim_m * antenna_dim_m / wavelength_m(freq_mhz)


def hata_correction_small_city(freq_mhz: float, rx_antenna_height_m: float) -> float:
    """Mobile-antenna height correction a(h_re) for a small city, in dB.

    a(h_re) = (1.1*log10(f) - 0.7)*h_re - (1.56*log10(f) - 0.8)
    """
    if freq_mhz <= 0.0 or rx_antenna_height_m <= 0.0:
        raise ValueError("freq_mhz and rx_antenna_height_m must be > 0")
    log_f = math.log10(freq_mhz)
    return (1.1 * log_f - 0.7) * rx_antenna_height_m - (1.56 * log_f - 0.8)


def hata_path_loss(
    freq_mhz: float,
    bs_antenna_height_m: float,
    rx_antenna_height_m: float,
    distance_km: float,
) -> float:
    """Median path loss of the Hata small-city model, in dB.

    PL = 69.55 + 26.16*log10(f) - 13.82*log10(h_te) - a(h_re)
         + (44.9 - 6.55*log10(h_te)) * log10(D)

    with f in MHz, antenna heights in m and the distance D in km. The
    formula is evaluated regardless of the empirical fitting ranges; use
    hata_validity_warnings() to check those.
    """
    if freq_mhz <= 0.0 or bs_antenna_height_m <= 0.0 or distance_km <= 0.0:
        raise ValueError("freq_mhz, bs_antenna_height_m and distance_km must be > 0")
    correction = hata_correction_small_city(freq_mhz, rx_antenna_height_m)
    log_hte = math.log10(bs_antenna_height_m)
    return (
        69.55
        + 26.16 * math.log10(freq_mhz)
        - 13.82 * log_hte
        - correction
        + (44.9 - 6.55 * log_hte) * math.log10(distance_km)
    )


def hata_slope_db_per_decade(bs_antenna_height_m: float) -> float:
    """Distance slope 44.9 - 6.55*log10(h_te) of the Hata model, dB/decade."""
    if bs_antenna_height_m <= 0.0:
        raise ValueError("bs_antenna_height_m must be > 0")
    return 44.9 - 6.55 * math.log10(bs_antenna_height_m)


def hata_validity_warnings(
    freq_mhz: float,
    bs_antenna_height_m: float,
    distance_km: float,
) -> tuple[str, ...]:
    """Advisory flags for Hata inputs outside the model's fitting ranges.

    Returns an empty tuple when all inputs are within range. Never raises
    for out-of-range values: the platform use case intentionally exceeds
    the classical base-station height limit.
    """
    warnings = []
    lo, hi = HATA_FREQ_RANGE_MHZ
    if not lo <= freq_mhz <= hi:
        warnings.append(
            f"freq_mhz={freq_mhz:g} outside Hata validity range [{lo:g}, {hi:g}] MHz"
        )
    lo, hi = HATA_BS_HEIGHT_RANGE_M
    if not lo <= bs_antenna_height_m <= hi:
        warnings.append(
            f"bs_antenna_height_m={bs_antenna_height_m:g} outside Hata validity "
            f"range [{lo:g}, {hi:g}] m"
        )
    lo, hi = HATA_DISTANCE_RANGE_KM
    if not lo <= distance_km <= hi:
        warnings.append(
            f"distance_km={distance_km:g} outside Hata validity range [{lo:g}, {hi:g}] km"
        )
    return tuple(warnings)


def slant_range(altitude_m: float, ground_offset_m: float) -> float:
    """Straight-line distance from a platform to a ground point, in meters.

    R = sqrt(altitude^2 + offset^2). Both inputs must be >= 0 and at least
    one must be positive (R = 0 is a field singularity downstream).
    """
    if altitude_m < 0.0 or ground_offset_m < 0.0:
        raise ValueError("altitude_m and ground_offset_m must be >= 0")
    if altitude_m == 0.0 and ground_offset_m == 0.0:
        raise ValueError("altitude_m and ground_offset_m cannot both be 0")
    return math.hypot(altitude_m, ground_offset_m)


def power_density(power_w: float, gain_linear: float, range_m: float) -> float:
    """Free-space power density P*G / (4*pi*R^2), in W/m^2."""
    if power_w < 0.0:
        raise ValueError("power_w must be >= 0")
    if gain_linear <= 0.0:
        raise ValueError("gain_linear must be > 0")
    if range_m <= 0.0:
        raise ValueError("range_m must be > 0")
    return power_w * gain_linear / (4.0 * math.pi * range_m * range_m)


def e_field_rms(power_w: float, gain_linear: float, range_m: float) -> float:
    """Rms electric field sqrt(30*P*G) / R, in V/m."""
    if power_w < 0.0:
        raise ValueError("power_w must be >= 0")
    if gain_linear <= 0.0:
        raise ValueError("gain_linear must be > 0")
    if range_m <= 0.0:
        raise ValueError("range_m must be > 0")
    return math.sqrt(30.0 * power_w * gain_linear) / range_m


def received_power(
    power_w: float,
    tx_gain_linear: float,
    rx_gain_linear: float,
    freq_mhz: float,
    range_m: float,
) -> float:
    """Friis received power P*Gt*Gr*lambda^2 / (4*pi*R)^2, in watts."""
    if power_w < 0.0:
        raise ValueError("power_w must be >= 0")
    if tx_gain_linear <= 0.0 or rx_gain_linear <= 0.0:
        raise ValueError("gains must be > 0")
    if range_m <= 0.0:
        raise ValueError("range_m must be > 0")
    lam = wavelength_m(freq_mhz)
    return (
        power_w * tx_gain_linear * rx_gain_linear * lam * lam
        / (4.0 * math.pi * range_m) ** 2
    )


@dataclass(frozen=True)
class TransmitterConfig:
    """Transmitter parameters.

    gain_db is the canonical gain; gain_linear, when set, is an explicit
    linear override that wins over gain_db (used to reproduce reference
    tables computed with a rounded linear gain). power_w = 0 is allowed
    as a degenerate probe; source configurations require a positive power.
    """

    power_w: float
    gain_db: float = 17.0
    freq_mhz: float = 900.0
    antenna_dim_m: float = 1.0
    gain_linear: float | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.power_w) and self.power_w >= 0.0):
            raise ValueError("power_w must be >= 0")
        if not math.isfinite(self.gain_db):
            raise ValueError("gain_db must be finite")
        if not (math.isfinite(self.freq_mhz) and self.freq_mhz > 0.0):
            raise ValueError("freq_mhz must be > 0")
        if not (math.isfinite(self.antenna_dim_m) and self.antenna_dim_m >= 0.0):
            raise ValueError("antenna_dim_m must be >= 0")
        if self.gain_linear is not None and not (
            math.isfinite(self.gain_linear) and self.gain_linear > 0.0
        ):
            raise ValueError("gain_linear must be > 0 when given")

    def linear_gain(self) -> float:
        """Effective linear transmit gain; gain_linear wins over gain_db."""
        if self.gain_linear is not None:
            return self.gain_linear
        return db_to_linear(self.gain_db)

    def near_field_m(self) -> float:
        return near_field_distance(self.antenna_dim_m, self.freq_mhz)


@dataclass(frozen=True)
class LinkGeometry:
    """One transmitter-to-ground geometry.

    altitude_m is the platform height above ground, ground_offset_m the
    horizontal distance from the point directly beneath it. The antenna
    heights feed the Hata model only.
    """

    altitude_m: float = 150.0
    ground_offset_m: float = 0.0
    bs_antenna_height_m: float = 200.0
    rx_antenna_height_m: float = 1.5
    rx_gain_db: float = 0.0

    def __post_init__(self) -> None:
        if self.altitude_m < 0.0:
            raise ValueError("altitude_m must be >= 0")
        if self.ground_offset_m < 0.0:
            raise ValueError("ground_offset_m must be >= 0")
        if self.bs_antenna_height_m <= 0.0:
            raise ValueError("bs_antenna_height_m must be > 0")
        if self.rx_antenna_height_m <= 0.0:
            raise ValueError("rx_antenna_height_m must be > 0")
        if not math.isfinite(self.rx_gain_db):
            raise ValueError("rx_gain_db must be finite")

    def slant_range_m(self) -> float:
        return slant_range(self.altitude_m, self.ground_offset_m)


@dataclass(frozen=True)
class LinkBudgetResult:
    """Path loss, field quantities and received power at one geometry."""

    path_loss_db: float
    power_density_w_m2: float
    e_field_v_m: float
    received_power_w: float
    range_m: float

    def __post_init__(self) -> None:
        if self.power_density_w_m2 < 0.0 or self.received_power_w < 0.0:
            raise ValueError("power density and received power must be >= 0")
        if self.e_field_v_m < 0.0:
            raise ValueError("e_field_v_m must be >= 0 (rms magnitude)")
        if self.range_m <= 0.0:
            raise ValueError("range_m must be > 0")
        # E and P_d must agree through the free-space impedance identity.
        implied = self.e_field_v_m**2 / FREE_SPACE_IMPEDANCE_OHM
        if self.power_density_w_m2 == 0.0:
            consistent = implied == 0.0
        else:
            consistent = (
                abs(implied - self.power_density_w_m2) / self.power_density_w_m2
                <= 1e-12
            )
        if not consistent:
            raise ValueError("e_field_v_m inconsistent with power_density_w_m2")


def link_budget(tx: TransmitterConfig, geometry: LinkGeometry) -> LinkBudgetResult:
    """Evaluate the full single-point budget at the geometry's slant range.

    The Hata path loss is evaluated at the slant range converted to km,
    which for a low platform is usually below the model's 1 km validity
    floor; pair with hata_validity_warnings() when reporting results.
    """
    range_m = geometry.slant_range_m()
    gain = tx.linear_gain()
    return LinkBudgetResult(
        path_loss_db=hata_path_loss(
            tx.freq_mhz,
            geometry.bs_antenna_height_m,
            geometry.rx_antenna_height_m,
            range_m / 1000.0,
        ),
        power_density_w_m2=power_density(tx.power_w, gain, range_m),
        e_field_v_m=e_field_rms(tx.power_w, gain, range_m),
        received_power_w=received_power(
            tx.power_w, gain, db_to_linear(geometry.rx_gain_db), tx.freq_mhz, range_m
        ),
        range_m=range_m,
    )
