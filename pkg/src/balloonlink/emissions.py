"""Annual CO2 accounting for base-station power sources.

Parametric comparison of a diesel- or grid-powered terrestrial fleet
against a solar platform covering the same area. All default parameter
values are engineering assumptions, not measured quantities; they are
surfaced in output so nobody mistakes them for ground truth.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .coverage import replacement_count

HOURS_PER_YEAR = 8760.0

# Assumed per-station consumption and emission factors, config-overridable.
DEFAULT_DIESEL_LITERS_PER_HOUR = 2.0
DEFAULT_DIESEL_KG_CO2_PER_LITER = 2.68
DEFAULT_GRID_KG_CO2_PER_KWH = 0.82


class SourceKind(enum.Enum):
    DIESEL = "DIESEL"
    SOLAR = "SOLAR"
    GRID = "GRID"


@dataclass(frozen=True)
class PowerSourceProfile:
    """How one base station is powered and what it emits.

    Only the fields relevant to the source kind are consumed; a SOLAR
    profile must have every emission-bearing field at zero.
    """

    source_kind: SourceKind
    fuel_liters_per_hour: float = 0.0
    emission_factor_kg_per_liter: float = 0.0
    grid_kwh_per_hour: float = 0.0
    grid_emission_kg_per_kwh: float = 0.0

    def __post_init__(self) -> None:
        for name in (
            "fuel_liters_per_hour",
            "emission_factor_kg_per_liter",
            "grid_kwh_per_hour",
            "grid_emission_kg_per_kwh",
        ):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be >= 0")
        if self.source_kind is SourceKind.SOLAR and (
            self.fuel_liters_per_hour != 0.0
            or self.emission_factor_kg_per_liter != 0.0
            or self.grid_kwh_per_hour != 0.0
            or self.grid_emission_kg_per_kwh != 0.0
        ):
            raise ValueError("a SOLAR profile must have all emission fields at 0")


def diesel_profile(
    liters_per_hour: float = DEFAULT_DIESEL_LITERS_PER_HOUR,
    kg_co2_per_liter: float = DEFAULT_DIESEL_KG_CO2_PER_LITER,
) -> PowerSourceProfile:
    return PowerSourceProfile(
        source_kind=SourceKind.DIESEL,
        fuel_liters_per_hour=liters_per_hour,
        emission_factor_kg_per_liter=kg_co2_per_liter,
    )


def solar_profile() -> PowerSourceProfile:
    return PowerSourceProfile(source_kind=SourceKind.SOLAR)


def grid_profile(
    kwh_per_hour: float,
    kg_co2_per_kwh: float = DEFAULT_GRID_KG_CO2_PER_KWH,
) -> PowerSourceProfile:
    return PowerSourceProfile(
        source_kind=SourceKind.GRID,
        grid_kwh_per_hour=kwh_per_hour,
        grid_emission_kg_per_kwh=kg_co2_per_kwh,
    )


@dataclass(frozen=True)
class GreenComparison:
    """Annual CO2 of a terrestrial fleet vs one platform, in metric tonnes."""

    terrestrial_annual_tons: float
    balloon_annual_tons: float
    avoided_tons: float
    replaced_bs_count: int


def annual_emissions_tons(
    profile: PowerSourceProfile, hours_per_year: float = HOURS_PER_YEAR
) -> float:
    """Annual CO2 output of one station, in metric tonnes."""
    if hours_per_year <= 0.0:
        raise ValueError("hours_per_year must be > 0")
    if profile.source_kind is SourceKind.SOLAR:
        return 0.0
    if profile.source_kind is SourceKind.DIESEL:
        kg = profile.fuel_liters_per_hour * hours_per_year * profile.emission_factor_kg_per_liter
    else:
        kg = profile.grid_kwh_per_hour * hours_per_year * profile.grid_emission_kg_per_kwh
    return kg / 1000.0


def compare(
    terrestrial_profile: PowerSourceProfile,
    balloon_profile: PowerSourceProfile,
    balloon_radius_km: float,
    terrestrial_radius_km: float,
    hours_per_year: float = HOURS_PER_YEAR,
) -> GreenComparison:
    """Fleet-vs-platform annual CO2 for equal covered area.

    The terrestrial side is scaled by how many terrestrial cells one
    platform cell replaces (area ratio, rounded up).
    """
    replaced = replacement_count(balloon_radius_km, terrestrial_radius_km)
    terrestrial = replaced * annual_emissions_tons(terrestrial_profile, hours_per_year)
    balloon = annual_emissions_tons(balloon_profile, hours_per_year)
    return GreenComparison(
        terrestrial_annual_tons=terrestrial,
        balloon_annual_tons=balloon,
        avoided_tons=terrestrial - balloon,
        replaced_bs_count=replaced,
    )
