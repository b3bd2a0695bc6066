"""Cell sizing and multi-platform constellation layout.

Inverts the Hata model for the cell radius that exhausts a path-loss
budget, lays platforms out on a hexagonal lattice and estimates the union
coverage area of the resulting cells.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .propagation import hata_correction_small_city, hata_slope_db_per_decade

# Hexagonal lattice spacing factor: disks of radius D centered sqrt(3)*D
# apart overlap minimally while leaving no gap.
HEX_SPACING_FACTOR = math.sqrt(3.0)

UNION_AREA_SAMPLES = 100_000
UNION_AREA_SEED = 42

# Unit steps between neighboring lattice sites, counterclockwise from +x.
_HALF_SQRT3 = math.sqrt(3.0) / 2.0
_HEX_DIRECTIONS = (
    (1.0, 0.0),
    (0.5, _HALF_SQRT3),
    (-0.5, _HALF_SQRT3),
    (-1.0, 0.0),
    (-0.5, -_HALF_SQRT3),
    (0.5, -_HALF_SQRT3),
)


@dataclass(frozen=True)
class Cell:
    """A circular coverage cell on the plane, dimensions in km."""

    radius_km: float
    center_x_km: float = 0.0
    center_y_km: float = 0.0

    def __post_init__(self) -> None:
        if self.radius_km <= 0.0:
            raise ValueError("radius_km must be > 0")


@dataclass(frozen=True)
class Constellation:
    """Cells of one shared radius on a hexagonal lattice.

    spacing_km is the center-to-center distance of adjacent cells and is
    fixed at sqrt(3) times the cell radius.
    """

    cells: tuple[Cell, ...]
    spacing_km: float

    def __post_init__(self) -> None:
        if len(self.cells) < 1:
            raise ValueError("constellation needs at least one cell")
        radius = self.cells[0].radius_km
        if any(cell.radius_km != radius for cell in self.cells):
            raise ValueError("all cells must share one radius_km")
        expected = HEX_SPACING_FACTOR * radius
        if not math.isclose(self.spacing_km, expected, rel_tol=1e-12):
            raise ValueError("spacing_km must equal sqrt(3) * radius_km")

    @property
    def radius_km(self) -> float:
        return self.cells[0].radius_km


def cell_radius_from_budget(
    freq_mhz: float,
    bs_antenna_height_m: float,
    rx_antenna_height_m: float,
    max_path_loss_db: float,
) -> float:
    """Cell radius D (km) at which the Hata path loss equals the budget.

    Closed-form inversion: log10(D) = (PL - fixed terms) / slope, with
    slope = 44.9 - 6.55*log10(h_te). Round-trips with hata_path_loss to
    better than 1e-9 relative.
    """
    if not math.isfinite(max_path_loss_db):
        raise ValueError("max_path_loss_db must be finite")
    if freq_mhz <= 0.0 or bs_antenna_height_m <= 0.0:
        raise ValueError("freq_mhz and bs_antenna_height_m must be > 0")
    slope = hata_slope_db_per_decade(bs_antenna_height_m)
    if slope <= 0.0:
        raise ValueError(
            "path loss is not increasing in distance for "
            f"bs_antenna_height_m={bs_antenna_height_m:g}; cannot invert"
        )
    fixed = (
        69.55
        + 26.16 * math.log10(freq_mhz)
        - 13.82 * math.log10(bs_antenna_height_m)
        - hata_correction_small_city(freq_mhz, rx_antenna_height_m)
    )
    return 10.0 ** ((max_path_loss_db - fixed) / slope)


def cell_area_km2(radius_km: float) -> float:
    """Area of one circular cell, pi * D^2."""
    if radius_km <= 0.0:
        raise ValueError("radius_km must be > 0")
    return math.pi * radius_km * radius_km


def constellation_layout(num_balloons: int, radius_km: float) -> Constellation:
    """Place platforms ring by ring on a hexagonal lattice.

    The first cell sits at the origin; each following ring is filled
    counterclockwise starting from the +x axis. Deterministic: the same
    inputs always produce the same ordered centers.
    """
    if num_balloons < 1:
        raise ValueError("num_balloons must be >= 1")
    if radius_km <= 0.0:
        raise ValueError("radius_km must be > 0")
    spacing = HEX_SPACING_FACTOR * radius_km
    centers = [(0.0, 0.0)]
    ring = 1
    while len(centers) < num_balloons:
        for segment in range(6):
            corner_x = ring * spacing * _HEX_DIRECTIONS[segment][0]
            corner_y = ring * spacing * _HEX_DIRECTIONS[segment][1]
            step = _HEX_DIRECTIONS[(segment + 2) % 6]
            for along in range(ring):
                centers.append(
                    (
                        corner_x + along * spacing * step[0],
                        corner_y + along * spacing * step[1],
                    )
                )
        ring += 1
    cells = tuple(
        Cell(radius_km=radius_km, center_x_km=x, center_y_km=y)
        for x, y in centers[:num_balloons]
    )
    return Constellation(cells=cells, spacing_km=spacing)


def linked_pairs(constellation: Constellation) -> tuple[tuple[int, int], ...]:
    """Index pairs of adjacent cells (centers one lattice spacing apart).

    Adjacency is the inter-platform link topology; the radio or optical
    link itself is not modeled.
    """
    cells = constellation.cells
    spacing = constellation.spacing_km
    pairs = []
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            distance = math.hypot(
                cells[i].center_x_km - cells[j].center_x_km,
                cells[i].center_y_km - cells[j].center_y_km,
            )
            if math.isclose(distance, spacing, rel_tol=1e-9):
                pairs.append((i, j))
    return tuple(pairs)


def union_area_km2(
    constellation: Constellation,
    num_samples: int = UNION_AREA_SAMPLES,
    seed: int = UNION_AREA_SEED,
) -> float:
    """Monte Carlo estimate of the area covered by at least one cell.

    Samples a fixed, seeded generator so repeated calls return the same
    value bit for bit. With the default 1e5 samples the estimate of a
    single cell's area is well within 1% of pi*D^2.
    """
    if num_samples < 1:
        raise ValueError("num_samples must be >= 1")
    radius = constellation.radius_km
    xs = np.array([cell.center_x_km for cell in constellation.cells])
    ys = np.array([cell.center_y_km for cell in constellation.cells])
    x_lo, x_hi = xs.min() - radius, xs.max() + radius
    y_lo, y_hi = ys.min() - radius, ys.max() + radius
    rng = np.random.default_rng(seed)
    points = rng.uniform((x_lo, y_lo), (x_hi, y_hi), size=(num_samples, 2))
    dx = points[:, 0:1] - xs[np.newaxis, :]
    dy = points[:, 1:2] - ys[np.newaxis, :]
    covered = ((dx * dx + dy * dy) <= radius * radius).any(axis=1)
    box_area = (x_hi - x_lo) * (y_hi - y_lo)
    return box_area * float(covered.sum()) / num_samples


def replacement_count(balloon_radius_km: float, terrestrial_radius_km: float) -> int:
    """Terrestrial cells one platform cell replaces, by area ratio.

    ceil((D_balloon / D_terrestrial)^2), since a fractional tower cannot
    be deployed. A tiny slack absorbs float noise so exact integer ratios
    stay exact.
    """
    if balloon_radius_km <= 0.0 or terrestrial_radius_km <= 0.0:
        raise ValueError("radii must be > 0")
    ratio = (balloon_radius_km / terrestrial_radius_km) ** 2
    return math.ceil(ratio - 1e-9)
