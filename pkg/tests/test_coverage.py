"""Unit tests for cell sizing and constellation layout."""

import math

import numpy as np
import pytest

from balloonlink import coverage as cov
from balloonlink.propagation import hata_path_loss


class TestCellRadiusFromBudget:
    def test_round_trips_reference_losses(self):
        # inverse of the 115.017 / 144.845 dB reference evaluations
        assert cov.cell_radius_from_budget(900.0, 200.0, 1.5, 144.8451212094079) == pytest.approx(
            10.0, rel=1e-9
        )
        assert cov.cell_radius_from_budget(900.0, 200.0, 1.5, 115.01686768100697) == pytest.approx(
            1.0, rel=1e-9
        )

    def test_one_decade_per_slope_db(self):
        slope = 44.9 - 6.55 * math.log10(200.0)
        base = cov.cell_radius_from_budget(900.0, 200.0, 1.5, 130.0)
        ten_x = cov.cell_radius_from_budget(900.0, 200.0, 1.5, 130.0 + slope)
        assert ten_x == pytest.approx(10.0 * base, rel=1e-9)

    def test_round_trip_random(self):
        rng = np.random.default_rng(23)
        for _ in range(300):
            f = float(rng.uniform(150.0, 1500.0))
            hte = float(rng.uniform(30.0, 440.0))
            hre = float(rng.uniform(1.0, 10.0))
            d = float(rng.uniform(1.0, 20.0))
            loss = hata_path_loss(f, hte, hre, d)
            back = cov.cell_radius_from_budget(f, hte, hre, loss)
            assert abs(back - d) / d < 1e-9

    def test_strictly_increasing_in_budget(self):
        radii = [
            cov.cell_radius_from_budget(900.0, 200.0, 1.5, loss)
            for loss in (110.0, 120.0, 130.0, 140.0)
        ]
        assert all(b > a for a, b in zip(radii, radii[1:]))

    def test_non_invertible_height_rejected(self):
        # slope 44.9 - 6.55*log10(h_te) turns negative above ~7.16e6 m
        with pytest.raises(ValueError):
            cov.cell_radius_from_budget(900.0, 1e8, 1.5, 140.0)

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            cov.cell_radius_from_budget(0.0, 200.0, 1.5, 140.0)
        with pytest.raises(ValueError):
            cov.cell_radius_from_budget(900.0, 200.0, 1.5, math.nan)


class TestCellArea:
    def test_values(self):
        assert cov.cell_area_km2(1.0) == pytest.approx(math.pi, rel=1e-12)
        assert cov.cell_area_km2(10.0) == pytest.approx(100.0 * math.pi, rel=1e-12)
        assert cov.cell_area_km2(0.5) == pytest.approx(0.25 * math.pi, rel=1e-12)

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            cov.cell_area_km2(0.0)


class TestConstellationLayout:
    def test_single_cell_at_origin(self):
        constellation = cov.constellation_layout(1, 5.0)
        assert len(constellation.cells) == 1
        cell = constellation.cells[0]
        assert (cell.center_x_km, cell.center_y_km) == (0.0, 0.0)
        assert constellation.spacing_km == pytest.approx(math.sqrt(3.0) * 5.0, rel=1e-12)

    def test_second_cell_on_positive_x(self):
        constellation = cov.constellation_layout(2, 1.0)
        second = constellation.cells[1]
        assert second.center_x_km == pytest.approx(math.sqrt(3.0), rel=1e-12)
        assert second.center_y_km == 0.0

    def test_seven_cells_form_one_ring(self):
        constellation = cov.constellation_layout(7, 1.0)
        spacing = constellation.spacing_km
        for cell in constellation.cells[1:]:
            distance = math.hypot(cell.center_x_km, cell.center_y_km)
            assert distance == pytest.approx(spacing, rel=1e-12)

    def test_first_ring_is_counterclockwise_from_x_axis(self):
        constellation = cov.constellation_layout(7, 1.0)
        angles = [
            math.atan2(c.center_y_km, c.center_x_km) % (2.0 * math.pi)
            for c in constellation.cells[1:]
        ]
        expected = [k * math.pi / 3.0 for k in range(6)]
        assert angles == pytest.approx(expected, abs=1e-12)

    def test_pairwise_spacing_lower_bound(self):
        constellation = cov.constellation_layout(19, 2.5)
        cells = constellation.cells
        for i in range(len(cells)):
            for j in range(i + 1, len(cells)):
                distance = math.hypot(
                    cells[i].center_x_km - cells[j].center_x_km,
                    cells[i].center_y_km - cells[j].center_y_km,
                )
                assert distance >= constellation.spacing_km - 1e-9

    def test_deterministic(self):
        first = cov.constellation_layout(12, 3.0)
        second = cov.constellation_layout(12, 3.0)
        assert first == second

    def test_rejects_zero_balloons(self):
        with pytest.raises(ValueError):
            cov.constellation_layout(0, 1.0)
        with pytest.raises(ValueError):
            cov.constellation_layout(3, 0.0)


class TestLinkedPairs:
    def test_seven_cell_cluster_topology(self):
        constellation = cov.constellation_layout(7, 1.0)
        pairs = cov.linked_pairs(constellation)
        # center touches all six ring cells; the ring itself closes a 6-cycle
        assert len(pairs) == 12
        center_links = [p for p in pairs if 0 in p]
        assert len(center_links) == 6

    def test_single_cell_has_no_links(self):
        assert cov.linked_pairs(cov.constellation_layout(1, 1.0)) == ()


class TestUnionArea:
    def test_single_disk_close_to_pi(self):
        constellation = cov.constellation_layout(1, 1.0)
        area = cov.union_area_km2(constellation)
        assert abs(area - math.pi) / math.pi < 0.01

    def test_repeated_calls_identical(self):
        constellation = cov.constellation_layout(7, 2.0)
        assert cov.union_area_km2(constellation) == cov.union_area_km2(constellation)

    def test_union_between_single_cell_and_disjoint_total(self):
        constellation = cov.constellation_layout(7, 2.0)
        area = cov.union_area_km2(constellation)
        single = cov.cell_area_km2(2.0)
        assert single < area < 7.0 * single

    def test_scales_with_radius_squared(self):
        small = cov.union_area_km2(cov.constellation_layout(3, 1.0))
        large = cov.union_area_km2(cov.constellation_layout(3, 2.0))
        assert large == pytest.approx(4.0 * small, rel=0.02)


class TestReplacementCount:
    def test_area_ratio_examples(self):
        assert cov.replacement_count(10.0, 1.0) == 100
        assert cov.replacement_count(3.0, 2.0) == 3  # ceil(2.25)

    def test_equal_radii(self):
        for radius in (0.3, 1.0, 7.7):
            assert cov.replacement_count(radius, radius) == 1

    def test_monotone_in_balloon_radius(self):
        counts = [cov.replacement_count(r, 1.0) for r in np.linspace(0.5, 20.0, 50)]
        assert all(b >= a for a, b in zip(counts, counts[1:]))

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            cov.replacement_count(0.0, 1.0)
        with pytest.raises(ValueError):
            cov.replacement_count(1.0, -2.0)


class TestConstellationInvariants:
    def test_mixed_radii_rejected(self):
        cells = (cov.Cell(radius_km=1.0), cov.Cell(radius_km=2.0, center_x_km=3.0))
        with pytest.raises(ValueError):
            cov.Constellation(cells=cells, spacing_km=math.sqrt(3.0))

    def test_wrong_spacing_rejected(self):
        with pytest.raises(ValueError):
            cov.Constellation(cells=(cov.Cell(radius_km=1.0),), spacing_km=2.0)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            cov.Constellation(cells=(), spacing_km=1.0)
