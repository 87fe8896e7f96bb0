"""
Tests for the fixed-point oracle and the verification campaign.
"""

import pytest

from src.divisor.picard import DivisorClass
from src.oracle.verifier import (
    CampaignReport,
    cross_check_fixed_points,
    fixed_point_seshadri,
    nef_lower_bound_check,
    random_instances,
    run_campaign,
)
from src.point.cox import fixed_point_of_cone
from src.seshadri.engine import seshadri_at, seshadri_inf
from src.tower.fan import BottNumbers, MaximalCone, build_tower
from src.utils.errors import DiscrepancyFound, NotNef


@pytest.mark.unit
class TestFixedPointSeshadri:
    """Test the oracle value at single fixed points."""

    def test_all_lower_cone_gives_minimum(self, tower4_mixed, bundle_1384):
        value = fixed_point_seshadri(tower4_mixed, bundle_1384, MaximalCone.all_lower(4))

        assert value == 1
        assert value == seshadri_inf(tower4_mixed, bundle_1384).value

    def test_all_upper_cone(self, tower4_mixed, bundle_1384):
        assert fixed_point_seshadri(tower4_mixed, bundle_1384, MaximalCone.all_upper(4)) == 4

    def test_height_one(self):
        tower = build_tower(BottNumbers(1))

        for cone in tower.maximal_cones:
            assert fixed_point_seshadri(tower, DivisorClass.of(5), cone) == 5

    def test_agrees_with_formula_on_small_tower(self):
        tower = build_tower(BottNumbers.constant(3, 1))
        divisor = DivisorClass.of(2, 1, 3)

        for cone in tower.maximal_cones:
            expected = seshadri_at(tower, divisor, fixed_point_of_cone(tower, cone)).value
            assert fixed_point_seshadri(tower, divisor, cone) == expected

    def test_requires_nef(self, tower4):
        with pytest.raises(NotNef):
            fixed_point_seshadri(tower4, DivisorClass.of(1, -1, 1, 1), MaximalCone.all_lower(4))


@pytest.mark.unit
class TestCrossCheck:
    """Test the exhaustive fixed-point comparison."""

    def test_example_bundle_has_no_discrepancies(self, tower4, bundle_1384):
        report = cross_check_fixed_points(tower4, bundle_1384)

        assert len(report.checks) == 16
        assert report.discrepancies == []
        assert all(check.agrees for check in report.checks)
        assert all(len(check.walls) == 4 for check in report.checks)

    def test_report_carries_wall_data(self, hirzebruch):
        report = cross_check_fixed_points(hirzebruch, DivisorClass.of(5, 3))
        upper = next(check for check in report.checks if check.cone == "UU")

        assert upper.point == "[1:0:1:0]"
        assert upper.gamma_index == 2
        assert sorted(w.pairing for w in upper.walls) == [3, 11]
        assert upper.oracle_value == upper.formula_value == 3

    def test_strict_mode_raises_on_disagreement(self, hirzebruch, monkeypatch):
        import src.oracle.verifier as verifier
        from src.seshadri.engine import SeshadriResult

        def off_by_one(tower, divisor, point, formal=False):
            return SeshadriResult(value=-1, witness_index=1, gamma_index=1)

        monkeypatch.setattr(verifier, "seshadri_at", off_by_one)

        with pytest.raises(DiscrepancyFound) as excinfo:
            cross_check_fixed_points(hirzebruch, DivisorClass.of(5, 3))
        assert excinfo.value.cone == MaximalCone.all_lower(2)

        report = cross_check_fixed_points(hirzebruch, DivisorClass.of(5, 3), strict=False)
        assert len(report.discrepancies) == 4


@pytest.mark.unit
class TestNefLowerBound:
    """Test the wall lower bound over the whole fan."""

    def test_constant_bundle(self, tower4_mixed):
        report = nef_lower_bound_check(tower4_mixed, DivisorClass.of(3, 3, 3, 3))

        assert report.walls_checked == 32
        assert report.minimum == 3
        assert report.violations == []

    def test_hirzebruch(self, hirzebruch):
        report = nef_lower_bound_check(hirzebruch, DivisorClass.of(5, 3))

        assert report.walls_checked == 4
        assert report.violations == []

    def test_zero_bundle(self, tower5):
        report = nef_lower_bound_check(tower5, DivisorClass.zero(5))

        assert report.minimum == 0
        assert report.violations == []


@pytest.mark.integration
class TestCampaign:
    """Test randomized campaigns."""

    def test_instances_are_seeded(self):
        first = random_instances(10, seed=3)
        second = random_instances(10, seed=3)

        assert first == second
        assert first != random_instances(10, seed=4)

    def test_instances_respect_bounds(self):
        for numbers, bundle in random_instances(50, seed=1, max_height=4, max_bott_number=3,
                                                max_coefficient=5):
            assert 1 <= numbers.n <= 4
            assert all(1 <= c <= 3 for _, c in numbers.items())
            assert bundle.n == numbers.n
            assert all(0 <= a <= 5 for a in bundle.coeffs)

    def test_fixed_height(self):
        assert {numbers.n for numbers, _ in random_instances(20, seed=2, height=3)} == {3}

    def test_small_campaign(self):
        report = run_campaign(trials=10, seed=7, height=3)

        assert report.trials == 10
        assert report.fixed_points_checked == 10 * 8
        assert report.walls_checked == 10 * 12
        assert report.discrepancy_count == 0
        assert report.violation_count == 0

    def test_workers_do_not_change_report(self):
        serial = run_campaign(trials=12, seed=5, max_height=4)
        threaded = run_campaign(trials=12, seed=5, max_height=4, workers=4)

        assert serial == threaded

    def test_report_round_trips_through_json(self):
        report = run_campaign(trials=3, seed=9, height=2)

        assert CampaignReport.model_validate_json(report.model_dump_json()) == report
