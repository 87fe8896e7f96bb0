"""
Tests for the Picard lattice module.
"""

import pytest

from src.divisor.picard import (
    DivisorClass,
    RayDivisor,
    class_of_fiber_divisor,
    is_ample,
    is_nef,
    prime_divisor,
    principal_divisor,
    reduce_to_basis,
    restrict_to_stage,
)
from src.tower.fan import BottNumbers, build_tower
from src.utils.errors import IndexOutOfRange, LengthMismatch, NonPositiveBottNumbers


@pytest.mark.unit
class TestDivisorClass:
    """Test divisor class arithmetic."""

    def test_one_based_indexing(self):
        divisor = DivisorClass.of(1, 3, 8, 4)

        assert divisor[1] == 1
        assert divisor[4] == 4
        assert len(divisor) == 4
        with pytest.raises(IndexOutOfRange):
            divisor[0]

    def test_arithmetic(self):
        a = DivisorClass.of(1, 2, 3)
        b = DivisorClass.of(4, -5, 6)

        assert a + b == DivisorClass.of(5, -3, 9)
        assert a - b == DivisorClass.of(-3, 7, -3)
        assert -a == DivisorClass.of(-1, -2, -3)
        assert 3 * a == a * 3 == a.scale(3) == DivisorClass.of(3, 6, 9)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            DivisorClass.of(1, 2) + DivisorClass.of(1, 2, 3)

    def test_zero_and_unit(self):
        assert DivisorClass.zero(3) == DivisorClass.of(0, 0, 0)
        assert DivisorClass.unit(3, 2) == DivisorClass.of(0, 1, 0)
        with pytest.raises(IndexOutOfRange):
            DivisorClass.unit(3, 4)


@pytest.mark.unit
class TestReduction:
    """Test reduction of ray divisors to the D basis."""

    def test_upper_rays_are_the_basis(self, tower4_mixed):
        for i in range(1, 5):
            reduced = reduce_to_basis(tower4_mixed, prime_divisor(tower4_mixed, 4 + i))
            assert reduced == DivisorClass.unit(4, i)

    def test_lower_ray_relation(self, tower4_mixed):
        # D'_3 ~ D_3 - c_{1,3} D_1 - c_{2,3} D_2 with c_{1,3}=2, c_{2,3}=4
        assert reduce_to_basis(tower4_mixed, prime_divisor(tower4_mixed, 3)) == \
            DivisorClass.of(-2, -4, 1, 0)
        assert reduce_to_basis(tower4_mixed, prime_divisor(tower4_mixed, 1)) == \
            DivisorClass.of(1, 0, 0, 0)

    def test_hirzebruch_relation(self, hirzebruch):
        assert reduce_to_basis(hirzebruch, prime_divisor(hirzebruch, 2)) == DivisorClass.of(-2, 1)

    @pytest.mark.parametrize("character", [(1, 0, 0, 0), (0, 0, 1, 0), (3, -1, 2, 5)])
    def test_principal_divisors_reduce_to_zero(self, tower4_mixed, character):
        divisor = principal_divisor(tower4_mixed, character)

        assert reduce_to_basis(tower4_mixed, divisor) == DivisorClass.zero(4)

    def test_principal_divisor_coefficients(self, hirzebruch):
        # <u, v_rho> for u = (1, 1): rays (1,0), (0,1), (-1,2), (0,-1)
        assert principal_divisor(hirzebruch, (1, 1)).coeffs == (1, 1, 1, -1)

    def test_ray_divisor_arithmetic(self, hirzebruch):
        total = prime_divisor(hirzebruch, 1) + prime_divisor(hirzebruch, 3).scale(2)

        assert total == RayDivisor((1, 0, 2, 0))
        assert reduce_to_basis(hirzebruch, total) == DivisorClass.of(3, 0)

    def test_bad_inputs(self, hirzebruch):
        with pytest.raises(IndexOutOfRange):
            prime_divisor(hirzebruch, 5)
        with pytest.raises(LengthMismatch):
            principal_divisor(hirzebruch, (1, 2, 3))
        with pytest.raises(LengthMismatch):
            reduce_to_basis(hirzebruch, RayDivisor((1, 0, 0)))


@pytest.mark.unit
class TestNefAndAmple:
    """Test the nef and ample cones."""

    @pytest.mark.parametrize("coeffs,nef,ample", [
        ((1, 3, 8, 4), True, True),
        ((0, 3, 8, 4), True, False),
        ((0, 0, 0, 0), True, False),
        ((1, -1, 8, 4), False, False),
    ])
    def test_classification(self, tower4, coeffs, nef, ample):
        divisor = DivisorClass(coeffs)

        assert is_nef(tower4, divisor) is nef
        assert is_ample(tower4, divisor) is ample

    def test_requires_positive_bott_numbers(self):
        tower = build_tower(BottNumbers(3, ((1, 0), (2,))))

        with pytest.raises(NonPositiveBottNumbers):
            is_nef(tower, DivisorClass.of(1, 1, 1))
        with pytest.raises(NonPositiveBottNumbers):
            is_ample(tower, DivisorClass.of(1, 1, 1))

    def test_length_checked(self, tower4):
        with pytest.raises(LengthMismatch):
            is_nef(tower4, DivisorClass.of(1, 2, 3))


@pytest.mark.unit
class TestRestriction:
    """Test restriction to fibre subtowers and the fibre class."""

    def test_restrict_to_stage(self, tower4, bundle_1384):
        assert restrict_to_stage(tower4, bundle_1384, 2) == DivisorClass.of(3, 8, 4)
        assert restrict_to_stage(tower4, bundle_1384, 4) == DivisorClass.of(4)

    def test_restrict_bounds(self, tower4, bundle_1384):
        with pytest.raises(IndexOutOfRange):
            restrict_to_stage(tower4, bundle_1384, 1)
        with pytest.raises(IndexOutOfRange):
            restrict_to_stage(tower4, bundle_1384, 5)

    def test_restriction_keeps_nefness(self, tower4_mixed):
        from src.tower.fan import vertical_subtower

        divisor = DivisorClass.of(2, 0, 5, 1)
        restricted = restrict_to_stage(tower4_mixed, divisor, 3)

        assert is_nef(vertical_subtower(tower4_mixed, 3, 4), restricted)

    def test_fiber_class(self, tower5):
        assert class_of_fiber_divisor(tower5) == DivisorClass.of(1, 0, 0, 0, 0)

    def test_fiber_class_needs_two_stages(self):
        with pytest.raises(IndexOutOfRange):
            class_of_fiber_divisor(build_tower(BottNumbers(1)))
