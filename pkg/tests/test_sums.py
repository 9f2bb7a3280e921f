import math

import pytest

from glaisher_lab.identities import SumKind, expected_sum, finite_sum, sum_checks
from glaisher_lab.identities.sums import th3_alt, th3_sum, valid_for


def test_examples():
    assert abs(finite_sum(SumKind.LEMMA3, 3) - 3) <= 1e-15
    assert abs(finite_sum(SumKind.TAN_EVEN, 2) - (-2)) <= 1e-15
    assert abs(th3_alt(2) - 1 / 3) <= 1e-14
    assert abs(th3_sum(2, 0) - 1 / 3) <= 1e-14


@pytest.mark.parametrize("n", range(1, 26))
def test_all_identities(n):
    for kind, value, expected in sum_checks(n):
        assert abs(value - expected) <= 1e-12, kind


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_alt_sum_also_holds_for_odd_n(n):
    assert abs(th3_alt(n) - th3_sum(n, 0)) <= 1e-12


def test_validity():
    assert valid_for(SumKind.LEMMA3, 5) and not valid_for(SumKind.LEMMA3, 4)
    assert valid_for(SumKind.TAN_EVEN, 4) and not valid_for(SumKind.TAN_EVEN, 5)
    with pytest.raises(ValueError):
        finite_sum(SumKind.TAN_EVEN, 3)
    with pytest.raises(ValueError):
        expected_sum(SumKind.LEMMA3, 2)
    with pytest.raises(ValueError):
        finite_sum(SumKind.TH3_SUM, 4, 2)


def test_th3_sum_matches_rhs_scale():
    # the theorem's right side is (pi/4) * th3_sum up to the (-1)^k 2^-2k factor
    from glaisher_lab.identities.families import th3_rhs

    assert abs(th3_rhs(2, 0) - math.pi / 4 * th3_sum(2, 0)) <= 1e-16
