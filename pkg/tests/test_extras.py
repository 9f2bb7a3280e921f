import math

import mpmath
import pytest

from glaisher_lab.identities import agm, ellipk, ismail_valent_check, large_n_limit_check
from glaisher_lab.identities.extras import complementary_periods


def test_agm_and_k():
    assert agm(1.0, 1.0) == 1.0
    assert ellipk(0.0) == math.pi / 2
    K, Kp = complementary_periods(1 / math.sqrt(2))
    assert abs(K - Kp) <= 1e-14
    assert abs(K - 1.8540747) <= 1e-7


@pytest.mark.parametrize("k", [0.1, 0.5, 0.9, 0.99])
def test_ellipk_against_mpmath(k):
    # mpmath takes the parameter m = k^2
    assert abs(ellipk(k) - float(mpmath.ellipk(k * k))) <= 1e-14 * ellipk(k)


@pytest.mark.parametrize("modulus", [0.3, 0.5, 1 / math.sqrt(2), 0.9])
def test_ismail_valent_integral_equals_two(modulus, cfg):
    # the stated value is 1; two independent evaluations give 2 for every modulus
    rep = ismail_valent_check(modulus, cfg)
    assert abs(rep.lhs - 2) <= 1e-10
    assert any("factor 2" in note for note in rep.notes)


def test_ismail_valent_against_mpmath():
    K, Kp = complementary_periods(0.5)
    pos = mpmath.quad(lambda u: 2 * u / (mpmath.cos(K * u) + mpmath.cosh(Kp * u)), mpmath.linspace(0, 40, 41))
    neg = mpmath.quad(lambda u: 2 * u / (mpmath.cosh(K * u) + mpmath.cos(Kp * u)), mpmath.linspace(0, 40, 41))
    assert abs(float(pos + neg) - 2) <= 1e-10


@pytest.mark.xfail(strict=True, reason="the integral evaluates to 2, not the stated 1")
@pytest.mark.parametrize("modulus", [0.5, 1 / math.sqrt(2)])
def test_ismail_valent_stated_value(modulus, cfg):
    assert ismail_valent_check(modulus, cfg, tol=1e-6).passed


def test_large_n_limit():
    d101 = large_n_limit_check(101, 1.0, [1.0])
    assert d101 <= 0.05
    assert large_n_limit_check(1001, 1.0, [1.0]) < d101
    assert large_n_limit_check(101, 2.0, [0.5]) <= 0.05


def test_bad_inputs():
    with pytest.raises(ValueError):
        ellipk(1.0)
    with pytest.raises(ValueError):
        agm(0.0, 1.0)
    with pytest.raises(ValueError):
        large_n_limit_check(11, 1.0, [0.0])
