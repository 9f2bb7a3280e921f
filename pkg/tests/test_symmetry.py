import math

import mpmath
import pytest

from glaisher_lab.identities import Family, FamilyParams, jacobian_deviation, symmetry_check, verify
from glaisher_lab.identities.symmetry import chain_factor, real_axis_integral, sym_integrand


@pytest.mark.parametrize("n", [1, 3, 5])
def test_th1_symmetry(n, cfg):
    rep = symmetry_check("TH1_SYM", n, cfg=cfg)
    assert rep.abs_err <= 1e-8 and rep.passed
    assert rep.extra["jacobian_deviation"] <= 1e-6


@pytest.mark.parametrize("n, k", [(2, 0), (4, 1), (6, 2)])
def test_th3_symmetry(n, k, cfg):
    rep = symmetry_check("TH3_SYM", n, k, cfg)
    assert rep.abs_err <= 1e-8 and rep.passed


def test_th1_chain_reproduces_theorem(cfg):
    rep = symmetry_check("TH1_SYM", 3, cfg=cfg)
    assert abs(rep.extra["scaled_real"] - math.pi / 8) <= 1e-9


def test_th3_real_axis_value(cfg):
    # independent oracle for the real-axis integral at (2, 0): 1/12
    def f(x):
        u = mpmath.sin(mpmath.pi * x / 4)
        al = 4 * mpmath.asinh(u)
        return u**2 / ((mpmath.cos(mpmath.pi * x) + mpmath.cosh(al)) * mpmath.sinh(al / 2))

    oracle = float(mpmath.quad(f, [0, 1, 2]))
    assert abs(real_axis_integral("TH3_SYM", 2, 0, cfg).value.real - oracle) <= 1e-13
    assert abs(oracle - 1 / 12) <= 1e-13


@pytest.mark.parametrize("n, k", [(2, 0), (4, 1), (6, 0)])
def test_th3_substitution_factor_is_two_pi_over_n(n, k, cfg):
    # sqrt(t) = sin(pi x/2n) gives dt/sqrt(1-t^2) = (2 pi/n) u^2 / sinh(alpha/n) dx
    rep = symmetry_check("TH3_SYM", n, k, cfg)
    lhs = verify(Family.TH3, FamilyParams(Family.TH3, n=n, k=k), cfg).lhs.real
    assert chain_factor("TH3_SYM", n) == 2 * math.pi / n
    assert abs(rep.extra["substituted_real"] - lhs) <= 1e-9
    assert abs(lhs / rep.extra["scaled_real"] - 2) <= 1e-9


@pytest.mark.parametrize("n", [1, 2, 3, 8])
def test_jacobian(n):
    assert jacobian_deviation(n) <= 1e-6


def test_integrand_removable_at_zero():
    assert sym_integrand("TH1_SYM", 0, 3) == 0
    assert sym_integrand("TH3_SYM", 0, 4, 1) == 0


@pytest.mark.parametrize("family, n, k", [("TH1_SYM", 2, None), ("TH3_SYM", 4, 2), ("TH3_SYM", 3, None)])
def test_validation(family, n, k):
    with pytest.raises(ValueError):
        symmetry_check(family, n, k)
