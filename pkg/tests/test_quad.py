import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from glaisher_lab.identities import Family, FamilyParams, integrand
from glaisher_lab.quad import (
    QuadConfig,
    Scheme,
    WeightMode,
    integrate_01_weighted,
    integrate_interval,
    integrate_segment,
    integrate_semi_infinite,
)
from glaisher_lab.cxmath import NonFiniteError

SCHEMES = [QuadConfig(), QuadConfig(scheme=Scheme.DOUBLE_EXP)]


@pytest.mark.parametrize("cfg", SCHEMES, ids=["gauss", "double_exp"])
def test_weighted_examples(cfg):
    one = integrate_01_weighted(lambda t: np.ones_like(t), WeightMode.INV_SQRT_1MT2, cfg)
    assert abs(one.value - math.pi / 2) <= 1e-14 and one.converged
    r = integrate_01_weighted(lambda t: 1 / (1 + 8 * t * t), WeightMode.INV_SQRT_1MT2, cfg)
    assert abs(r.value - math.pi / 6) <= 1e-13
    r = integrate_01_weighted(lambda t: t / np.sqrt(1 + t * t), WeightMode.INV_SQRT_1MT2, cfg)
    assert abs(r.value - math.pi / 4) <= 1e-13


def test_unweighted_endpoint_singularity():
    # t / sqrt(1 - t^4) has an inverse square root at t = 1
    r = integrate_01_weighted(lambda t: t / np.sqrt((1 - t * t) * (1 + t * t)), WeightMode.NONE)
    assert abs(r.value - math.pi / 4) <= 1e-12 and r.converged


@pytest.mark.parametrize("cfg", SCHEMES, ids=["gauss", "double_exp"])
def test_semi_infinite_examples(cfg):
    r = integrate_semi_infinite(lambda x: np.exp(-x), 1.0, cfg)
    assert abs(r.value - 1) <= 1e-12
    p = FamilyParams(Family.GLAISHER1, a=1.0)
    r = integrate_semi_infinite(lambda x: integrand(Family.GLAISHER1, p, x), 1.0, cfg)
    assert abs(r.value - math.pi / 8) <= 1e-8
    p = FamilyParams(Family.GLAISHER2)
    r = integrate_semi_infinite(lambda x: integrand(Family.GLAISHER2, p, x), 1.0, cfg)
    assert abs(r.value) <= 1e-8


def test_segment_examples():
    r = integrate_segment(lambda z: np.ones_like(z), 0, 1j)
    assert abs(r.value - 1j) <= 1e-15
    r = integrate_segment(lambda z: z, 0, 1 + 1j)
    assert abs(r.value - 1j) <= 1e-15


@settings(deadline=None, max_examples=30)
@given(st.floats(0.05, 20), st.integers(0, 6))
def test_schemes_agree_on_smooth_integrands(c, p):
    f = lambda t: t**p / (1 + c * t * t)
    a = integrate_01_weighted(f, WeightMode.INV_SQRT_1MT2, SCHEMES[0]).value
    b = integrate_01_weighted(f, WeightMode.INV_SQRT_1MT2, SCHEMES[1]).value
    assert abs(a - b) <= 1e-11 * max(1, abs(a))


@settings(deadline=None, max_examples=30)
@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.1, 4))
def test_interval_additivity(a, m, w):
    b, c = a + w, a + w / 2 + m * 0
    f = lambda x: np.cos(x) * np.exp(-x * x / 4)
    whole = integrate_interval(f, a, b).value
    parts = integrate_interval(f, a, c).value + integrate_interval(f, c, b).value
    assert abs(whole - parts) <= 1e-12


def test_non_finite_integrand_raises():
    with pytest.raises(NonFiniteError):
        integrate_interval(lambda x: 1 / (x - 0.5) if np.ndim(x) == 0 else np.where(x > 0, np.nan, 0.0), -1, 1)


def test_budget_exhaustion_is_reported():
    cfg = QuadConfig(max_evals=50)
    r = integrate_01_weighted(lambda t: np.sqrt(np.abs(t - 0.3)), WeightMode.INV_SQRT_1MT2, cfg)
    assert not r.converged
    assert r.evaluations <= 200


@pytest.mark.parametrize(
    "kwargs", [dict(abs_tol=0), dict(rel_tol=-1), dict(max_levels=2), dict(max_evals=0)]
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        QuadConfig(**kwargs)


def test_scheme_from_string():
    assert QuadConfig(scheme="double_exp").scheme is Scheme.DOUBLE_EXP


def test_semi_infinite_rejects_bad_hint():
    with pytest.raises(ValueError):
        integrate_semi_infinite(lambda x: np.exp(-x), 0.0)
