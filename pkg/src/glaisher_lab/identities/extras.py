"""Background checks: the Ismail-Valent integral and the large-n limit."""
from __future__ import annotations

import math
import time

import numpy as np

from ..quad import QuadConfig, integrate_semi_infinite
from ..report import VerificationReport


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    if not (a > 0 and b > 0):
        raise ValueError("agm needs positive arguments")
    for _ in range(64):
        if abs(a - b) <= 4 * math.ulp(max(a, b)):
            break
        a, b = (a + b) / 2, math.sqrt(a * b)
    return (a + b) / 2


def ellipk(modulus: float) -> float:
    """Complete elliptic integral of the first kind K(k), modulus k in [0, 1)."""
    if not 0 <= modulus < 1:
        raise ValueError(f"modulus must lie in [0, 1), got {modulus}")
    return math.pi / (2 * agm(1.0, math.sqrt((1 - modulus) * (1 + modulus))))


def complementary_periods(modulus: float) -> tuple[float, float]:
    if not 0 < modulus < 1:
        raise ValueError(f"modulus must lie in (0, 1), got {modulus}")
    K = ellipk(modulus)
    Kp = math.pi / (2 * agm(1.0, modulus))
    return K, Kp


def iv_integrand(t, modulus: float):
    """1/(cos(K sqrt t) + cosh(K' sqrt t)), continued to t < 0 as 1/(cosh(K sqrt|t|) + cos(K' sqrt|t|))."""
    K, Kp = complementary_periods(modulus)
    t = np.asarray(t, dtype=float)
    r = np.sqrt(np.abs(t))
    return np.where(t >= 0, 1 / (np.cos(K * r) + np.cosh(Kp * r)), 1 / (np.cosh(K * r) + np.cos(Kp * r)))


def ismail_valent_check(modulus: float, cfg: QuadConfig = QuadConfig(), tol: float = 1e-6) -> VerificationReport:
    """Integral of iv_integrand over the real line, which should be 1.

    Each half is taken in u = sqrt|t| (dt = 2u du) so it decays exponentially.
    """
    start = time.perf_counter()
    K, Kp = complementary_periods(modulus)
    period = math.pi / max(K, Kp)
    pos = integrate_semi_infinite(lambda u: 2 * u / (np.cos(K * u) + np.cosh(Kp * u)), Kp, cfg, period)
    neg = integrate_semi_infinite(lambda u: 2 * u / (np.cosh(K * u) + np.cos(Kp * u)), K, cfg, period)
    rep = VerificationReport(
        family="IV",
        lhs=pos.value + neg.value,
        rhs=1 + 0j,
        tol=tol,
        converged=pos.converged and neg.converged,
        evaluations=pos.evaluations + neg.evaluations,
        runtime_ms=(time.perf_counter() - start) * 1e3,
        notes=[f"modulus={modulus!r} K={K:.12g} K'={Kp:.12g}", "exploratory: background identity"],
    )
    rep.extra["modulus"] = modulus
    if abs(rep.lhs - 2) <= tol:
        rep.notes.append(f"integral equals 2 to {abs(rep.lhs - 2):.1e}; the stated value 1 is off by a factor 2")
    return rep


def large_n_limit_check(n: int, a: float, x_points) -> float:
    """Max relative gap between the scaled TH1 integrand and the Glaisher integrand.

    With t = sin(x/n) the weighted TH1 integrand becomes F(sin(x/n))/n dx,
    which tends pointwise to sin x sinh(x/a) / ((cos 2x + cosh(2x/a)) x).
    """
    from .families import _glaisher1, _th1

    x = np.atleast_1d(np.asarray(x_points, dtype=float))
    if np.any(x <= 0):
        raise ValueError("x_points must be positive")
    scaled = _th1(np.sin(x / n), n, a) / n
    target = _glaisher1(x, a)
    return float(np.max(np.abs(scaled - target) / np.abs(target)))
