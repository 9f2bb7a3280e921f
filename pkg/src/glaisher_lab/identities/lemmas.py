"""The elementary integral behind every expansion term, and its a = 1 corollary."""
from __future__ import annotations

import math
import time

from ..quad import QuadConfig, WeightMode, integrate_01_weighted
from ..report import VerificationReport
from .families import lemma2_integrand


def lemma2_closed_form(a: float, theta: float) -> complex:
    """(atan a + i atanh cos theta) / (i (a cos theta + i)(a + i cos theta)).

    Equals the integral over [0, 1] of
    t / ((t^2 (a^2 - 1 + 2ia cos theta) - a^2 sin^2 theta) sqrt(1 - t^2) sqrt(1 + t^2/a^2)).
    """
    if not a > 0:
        raise ValueError(f"a must be positive, got {a}")
    if not 0 < theta < math.pi:
        raise ValueError(f"theta must lie strictly inside (0, pi), got {theta}")
    c = 0.0 if theta == math.pi / 2 else math.cos(theta)
    return (math.atan(a) + 1j * math.atanh(c)) / (1j * (a * c + 1j) * (a + 1j * c))


def verify_lemma2(a: float, theta: float, cfg: QuadConfig = QuadConfig(), tol: float = 1e-11) -> VerificationReport:
    start = time.perf_counter()
    rhs = lemma2_closed_form(a, theta)
    res = integrate_01_weighted(lambda t: lemma2_integrand(t, a, theta), WeightMode.NONE, cfg)
    rep = VerificationReport(
        family="LEMMA2",
        lhs=res.value,
        rhs=rhs,
        tol=tol,
        a=a,
        converged=res.converged,
        evaluations=res.evaluations,
        runtime_ms=(time.perf_counter() - start) * 1e3,
    )
    rep.extra["theta"] = theta
    if not res.converged:
        rep.notes.append(f"quadrature did not converge (error estimate {res.error_estimate:.3e})")
    return rep


def lemma2_consequence(theta: float) -> float:
    """(pi/2) cot^2 theta / (1 + cos^2 theta), the weighted integral of 1/(4t^2 + sin^4/cos^2)."""
    if not 0 < theta < math.pi / 2:
        raise ValueError(f"theta must lie strictly inside (0, pi/2), got {theta}")
    c = math.cos(theta)
    cot = c / math.sin(theta)
    return math.pi / 2 * cot * cot / (1 + c * c)


def verify_lemma2_consequence(theta: float, cfg: QuadConfig = QuadConfig(), tol: float = 1e-12) -> VerificationReport:
    start = time.perf_counter()
    s, c = math.sin(theta), math.cos(theta)
    shift = s**4 / c**2
    res = integrate_01_weighted(lambda t: 1.0 / (4 * t * t + shift), WeightMode.INV_SQRT_1MT2, cfg)
    rep = VerificationReport(
        family="LEMMA2_CONSEQUENCE",
        lhs=res.value,
        rhs=complex(lemma2_consequence(theta)),
        tol=tol,
        converged=res.converged,
        evaluations=res.evaluations,
        runtime_ms=(time.perf_counter() - start) * 1e3,
    )
    rep.extra["theta"] = theta
    return rep

