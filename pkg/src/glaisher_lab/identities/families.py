"""Integrand families, closed-form right-hand sides and the verify harness."""
from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass

import numpy as np

from ..cxmath import check_finite
from ..quad import (
    QuadConfig,
    QuadResult,
    WeightMode,
    integrate_01_weighted,
    integrate_semi_infinite,
)
from ..report import VerificationReport
from ..specfrac import angle


class Family(str, enum.Enum):
    TH1 = "TH1"
    TH2 = "TH2"
    TH2_GENERAL_A = "TH2_GENERAL_A"
    TH3 = "TH3"
    GLAISHER1 = "GLAISHER1"
    GLAISHER2 = "GLAISHER2"
    LEMMA2 = "LEMMA2"
    IV = "IV"

    def __str__(self):
        return self.value


DEFAULT_TOL = {
    Family.TH1: 1e-10,
    Family.TH2: 1e-10,
    Family.TH2_GENERAL_A: 1e-10,
    Family.TH3: 1e-10,
    Family.GLAISHER1: 1e-8,
    Family.GLAISHER2: 1e-8,
    Family.LEMMA2: 1e-11,
    Family.IV: 1e-6,
}


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    n: int | None = None
    a: float | None = None
    k: int | None = None
    modulus: float | None = None
    j: int | None = None

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        if fam in (Family.TH1, Family.TH2, Family.TH2_GENERAL_A, Family.TH3, Family.LEMMA2):
            if self.n is None or self.n < 1:
                raise ValueError(f"{fam} needs a positive integer n")
        if fam in (Family.TH1, Family.TH2_GENERAL_A, Family.GLAISHER1, Family.LEMMA2):
            if self.a is None or not self.a > 0 or not math.isfinite(self.a):
                raise ValueError(f"{fam} needs a positive finite a")
        if fam is Family.TH1 and self.n % 2 == 0:
            raise ValueError(f"TH1 requires odd n, got {self.n}")
        if fam in (Family.TH2, Family.TH2_GENERAL_A) and self.n % 2:
            raise ValueError(f"{fam} requires even n, got {self.n}")
        if fam is Family.TH3:
            if self.k is None or not 0 <= self.k < self.n // 2:
                raise ValueError(f"TH3 requires 0 <= k < floor(n/2), got n={self.n}, k={self.k}")
        if fam is Family.LEMMA2:
            if self.j is None or not 1 <= self.j <= self.n:
                raise ValueError(f"LEMMA2 requires 1 <= j <= n, got j={self.j}")
        if fam is Family.IV:
            if self.modulus is None or not 0 < self.modulus < 1:
                raise ValueError(f"IV requires modulus in (0, 1), got {self.modulus}")

    @property
    def a_eff(self) -> float:
        return 1.0 if self.a is None else self.a

    @property
    def exploratory(self) -> bool:
        """Odd-n TH3 cases and IV are probes rather than claims."""
        return (self.family is Family.TH3 and self.n % 2 == 1) or self.family is Family.IV


def _sqrt_1mt2(t):
    return np.sqrt((1 - t) * (1 + t))


def _th1(t, n, a):
    t = np.asarray(t, dtype=float)
    A, B = n * np.arcsin(t), n * np.arcsinh(t / a)
    Q = np.cos(2 * A) + np.cosh(2 * B)
    with np.errstate(invalid="ignore", divide="ignore"):
        val = np.sin(A) * np.sinh(B) / (Q * t * np.sqrt(1 + (t / a) ** 2))
    # O(t^2) numerator against 1/t
    return np.where(t == 0, 0.0, val)


def _th2(t, n, a):
    t = np.asarray(t, dtype=float)
    A, B = n * np.arcsin(t), n * np.arcsinh(t / a)
    Q = np.cos(2 * A) + np.cosh(2 * B)
    return np.cos(A) * np.cosh(B) / Q * t / np.sqrt(1 + (t / a) ** 2)


def _th3(t, n, k):
    t = np.asarray(t, dtype=float)
    r = np.sqrt(t)
    Q = np.cos(2 * n * np.arcsin(r)) + np.cosh(2 * n * np.arcsinh(r))
    return t ** (2 * k) / Q


def _glaisher1(x, a):
    x = np.asarray(x, dtype=float)
    with np.errstate(invalid="ignore", divide="ignore"):
        val = np.sin(x) * np.sinh(x / a) / ((np.cos(2 * x) + np.cosh(2 * x / a)) * x)
    return np.where(x == 0, 0.0, val)


def _glaisher2(x):
    x = np.asarray(x, dtype=float)
    return np.cos(x) * np.cosh(x) * x / (np.cos(2 * x) + np.cosh(2 * x))


def lemma2_integrand(t, a: float, theta: float):
    """t / ((t^2 D - a^2 sin^2 theta) sqrt(1 - t^2) sqrt(1 + t^2/a^2)), D = a^2 - 1 + 2ia cos theta."""
    t = np.asarray(t, dtype=float)
    s, c = math.sin(theta), (0.0 if theta == math.pi / 2 else math.cos(theta))
    D = a * a - 1 + 2j * a * c
    return t / ((t * t * D - a * a * s * s) * _sqrt_1mt2(t) * np.sqrt(1 + (t / a) ** 2))


def lemma2_theta(p: FamilyParams) -> float:
    return angle(p.n, p.j)[0]


def integrand(family, params: FamilyParams, t, include_weight: bool = False):
    """Pointwise integrand of ``family``.

    For the [0, 1] theorem families the 1/sqrt(1 - t^2) weight is left out
    unless ``include_weight``; the semi-infinite families and LEMMA2 are
    always returned in full.
    """
    fam = Family(family)
    p = params
    if fam is Family.TH1:
        val = _th1(t, p.n, p.a)
    elif fam is Family.TH2:
        val = _th2(t, p.n, 1.0)
    elif fam is Family.TH2_GENERAL_A:
        val = _th2(t, p.n, p.a)
    elif fam is Family.TH3:
        val = _th3(t, p.n, p.k)
    elif fam is Family.GLAISHER1:
        return check_finite(_glaisher1(t, p.a), "integrand")
    elif fam is Family.GLAISHER2:
        return check_finite(_glaisher2(t), "integrand")
    elif fam is Family.LEMMA2:
        return check_finite(lemma2_integrand(t, p.a, lemma2_theta(p)), "integrand")
    elif fam is Family.IV:
        from .extras import iv_integrand

        return check_finite(iv_integrand(t, p.modulus), "integrand")
    else:  # pragma: no cover
        raise ValueError(fam)
    if include_weight:
        val = val / _sqrt_1mt2(np.asarray(t, dtype=float))
    return check_finite(val, "integrand")


def th2_general_rhs(n: int, a: float) -> complex:
    """Closed form of the general-a even-n integral; the terms are complex but sum to a real."""
    sign = -1 if (n // 2) % 2 else 1
    head = sign / 2 * a / (a ** (-n) + a**n) * math.atan(1 / a)
    total = 0j
    for j in range(1, n + 1):
        _, s, c = angle(n, j)
        D = a * a - 1 + 2j * a * c
        total += (-1) ** j * (math.atanh(c) - 1j * math.atan(a)) / (2 * n * D) * s
    return head + a * a * total


def th3_rhs(n: int, k: int) -> float:
    terms = []
    for j in range(1, n // 2 + 1):
        _, s, c = angle(n, j)
        tan = s / c
        sign = 1 if j % 2 else -1
        terms.append(sign * tan / math.cosh(n * math.asinh(tan)) * (s * s / c) ** (2 * k))
    return math.pi * (-1) ** k / (2 ** (2 * k + 1) * n) * math.fsum(terms)


def rhs_closed_form(family, params: FamilyParams) -> complex:
    fam = Family(family)
    p = params
    if fam in (Family.TH1, Family.GLAISHER1):
        return complex(math.atan(p.a) / 2)
    if fam in (Family.TH2, Family.GLAISHER2):
        return 0j
    if fam is Family.TH2_GENERAL_A:
        return th2_general_rhs(p.n, p.a)
    if fam is Family.TH3:
        return complex(th3_rhs(p.n, p.k))
    if fam is Family.LEMMA2:
        from .lemmas import lemma2_closed_form

        return lemma2_closed_form(p.a, lemma2_theta(p))
    if fam is Family.IV:
        return 1 + 0j
    raise ValueError(fam)  # pragma: no cover


GLAISHER2_DECAY = 1.0


def glaisher1_decay(a: float) -> float:
    # numerator ~ e^{x/a}, denominator ~ e^{2x/a}
    return 1.0 / a


def lhs_quadrature(family, params: FamilyParams, cfg: QuadConfig = QuadConfig()) -> QuadResult:
    fam = Family(family)
    if fam in (Family.TH1, Family.TH2, Family.TH2_GENERAL_A, Family.TH3):
        return integrate_01_weighted(lambda t: integrand(fam, params, t), WeightMode.INV_SQRT_1MT2, cfg)
    if fam is Family.GLAISHER1:
        return integrate_semi_infinite(lambda x: integrand(fam, params, x), glaisher1_decay(params.a), cfg)
    if fam is Family.GLAISHER2:
        return integrate_semi_infinite(lambda x: integrand(fam, params, x), GLAISHER2_DECAY, cfg)
    if fam is Family.LEMMA2:
        return integrate_01_weighted(lambda t: integrand(fam, params, t), WeightMode.NONE, cfg)
    raise ValueError(f"{fam} has no single-quadrature left-hand side")


def verify(family, params: FamilyParams, cfg: QuadConfig = QuadConfig(), tol: float | None = None) -> VerificationReport:
    """Quadrature LHS against the closed-form RHS for one parameter point."""
    fam = Family(family)
    tol = DEFAULT_TOL[fam] if tol is None else tol
    if fam is Family.IV:
        from .extras import ismail_valent_check

        return ismail_valent_check(params.modulus, cfg, tol)
    start = time.perf_counter()
    notes: list[str] = []
    try:
        res = lhs_quadrature(fam, params, cfg)
    except ArithmeticError as exc:
        res = QuadResult(complex("nan"), math.inf, 0, False)
        notes.append(f"quadrature failed: {exc}")
    rhs = rhs_closed_form(fam, params)
    side_ok = True
    if fam is Family.TH2_GENERAL_A:
        side_ok = abs(rhs.imag) <= tol
        notes.append(f"imaginary part of closed form: {rhs.imag:.3e}")
        rhs = complex(rhs.real)
    if not res.converged and not notes:
        notes.append(f"quadrature did not converge (error estimate {res.error_estimate:.3e})")
    if params.exploratory:
        notes.append("exploratory: outside the asserted parameter range")
    return VerificationReport(
        family=fam.value,
        lhs=res.value,
        rhs=rhs,
        tol=tol,
        n=params.n,
        a=params.a,
        k=params.k,
        converged=res.converged,
        side_checks_ok=side_ok,
        evaluations=res.evaluations,
        runtime_ms=(time.perf_counter() - start) * 1e3,
        notes=notes,
    )
