"""Real-axis versus imaginary-axis symmetry of the alpha-map integrals.

With alpha_z = 2n asinh(sin(pi z / 2n)) and y* the point where
alpha(i y*) = i pi n, both

    F1(z) = sin(pi z/2) sinh(alpha_z/2) / ((cos pi z + cosh alpha_z) sinh(alpha_z/n))
    F3(z) = sin(pi z/2n)^(4k+2) / ((cos pi z + cosh alpha_z) sinh(alpha_z/n))

integrate to the same value over [0, n] and over the segment from i y* to 0.
Substituting sqrt(t) = sin(pi x/2n) turns the TH1 (a = 1) integral into
(pi/n) times the F1 integral, and the TH3 integral into (2 pi/n) times
the F3 one: dt/sqrt(1-t^2) = (pi/n) 2u^2/sinh(alpha/n) dx with u = sin(pi x/2n).
"""
from __future__ import annotations

import enum
import math
import time

import numpy as np

from ..cxmath import alpha, y_star
from ..quad import QuadConfig, integrate_interval, integrate_segment
from ..report import VerificationReport


class SymFamily(str, enum.Enum):
    TH1_SYM = "TH1_SYM"
    TH3_SYM = "TH3_SYM"

    def __str__(self):
        return self.value


def _validate(family: SymFamily, n: int, k: int | None):
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if family is SymFamily.TH1_SYM and n % 2 == 0:
        raise ValueError(f"TH1_SYM requires odd n, got {n}")
    if family is SymFamily.TH3_SYM and (k is None or not 0 <= k < n // 2):
        raise ValueError(f"TH3_SYM requires 0 <= k < floor(n/2), got n={n}, k={k}")


def sym_integrand(family, z, n: int, k: int = 0):
    family = SymFamily(family)
    z = np.asarray(z, dtype=np.complex128)
    al = alpha(z, n)
    den = (np.cos(np.pi * z) + np.cosh(al)) * np.sinh(al / n)
    if family is SymFamily.TH1_SYM:
        num = np.sin(np.pi * z / 2) * np.sinh(al / 2)
    else:
        num = np.sin(np.pi * z / (2 * n)) ** (4 * k + 2)
    with np.errstate(invalid="ignore", divide="ignore"):
        val = num / den
    # removable: both vanish at z = 0, the ratio like z
    return np.where(z == 0, 0j, val)


def substitution_height(s, n: int):
    """y(s) with alpha(i y) = i pi s, i.e. pi y = alpha_s."""
    return np.real(alpha(np.asarray(s, dtype=float), n)) / np.pi


def jacobian_deviation(n: int, points: int = 20, h: float = 1e-5) -> float:
    """Max relative gap in dy sinh(alpha_s/n) = ds sin(pi s/n), by central differences."""
    s = n * (np.arange(points) + 0.5) / points
    dy = (substitution_height(s + h, n) - substitution_height(s - h, n)) / (2 * h)
    lhs = dy * np.sinh(np.real(alpha(s, n)) / n)
    rhs = np.sin(np.pi * s / n)
    return float(np.max(np.abs(lhs - rhs) / np.abs(rhs)))


def real_axis_integral(family, n: int, k: int = 0, cfg: QuadConfig = QuadConfig()):
    return integrate_interval(lambda x: sym_integrand(family, x, n, k), 0.0, float(n), cfg)


def imaginary_axis_integral(family, n: int, k: int = 0, cfg: QuadConfig = QuadConfig()):
    return integrate_segment(lambda z: sym_integrand(family, z, n, k), 1j * y_star(n), 0j, cfg)


def chain_factor(family, n: int) -> float:
    """Factor mapping the real-axis integral back to the t-integral."""
    return (math.pi if SymFamily(family) is SymFamily.TH1_SYM else 2 * math.pi) / n


def symmetry_check(
    family, n: int, k: int | None = None, cfg: QuadConfig = QuadConfig(), tol: float = 1e-8,
    jacobian_tol: float = 1e-6,
) -> VerificationReport:
    """Compare the imaginary-segment integral (lhs) with the real-axis one (rhs)."""
    family = SymFamily(family)
    if family is SymFamily.TH1_SYM and k is None:
        k = 0
    _validate(family, n, k)
    start = time.perf_counter()
    j_real = real_axis_integral(family, n, k, cfg)
    j_imag = imaginary_axis_integral(family, n, k, cfg)
    jac = jacobian_deviation(n)
    rep = VerificationReport(
        family=family.value,
        lhs=j_imag.value,
        rhs=j_real.value,
        tol=tol,
        n=n,
        k=k if family is SymFamily.TH3_SYM else None,
        converged=j_real.converged and j_imag.converged,
        side_checks_ok=jac <= jacobian_tol,
        evaluations=j_real.evaluations + j_imag.evaluations,
        runtime_ms=(time.perf_counter() - start) * 1e3,
    )
    rep.extra["jacobian_deviation"] = jac
    rep.extra["scaled_real"] = math.pi / n * j_real.value.real
    rep.extra["substitution_factor"] = chain_factor(family, n)
    rep.extra["substituted_real"] = chain_factor(family, n) * j_real.value.real
    rep.notes.append(f"jacobian finite-difference deviation {jac:.2e}")
    if not rep.converged:
        rep.notes.append("quadrature did not converge")
    return rep
