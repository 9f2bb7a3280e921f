"""Roots, sign pairs, residues and partial fraction expansions.

Three expansions are built here, all over the angles

    theta_j = pi (2j - 1) / (2n),   j = 1..n.

* odd n:   2n sin(n asin t) sinh(n asinh(t/a)) / (t^2 Q(t^2))
* even n:  cos(n asin t) cosh(n asinh(t/a)) / Q(t^2)  = C + sum
* a = 1:   t^(2k) / Qs(t),  Qs(t) = cos(2n asin sqrt t) + cosh(2n asinh sqrt t)

with Q(x) = cos(2n asin sqrt x) + cosh(2n asinh(sqrt x / a)). Poles are
certified against the exact polynomials from :mod:`glaisher_lab.polyexact`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import polyexact
from .cxmath import casin, casinh, check_finite
from .report import VerificationReport

LEMMA1, LEMMA4, LEMMA5 = "LEMMA1", "LEMMA4", "LEMMA5"


def angle(n: int, j: int) -> tuple[float, float, float]:
    """(theta_j, sin theta_j, cos theta_j); the cosine is exactly 0 at theta = pi/2."""
    theta = math.pi * (2 * j - 1) / (2 * n)
    c = 0.0 if 2 * j - 1 == n else math.cos(theta)
    return theta, math.sin(theta), c


def _check_index(n: int, j: int, upper: int):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= j <= upper:
        raise IndexError(f"root index j={j} outside 1..{upper}")


@dataclass(frozen=True)
class Branch:
    """asin sqrt(x_j) = xi - i eta and asinh sqrt(x_j) = phi - i psi."""

    xi: float
    eta: float
    phi: float
    psi: float


@dataclass(frozen=True)
class RootData:
    j: int
    theta: float
    x: complex | None
    y: complex | None = None
    branch: Branch | None = None
    sign_mu: int = 1
    sign_nu: int = 1
    degenerate: bool = False


@dataclass(frozen=True)
class PFTerm:
    pole: complex
    residue: complex


@dataclass(frozen=True)
class PFExpansion:
    """constant + sum residue / (X - pole), with X = t^2 (LEMMA1/4) or X = t (LEMMA5)."""

    family: str
    params: dict
    constant: complex
    terms: tuple[PFTerm, ...]
    exact_residues: tuple[complex, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def variable(self) -> polyexact.Variable:
        if self.family == LEMMA5:
            return polyexact.Variable.T_DIRECT
        return polyexact.Variable.X_EQUALS_T_SQUARED

    def evaluate(self, X):
        """Value of the rational function at X (scalar or array)."""
        X = np.asarray(X, dtype=np.complex128)
        out = np.full(X.shape, complex(self.constant))
        for term in self.terms:
            out = out + term.residue / (X - term.pole)
        return complex(out) if out.ndim == 0 else out

    def reassemble(self, t):
        """Value as a function of the original variable t."""
        t = np.asarray(t, dtype=np.complex128)
        X = t if self.family == LEMMA5 else t * t
        return self.evaluate(X)


# ---------------------------------------------------------------- LEMMA1 / LEMMA4


def _denominator_D(a, c: float) -> complex:
    return a * a - 1 + 2j * a * c


def _is_degenerate(n: int, a, j: int) -> bool:
    return 2 * j - 1 == n and complex(a) == 1


def roots_lemma1(n: int, a, j: int) -> RootData:
    """j-th root x_j = a^2 sin^2 theta_j / (a^2 - 1 + 2ia cos theta_j) of Q(x)."""
    _check_index(n, j, n)
    check_finite(a, "a")
    theta, s, c = angle(n, j)
    sign = 1 if j % 2 else -1
    D = _denominator_D(a, c)
    if _is_degenerate(n, a, j) or D == 0:
        return RootData(j, theta, None, sign_mu=sign, sign_nu=sign, degenerate=True)
    return RootData(j, theta, complex(a * a * s * s / D), sign_mu=sign, sign_nu=sign)


def _continued_asin(r: complex, theta: float, s: float, a) -> complex:
    """asin(r) on the branch reached by continuation from a = infinity.

    For large a, asin sqrt(x_j) = theta_j - i sin(theta_j)/a + O(1/a^2); for
    theta_j > pi/2 that is not the principal value, so pick the branch
    (w + 2 pi m or pi - w + 2 pi m) closest to the asymptotic value.
    """
    w0 = casin(r)
    target = complex(theta, -s / a)
    cands = [w0 + 2 * math.pi * m for m in (-1, 0, 1)]
    cands += [math.pi - w0 + 2 * math.pi * m for m in (-1, 0, 1)]
    return min(cands, key=lambda w: abs(w - target))


def verify_signs(n: int, a, j: int, rtol: float = 1e-9) -> tuple[int, int]:
    """Measure mu_j, nu_j from cosh(n asinh(sqrt(x_j)/a)) = mu sin(n asin sqrt x_j)
    and cos(n asin sqrt x_j) = i nu sinh(n asinh(sqrt(x_j)/a)).

    sqrt and asinh are principal; asin is taken on the branch continued from
    large a (see ``_continued_asin``). Raises ArithmeticError if either ratio
    is not +-1 to ``rtol``.
    """
    root = roots_lemma1(n, a, j)
    if root.degenerate:
        raise ValueError(f"root j={j} is degenerate for n={n}, a={a}")
    _, s, _ = angle(n, j)
    r = cmath.sqrt(root.x)
    A = n * _continued_asin(r, root.theta, s, a)
    B = n * casinh(r / a)
    mu = cmath.cosh(B) / cmath.sin(A)
    nu = cmath.cos(A) / (1j * cmath.sinh(B))
    out = []
    for name, val in (("mu", mu), ("nu", nu)):
        sign = 1 if val.real > 0 else -1
        if abs(val - sign) > rtol:
            raise ArithmeticError(f"{name}_{j} = {val} is not +-1 (n={n}, a={a})")
        out.append(sign)
    return out[0], out[1]


def lemma1_term_coefficient(n: int, a, j: int) -> complex:
    """i (-1)^(j-1) (a c + i)(a + i c) / s, the numerator of the j-th displayed term."""
    _, s, c = angle(n, j)
    sign = 1 if j % 2 else -1
    return 1j * sign * (a * c + 1j) * (a + 1j * c) / s


def expansion_lemma1(n: int, a) -> PFExpansion:
    """Partial fractions of 2n sin(n asin t) sinh(n asinh(t/a)) / (t^2 Q(t^2)), odd n.

    ``a`` may be complex (a = i is used to derive the alternating cosecant sum);
    the degenerate root at a = 1 contributes a constant instead of a pole.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be an odd positive integer, got {n}")
    check_finite(a, "a")
    if not isinstance(a, complex) and a <= 0:
        raise ValueError(f"a must be positive, got {a}")
    constant = 0j
    terms = []
    notes = []
    for j in range(1, n + 1):
        _, s, c = angle(n, j)
        num = lemma1_term_coefficient(n, a, j)
        root = roots_lemma1(n, a, j)
        if root.degenerate:
            # term num / (t^2 * 0 - a^2 s^2) no longer depends on t
            constant += num / (-(a * a) * s * s)
            notes.append(f"degenerate root j={j}: term folded into constant")
            continue
        D = _denominator_D(a, c)
        terms.append(PFTerm(root.x, complex(num / D)))
    return PFExpansion(LEMMA1, {"n": n, "a": a}, complex(constant), tuple(terms), notes=tuple(notes))


def expansion_lemma4(n: int, a) -> PFExpansion:
    """C + partial fractions of cos(n asin t) cosh(n asinh(t/a)) / Q(t^2), even n."""
    if n < 2 or n % 2:
        raise ValueError(f"n must be an even positive integer, got {n}")
    if a <= 0:
        raise ValueError(f"a must be positive, got {a}")
    sign_c = -1 if (n // 2) % 2 else 1
    # a^n / (1 + a^2n) written to stay finite for large a
    constant = sign_c / 2 / (a ** (-n) + a**n)
    terms = []
    for j in range(1, n + 1):
        _, s, c = angle(n, j)
        D = _denominator_D(a, c)
        sign = 1 if j % 2 == 0 else -1
        num = sign * a * a * s * (a * c + 1j) * (a + 1j * c) / (2 * n * D)
        terms.append(PFTerm(complex(a * a * s * s / D), complex(num / D)))
    return PFExpansion(LEMMA4, {"n": n, "a": a}, complex(constant), tuple(terms))


# ---------------------------------------------------------------- LEMMA5


def roots_lemma5(n: int, j: int, tol: float = 1e-12) -> RootData:
    """Conjugate pair x_j = -i s^2/(2c), y_j = +i s^2/(2c) of Qs, with branch data.

    The branch values of asin sqrt(x_j) and asinh sqrt(x_j) are certified
    against the principal-branch functions to ``tol``.
    """
    _check_index(n, j, n // 2)
    theta, s, c = angle(n, j)
    x = complex(0.0, -s * s / (2 * c))
    xi = math.pi * (2 * j - 1) / (4 * n)
    eta = 0.5 * math.asinh(math.tan(theta))
    branch = Branch(xi=xi, eta=eta, phi=eta, psi=xi)
    r = cmath.sqrt(x)
    got_asin, got_asinh = casin(r), casinh(r)
    if abs(got_asin - complex(xi, -eta)) > tol or abs(got_asinh - complex(eta, -xi)) > tol:
        raise ArithmeticError(f"branch values for j={j}, n={n} do not match principal branches")
    sign = 1 if j % 2 else -1
    return RootData(j, theta, x, y=x.conjugate(), branch=branch, sign_mu=sign, sign_nu=sign)


def lemma5_pair_coefficient(n: int, k: int, j: int) -> float:
    """Coefficient of 1/(4t^2 + s^4/c^2) for the j-th pair, as stated in closed form."""
    theta, s, c = angle(n, j)
    tan = s / c
    sign_j = 1 if j % 2 else -1
    return (
        (-1) ** k / (2 ** (2 * k) * n)
        * sign_j * tan / math.cosh(n * math.asinh(tan))
        * (1 + c * c) * tan * tan
        * (s * s / c) ** (2 * k)
    )


def proof_display_Qprime(n: int, j: int) -> complex:
    """Q'(x_j) as printed in the proof: 4 n i (-1)^j c^2 / (s (1 + c^2))."""
    _, s, c = angle(n, j)
    sign = 1 if j % 2 == 0 else -1
    return 4j * n * sign * c * c / (s * (1 + c * c))


def _check_k(n: int, k: int):
    if not 0 <= k < n // 2:
        raise ValueError(f"k={k} outside 0..{n // 2 - 1} for n={n}")


def expansion_lemma5(n: int, k: int) -> PFExpansion:
    """Partial fractions of t^(2k) / Qs(t) with poles in +- pairs.

    Terms come from the closed-form pair coefficients; ``exact_residues``
    holds x^(2k)/Qs'(x) from the exact derivative of the polynomial, in the
    same order, so the two routes can be compared.
    """
    _check_k(n, k)
    dQ = polyexact.build_Q_scaled(n).derivative()
    terms, exact, notes = [], [], []
    worst = 0.0
    for j in range(1, n // 2 + 1):
        root = roots_lemma5(n, j)
        x, y = root.x, root.y
        coef = lemma5_pair_coefficient(n, k, j)
        # coef / (4t^2 + s^4/c^2) = coef/(8x) * (1/(t - x) - 1/(t - y)), since y = -x
        r = coef / (8 * x)
        terms += [PFTerm(x, r), PFTerm(y, -r)]
        dx, dy = complex(dQ(x)), complex(dQ(y))
        exact += [x ** (2 * k) / dx, y ** (2 * k) / dy]
        shown = proof_display_Qprime(n, j)
        ratio = dx / shown
        _, s, c = angle(n, j)
        worst = max(worst, abs(ratio - math.cosh(n * math.asinh(s / c))) / abs(ratio))
        notes.append(
            f"proof display of Q'(x_{j}) disagrees with exact derivative: "
            f"exact/display = {ratio.real:.12g}{ratio.imag:+.3g}i"
        )
    notes.insert(
        0,
        "typo: the intermediate Q'(x_j) display in the proof is off by a factor; "
        f"measured exact/display ratio equals cosh(n asinh tan theta_j) to {worst:.1e} relative; "
        "lemma statement verified independently",
    )
    return PFExpansion(
        LEMMA5, {"n": n, "k": k}, 0j, tuple(terms), exact_residues=tuple(exact), notes=tuple(notes)
    )


def residue_route_gap(exp: PFExpansion) -> float:
    """Max relative disagreement between stated and exact-derivative residues."""
    if not exp.exact_residues:
        raise ValueError("expansion has no exact-derivative residues")
    return max(
        abs(t.residue - e) / abs(e) for t, e in zip(exp.terms, exp.exact_residues, strict=True)
    )


def lemma5_residue_report(n: int, k: int, tol: float = 1e-10) -> VerificationReport:
    """Two-route residue comparison, reported with the proof-display note."""
    exp = expansion_lemma5(n, k)
    worst = max(range(len(exp.terms)), key=lambda i: abs(exp.terms[i].residue - exp.exact_residues[i]) / abs(exp.exact_residues[i]))
    rep = VerificationReport(
        family="LEMMA5_RESIDUES",
        lhs=exp.terms[worst].residue,
        rhs=exp.exact_residues[worst],
        tol=tol * abs(exp.exact_residues[worst]),
        n=n,
        k=k,
        notes=list(exp.notes[:1]),
    )
    rep.extra["relative_gap"] = residue_route_gap(exp)
    return rep


# ---------------------------------------------------------------- left-hand sides


def lemma1_lhs(t, n: int, a):
    """2n sin(n asin t) sinh(n asinh(t/a)) / (t^2 [cos(2n asin t) + cosh(2n asinh(t/a))])."""
    A, B = casin(t), casinh(np.asarray(t, dtype=np.complex128) / a)
    num = 2 * n * np.sin(n * A) * np.sinh(n * B)
    den = np.asarray(t, dtype=np.complex128) ** 2 * (np.cos(2 * n * A) + np.cosh(2 * n * B))
    return num / den


def lemma4_lhs(t, n: int, a):
    A, B = casin(t), casinh(np.asarray(t, dtype=np.complex128) / a)
    return np.cos(n * A) * np.cosh(n * B) / (np.cos(2 * n * A) + np.cosh(2 * n * B))


def lemma5_lhs(t, n: int, k: int):
    t = np.asarray(t, dtype=np.complex128)
    r = np.sqrt(t)
    return t ** (2 * k) / (np.cos(2 * n * casin(r)) + np.cosh(2 * n * casinh(r)))


# ---------------------------------------------------------------- certification


def denominator_polynomial(exp: PFExpansion) -> polyexact.PolyRat:
    """The exact polynomial whose roots the expansion's poles must be."""
    if exp.family == LEMMA5:
        return polyexact.build_Q_scaled(exp.params["n"])
    a = exp.params["a"]
    if isinstance(a, complex):
        raise ValueError("exact certification needs a real rational a")
    return polyexact.build_Q_lemma1(exp.params["n"], Fraction(a))


def pole_residuals(exp: PFExpansion) -> list[float]:
    """|Q(p)| / sum_i |q_i| |p|^i for every pole p of the expansion.

    The denominator is the rounding scale of evaluating Q at p, which reduces
    to max|coefficient| (up to the degree) when |p| <= 1.
    """
    Q = denominator_polynomial(exp)
    cs = [abs(float(c)) for c in Q.coeffs]
    out = []
    for term in exp.terms:
        r = abs(term.pole)
        scale = sum(c * r**i for i, c in enumerate(cs))
        out.append(abs(complex(Q(term.pole))) / scale)
    return out


def reassembly_error(exp: PFExpansion, ts) -> float:
    """max |LHS(t) - expansion(t)| / (1 + |LHS(t)|) over sample points ``ts``."""
    ts = np.asarray(ts, dtype=float)
    p = exp.params
    if exp.family == LEMMA1:
        lhs = lemma1_lhs(ts, p["n"], p["a"])
    elif exp.family == LEMMA4:
        lhs = lemma4_lhs(ts, p["n"], p["a"])
    else:
        lhs = lemma5_lhs(ts, p["n"], p["k"])
    rhs = exp.reassemble(ts)
    return float(np.max(np.abs(lhs - rhs) / (1 + np.abs(lhs))))


@dataclass
class CertificationSummary:
    family: str
    params: dict
    reassembly_error: float
    max_pole_residual: float
    residue_gap: float | None = None
    notes: list[str] = field(default_factory=list)


def certify(exp: PFExpansion, ts) -> CertificationSummary:
    residuals = pole_residuals(exp) if not isinstance(exp.params.get("a"), complex) else []
    return CertificationSummary(
        family=exp.family,
        params=dict(exp.params),
        reassembly_error=reassembly_error(exp, ts),
        max_pole_residual=max(residuals, default=0.0),
        residue_gap=residue_route_gap(exp) if exp.exact_residues else None,
        notes=list(exp.notes),
    )
