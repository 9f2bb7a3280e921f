"""Exact rational polynomials built from Chebyshev-type recurrences.

The polynomials here are the denominators and numerators that the partial
fraction expansions in :mod:`glaisher_lab.specfrac` are certified against.
Everything is done in :class:`fractions.Fraction`; floating point only
enters through :func:`eval_poly` with a float/complex argument.

The basic building blocks, with x = t^2 = sin(theta)^2 = sinh(phi)^2 * a^2:

    cos(2m theta)              -> u_m(x),  u_0 = 1, u_1 = 1 - 2x
    cosh(2m phi)               -> v_m(x),  v_0 = 1, v_1 = 1 + 2x/a^2
    sin((2m+1) theta)/sin theta  -> s_m(x), s_0 = 1, s_1 = 3 - 4x
    sinh((2m+1) phi)/sinh phi    -> h_m(x), h_0 = 1, h_1 = 3 + 4x/a^2

each satisfying w_{m+1} = 2 c w_m - w_{m-1} with c = 1 - 2x or 1 + 2x/a^2.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence


class Variable(enum.Enum):
    X_EQUALS_T_SQUARED = "x=t^2"
    T_DIRECT = "t"


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact layer needs a rational value, got {type(value).__name__}")


@dataclass(frozen=True)
class PolyRat:
    """Dense polynomial with Fraction coefficients, ascending powers."""

    coeffs: tuple[Fraction, ...]
    variable: Variable = Variable.X_EQUALS_T_SQUARED

    def __post_init__(self):
        cs = [_frac(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_ints(cls, coeffs: Sequence, variable=Variable.X_EQUALS_T_SQUARED):
        return cls(tuple(_frac(c) for c in coeffs), variable)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def _like(self, coeffs):
        return PolyRat(tuple(coeffs), self.variable)

    def __add__(self, other: "PolyRat") -> "PolyRat":
        m = max(len(self.coeffs), len(other.coeffs))
        return self._like(self.coeff(i) + other.coeff(i) for i in range(m))

    def __neg__(self) -> "PolyRat":
        return self._like(-c for c in self.coeffs)

    def __sub__(self, other: "PolyRat") -> "PolyRat":
        return self + (-other)

    def __mul__(self, other) -> "PolyRat":
        if not isinstance(other, PolyRat):
            s = _frac(other)
            return self._like(c * s for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return self._like(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return self._like(out)

    __rmul__ = __mul__

    def derivative(self) -> "PolyRat":
        return self._like(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def with_variable(self, variable: Variable) -> "PolyRat":
        return PolyRat(self.coeffs, variable)

    def __call__(self, z):
        return eval_poly(self, z)

    def to_strings(self) -> list[str]:
        """Coefficients as "p/q" strings, ascending; the zero polynomial gives ["0/1"]."""
        cs = self.coeffs or (Fraction(0),)
        return [f"{c.numerator}/{c.denominator}" for c in cs]

    def __str__(self):
        var = "x" if self.variable is Variable.X_EQUALS_T_SQUARED else "t"
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(str(c) if i == 0 else f"({c})*{var}^{i}")
        return " + ".join(terms)


def eval_poly(p: PolyRat, z):
    """Horner evaluation. Exact for rational ``z``; float/complex otherwise.

    Numpy arrays are accepted and evaluated elementwise.
    """
    if isinstance(z, (int, Fraction)):
        acc = Fraction(0)
        for c in reversed(p.coeffs):
            acc = acc * z + c
        return acc
    acc = 0.0 * z
    for c in reversed(p.coeffs):
        acc = acc * z + float(c)
    return acc


def _chebyshev_pair(first: PolyRat, step: PolyRat, m: int) -> list[PolyRat]:
    """w_0 = 1, w_1 = first, w_{k+1} = 2*step*w_k - w_{k-1}; returns [w_0..w_m]."""
    one = PolyRat((Fraction(1),), first.variable)
    ws = [one, first]
    two_step = step * 2
    while len(ws) <= m:
        ws.append(two_step * ws[-1] - ws[-2])
    return ws[: m + 1]


def _cos_family(m: int, var=Variable.X_EQUALS_T_SQUARED) -> list[PolyRat]:
    c = PolyRat((Fraction(1), Fraction(-2)), var)
    return _chebyshev_pair(c, c, m)


def _cosh_family(m: int, a2: Fraction, var=Variable.X_EQUALS_T_SQUARED) -> list[PolyRat]:
    c = PolyRat((Fraction(1), 2 / a2), var)
    return _chebyshev_pair(c, c, m)


def _check_a(a) -> Fraction:
    a = _frac(a)
    if a == 0:
        raise ValueError("a must be nonzero")
    return a


def cos_multiple(m: int) -> PolyRat:
    """cos(2m asin sqrt(x)) as a polynomial in x."""
    return _cos_family(m)[m]


def cosh_multiple(m: int, a=1) -> PolyRat:
    """cosh(2m asinh(sqrt(x)/a)) as a polynomial in x."""
    return _cosh_family(m, _check_a(a) ** 2)[m]


def build_Q_lemma1(n: int, a) -> PolyRat:
    """cos(2n asin t) + cosh(2n asinh(t/a)) as a polynomial in x = t^2."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a = _check_a(a)
    return _cos_family(n)[n] + _cosh_family(n, a * a)[n]


def build_P_lemma1(n: int, a) -> PolyRat:
    """2n sin(n asin t) sinh(n asinh(t/a)) / t^2 as a polynomial in x = t^2 (odd n)."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be an odd positive integer, got {n}")
    a = _check_a(a)
    m = (n - 1) // 2
    x = Variable.X_EQUALS_T_SQUARED
    c_sin = PolyRat((Fraction(1), Fraction(-2)), x)
    c_sinh = PolyRat((Fraction(1), 2 / (a * a)), x)
    s = _chebyshev_pair(PolyRat((Fraction(3), Fraction(-4)), x), c_sin, m)[m]
    h = _chebyshev_pair(PolyRat((Fraction(3), 4 / (a * a)), x), c_sinh, m)[m]
    return s * h * (Fraction(2 * n) / a)


def lemma4_constant(n: int, a) -> Fraction:
    """(-1)^(n/2)/2 * a^n / (1 + a^(2n)), the t -> infinity limit in the even-n expansion."""
    if n < 2 or n % 2:
        raise ValueError(f"n must be an even positive integer, got {n}")
    a = _check_a(a)
    sign = -1 if (n // 2) % 2 else 1
    return Fraction(sign, 2) * a**n / (1 + a ** (2 * n))


def build_R_lemma4(n: int, a) -> tuple[Fraction, PolyRat]:
    """Constant C and remainder R with cos(n asin t) cosh(n asinh(t/a)) = C Q_n + R (even n)."""
    C = lemma4_constant(n, a)
    a = _frac(a)
    m = n // 2
    numer = _cos_family(m)[m] * _cosh_family(m, a * a)[m]
    R = numer - build_Q_lemma1(n, a) * C
    if R.degree > n - 1:
        raise ArithmeticError(f"remainder degree {R.degree} exceeds {n - 1}")
    return C, R


def build_Q_scaled(n: int) -> PolyRat:
    """cos(2n asin sqrt(t)) + cosh(2n asinh sqrt(t)) as a polynomial in t.

    Even in t, of degree 2*floor(n/2); for odd n the degree-n terms cancel.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    t = Variable.T_DIRECT
    return _cos_family(n, t)[n] + _cosh_family(n, Fraction(1), t)[n]


def recurrence_leading_coefficient(n: int) -> Fraction:
    """Leading t^n coefficient of u_n + v_n at a = 1, i.e. 2^(2n-1) (1 + (-1)^n)."""
    return Fraction(2 ** (2 * n - 1) * (1 + (-1) ** n))
