"""Principal-branch complex elementary functions.

All functions accept a Python scalar or a numpy array and return the same
shape: a plain ``complex`` for scalar input, a complex ndarray otherwise.
Non-finite input raises :class:`NonFiniteError`.

Branch cuts follow the usual conventions: ``casin`` is cut along
(-inf, -1) and (1, inf), ``casinh`` along (-i inf, -i) and (i, i inf).
Points lying exactly on a cut take the value continuous from above (casin)
or from the right (casinh), regardless of the sign of a zero component.
"""
from __future__ import annotations

import math

import numpy as np

LN_1P_SQRT2 = math.log1p(math.sqrt(2.0))  # asinh(1)


class NonFiniteError(ValueError):
    """A NaN or infinity reached a place where only finite values are allowed."""


def _as_complex(z, what="argument"):
    w = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(w)):
        raise NonFiniteError(f"non-finite {what}: {z!r}")
    return w


def _out(w, scalar):
    if scalar:
        return complex(w)
    return w


def check_finite(z, what="value"):
    """Raise NonFiniteError unless every component of ``z`` is finite; return ``z``."""
    _as_complex(z, what)
    return z


def casin(z):
    """Principal arcsine; real part in [-pi/2, pi/2]."""
    w = _as_complex(z)
    # -0.0 imaginary parts would select the lower side of the cut
    w = w.real + 1j * np.where(w.imag == 0.0, 0.0, w.imag)
    return _out(np.arcsin(w), np.ndim(z) == 0)


def casinh(z):
    """Principal inverse hyperbolic sine; imaginary part in [-pi/2, pi/2]."""
    w = _as_complex(z)
    w = np.where(w.real == 0.0, 0.0, w.real) + 1j * w.imag
    return _out(np.arcsinh(w), np.ndim(z) == 0)


def csin(z):
    w = _as_complex(z)
    return _out(np.sin(w), np.ndim(z) == 0)


def csinh(z):
    w = _as_complex(z)
    return _out(np.sinh(w), np.ndim(z) == 0)


def alpha(z, n: int):
    """The map z -> 2n asinh(sin(pi z / 2n)).

    Real on the real axis; purely imaginary on the imaginary segment
    [0, i*y_star(n)], where it runs from 0 to i*pi*n.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    w = _as_complex(z)
    out = 2 * n * casinh(np.sin(np.pi * w / (2 * n)))
    return _out(out, np.ndim(z) == 0)


def y_star(n: int) -> float:
    """Height on the imaginary axis where alpha(i y, n) reaches i*pi*n."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return 2 * n / math.pi * LN_1P_SQRT2
