"""Finite trigonometric sums over theta_j = pi (2j - 1) / (2n)."""
from __future__ import annotations

import enum
import math

from ..specfrac import angle


class SumKind(str, enum.Enum):
    LEMMA3 = "LEMMA3"              # sum (-1)^(j-1) / sin theta_j = n, odd n
    ATANH_CANCEL = "ATANH_CANCEL"  # sum (-1)^(j-1) atanh(cos theta_j) / sin theta_j = 0, odd n
    TAN_EVEN = "TAN_EVEN"          # sum (-1)^j tan theta_j = (-1)^(n/2) n, even n
    TH3_SUM = "TH3_SUM"            # the finite sum in the TH3 right-hand side
    TH3_ALT = "TH3_ALT"            # its alternative coth representation (k = 0)

    def __str__(self):
        return self.value


def valid_for(kind, n: int) -> bool:
    kind = SumKind(kind)
    if n < 1:
        return False
    if kind in (SumKind.LEMMA3, SumKind.ATANH_CANCEL):
        return n % 2 == 1
    if kind is SumKind.TAN_EVEN:
        return n % 2 == 0
    return n >= 2


def _sign(j: int) -> int:
    return 1 if j % 2 else -1  # (-1)^(j-1)


def th3_sum(n: int, k: int = 0) -> float:
    """sum_{j <= n/2} (-1)^(j-1) tan theta_j / cosh(n asinh tan theta_j) (sin^2/cos)^(2k)."""
    terms = []
    for j in range(1, n // 2 + 1):
        _, s, c = angle(n, j)
        tan = s / c
        terms.append(_sign(j) * tan / math.cosh(n * math.asinh(tan)) * (s * s / c) ** (2 * k))
    return math.fsum(terms)


def th3_alt(n: int) -> float:
    """sum_{y=1}^{n} coth(n asinh sin theta_y) / coth(asinh sin theta_y) - n/2."""
    terms = []
    for y in range(1, n + 1):
        _, s, _ = angle(n, y)
        u = math.asinh(s)
        terms.append(math.tanh(u) / math.tanh(n * u))
    return math.fsum(terms) - n / 2


def finite_sum(kind, n: int, k: int = 0) -> float:
    kind = SumKind(kind)
    if not valid_for(kind, n):
        raise ValueError(f"{kind} is not defined for n={n}")
    if kind is SumKind.LEMMA3:
        return math.fsum(_sign(j) / angle(n, j)[1] for j in range(1, n + 1))
    if kind is SumKind.ATANH_CANCEL:
        return math.fsum(_sign(j) * math.atanh(angle(n, j)[2]) / angle(n, j)[1] for j in range(1, n + 1))
    if kind is SumKind.TAN_EVEN:
        return math.fsum(-_sign(j) * angle(n, j)[1] / angle(n, j)[2] for j in range(1, n + 1))
    if kind is SumKind.TH3_SUM:
        if not 0 <= k < max(1, n // 2):
            raise ValueError(f"k={k} out of range for n={n}")
        return th3_sum(n, k)
    return th3_alt(n)


def expected_sum(kind, n: int) -> float:
    """The value each identity predicts; TH3_ALT is compared with the k = 0 TH3 sum."""
    kind = SumKind(kind)
    if not valid_for(kind, n):
        raise ValueError(f"{kind} is not defined for n={n}")
    if kind is SumKind.LEMMA3:
        return float(n)
    if kind is SumKind.ATANH_CANCEL:
        return 0.0
    if kind is SumKind.TAN_EVEN:
        return float(n if (n // 2) % 2 == 0 else -n)
    if kind is SumKind.TH3_ALT:
        return th3_sum(n, 0)
    raise ValueError(f"{kind} has no closed-form target")


def sum_checks(n: int) -> list[tuple[SumKind, float, float]]:
    """(kind, value, expected) for every identity defined at n."""
    out = []
    for kind in (SumKind.LEMMA3, SumKind.ATANH_CANCEL, SumKind.TAN_EVEN, SumKind.TH3_ALT):
        if valid_for(kind, n):
            out.append((kind, finite_sum(kind, n), expected_sum(kind, n)))
    return out
