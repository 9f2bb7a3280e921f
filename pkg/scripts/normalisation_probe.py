"""Probe the two normalisation mismatches found while verifying.

1. The Ismail-Valent integral over the real line, for a range of moduli.
2. Real-axis integral of the TH3 symmetry integrand against the TH3
   value, as the ratio LHS / ((pi/n) J_real).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from glaisher_lab.identities import Family, FamilyParams, ismail_valent_check, symmetry_check, verify
from glaisher_lab.quad import QuadConfig


@dataclass(frozen=True)
class ProbeConfig:
    moduli: tuple[float, ...] = tuple(np.round(np.linspace(0.05, 0.95, 10), 3))
    th3_cases: tuple[tuple[int, int], ...] = ((2, 0), (4, 0), (4, 1), (6, 1), (8, 3), (10, 2))
    quad: QuadConfig = QuadConfig()


def main():
    cfg = ProbeConfig()
    print("modulus      integral          |integral - 2|")
    for m in cfg.moduli:
        rep = ismail_valent_check(float(m), cfg.quad)
        print(f"{m:<12g} {rep.lhs.real:<17.15f} {abs(rep.lhs - 2):.2e}")
    print()
    print("n  k  LHS / ((pi/n) J_real)")
    for n, k in cfg.th3_cases:
        lhs = verify(Family.TH3, FamilyParams(Family.TH3, n=n, k=k), cfg.quad).lhs.real
        sym = symmetry_check("TH3_SYM", n, k, cfg.quad)
        print(f"{n:<2} {k:<2} {lhs / sym.extra['scaled_real']:.15f}")


if __name__ == "__main__":
    main()
