"""Scan the LEMMA1 sign formula mu = nu = (-1)^(j-1) over a grid of (n, a).

Signs are read off with the arcsine branch continued from a = infinity.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from glaisher_lab import specfrac


@dataclass(frozen=True)
class ScanConfig:
    n_values: tuple[int, ...] = (1, 3, 5, 7, 9, 11, 13, 15)
    a_values: tuple[float, ...] = tuple(np.geomspace(0.1, 10, 21))


def main():
    cfg = ScanConfig()
    total = ok = 0
    for n in cfg.n_values:
        for a in cfg.a_values:
            for j in range(1, n + 1):
                if specfrac.roots_lemma1(n, a, j).degenerate:
                    continue
                total += 1
                expected = 1 if j % 2 else -1
                ok += specfrac.verify_signs(n, float(a), j) == (expected, expected)
    print(f"sign formula holds at {ok}/{total} (n, a, j) points with the continued branch")


if __name__ == "__main__":
    main()
