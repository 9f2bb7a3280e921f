"""Sweep the identity families over a parameter grid and write the reports as CSV.

    python scripts/run_sweep.py --out results/sweep.csv
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from glaisher_lab.identities import Family, FamilyParams, verify
from glaisher_lab.quad import QuadConfig
from glaisher_lab.report import reports_to_csv


@dataclass(frozen=True)
class SweepConfig:
    th1_n: tuple[int, ...] = (1, 3, 5, 7, 9, 11, 13, 15, 21, 31)
    th2_n: tuple[int, ...] = (2, 4, 6, 8, 10, 20)
    a_values: tuple[float, ...] = (0.1, 0.5, 1.0, 2.0, 10.0)
    th3_n: tuple[int, ...] = (2, 4, 6, 8, 10, 12)
    quad: QuadConfig = field(default_factory=QuadConfig)


def points(cfg: SweepConfig):
    for n in cfg.th1_n:
        for a in cfg.a_values:
            yield FamilyParams(Family.TH1, n=n, a=a)
    for n in cfg.th2_n:
        yield FamilyParams(Family.TH2, n=n)
        for a in cfg.a_values:
            yield FamilyParams(Family.TH2_GENERAL_A, n=n, a=a)
    for n in cfg.th3_n:
        for k in range(n // 2):
            yield FamilyParams(Family.TH3, n=n, k=k)
    for a in cfg.a_values:
        yield FamilyParams(Family.GLAISHER1, a=a)
    yield FamilyParams(Family.GLAISHER2)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path)
    args = ap.parse_args(argv)
    cfg = SweepConfig()
    reports = sorted((verify(p.family, p, cfg.quad) for p in points(cfg)), key=lambda r: r.sort_key())
    text = reports_to_csv(reports)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    failed = [r for r in reports if not r.passed]
    worst = max(reports, key=lambda r: r.abs_err / r.tol)
    print(f"{len(reports)} points, {len(failed)} failed; worst err/tol {worst.abs_err / worst.tol:.2e} "
          f"({worst.family} n={worst.n} a={worst.a} k={worst.k})", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
