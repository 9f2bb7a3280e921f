"""Acceptance criteria, one test each; every test prints its PASS/FAIL line."""
import subprocess
import sys
import time

import pytest

from glaisher_lab import acceptance
from glaisher_lab.quad import QuadConfig

CFG = QuadConfig()


def report(capsys, result):
    with capsys.disabled():
        print()
        print(result.line())
        for d in result.details:
            print(f"    {d}")
    return result


def test_criterion_1_theorem1_sweep(capsys):
    assert report(capsys, acceptance.criterion_1(CFG)).passed


def test_criterion_2_theorem2(capsys):
    assert report(capsys, acceptance.criterion_2(CFG)).passed


def test_criterion_3_theorem3(capsys):
    assert report(capsys, acceptance.criterion_3(CFG)).passed


def test_criterion_4_partial_fractions(capsys):
    assert report(capsys, acceptance.criterion_4()).passed


def test_criterion_5_lemma5_residues(capsys):
    assert report(capsys, acceptance.criterion_5()).passed


def test_criterion_6_finite_sums(capsys):
    assert report(capsys, acceptance.criterion_6()).passed


def test_criterion_7_symmetry(capsys):
    assert report(capsys, acceptance.criterion_7(CFG)).passed


def test_criterion_8_classical(capsys):
    assert report(capsys, acceptance.criterion_8(CFG)).passed


@pytest.mark.xfail(strict=True, reason="non-gating; the Ismail-Valent integral evaluates to 2")
def test_criterion_9_exploratory(capsys):
    res = report(capsys, acceptance.criterion_9(CFG))
    assert not res.gating
    assert res.passed


def test_criterion_10_full_suite(capsys):
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "glaisher_lab", "all", "--exploratory"], capture_output=True, text=True, check=False
    )
    elapsed = time.perf_counter() - start
    passed = proc.returncode == 0 and elapsed < 60
    with capsys.disabled():
        print()
        print(f"[{'PASS' if passed else 'FAIL'}] criterion 10: `all` under 60 s with exit code 0 [{elapsed:.2f}s]")
        print(f"    exit code {proc.returncode}, wall time {elapsed:.2f}s")
    assert elapsed < 60
    assert proc.returncode == 0
