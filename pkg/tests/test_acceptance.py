"""Acceptance suite: one test per criterion, at the stated scale.

Run with ``pytest tests/test_acceptance.py -v -s``.  Every test prints one
PASS/FAIL line per criterion.  The grid suites walk all dominant weights
with coordinates at most 2 in types A1, A2, B2, G2, A3 and B3, skipping any
case with more than 2^20 walks; expect the full module to take roughly half
an hour on one core.
"""

import random
import time

import pytest

from macpath import verify

GRID_TYPES = ("A1", "A2", "B2", "G2", "A3", "B3")
CAP_LOG2 = 20


def _finish(name: str, rep: verify.Report, started: float, budget: float):
    elapsed = time.time() - started
    status = "PASS" if rep.ok() else "FAIL"
    print(f"[{status}] {name}: {len(rep.lines)} checks, {elapsed:.1f}s "
          f"(budget {budget:.0f}s)")
    if not rep.ok():
        for line in rep.lines:
            if "FAIL" in line:
                print("   ", line)
    assert rep.ok(), f"{name} failed"
    assert elapsed < budget, f"{name} exceeded its runtime budget"


def test_criterion_1_and_2_paper_tables():
    t0 = time.time()
    rep = verify.paper_a2(random.Random(1))
    # criteria 1 and 2 share the two worked examples; each must finish < 5 s
    _finish("criterion 1+2 (paper tables)", rep, t0, 10.0)


def test_criterion_3_cross_formula():
    t0 = time.time()
    rep = verify.cross_formula(GRID_TYPES, max_coord=2, cap_log2=CAP_LOG2,
                               rng=random.Random(2))
    _finish("criterion 3 (cross-formula grid)", rep, t0, 1800.0)


def test_criterion_4_bijection():
    t0 = time.time()
    rep = verify.bijection(GRID_TYPES, max_coord=2, cap_log2=CAP_LOG2,
                           sample=64, seed=3)
    _finish("criterion 4 (bijection grid)", rep, t0, 3600.0)


def test_criterion_5_specialization_oracles():
    t0 = time.time()
    rep = verify.specializations(GRID_TYPES, max_coord=2, cap_log2=CAP_LOG2)
    _finish("criterion 5 (q = t = 0 oracles)", rep, t0, 1800.0)


def test_criterion_6_jack():
    t0 = time.time()
    rep = verify.jack_suite(float_n=10 ** 4, tol=1e-3)
    _finish("criterion 6 (Jack limits)", rep, t0, 60.0)


def test_criterion_7_pseudo_crystal():
    t0 = time.time()
    rep = verify.crystal_suite(("A1", "A2", "B2"), max_coord=2)
    _finish("criterion 7 (pseudo-crystal)", rep, t0, 300.0)


def test_criterion_8_documented_discrepancy():
    t0 = time.time()
    rep = verify.hl_discrepancy(random.Random(4))
    _finish("criterion 8 (q = 0 discrepancy)", rep, t0, 60.0)
