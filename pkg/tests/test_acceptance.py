"""Acceptance harness: ten criteria, one printed pass/fail line each.

Every check is exact integer or rational arithmetic, no tolerances.  The
full module runs the six verification suites once (a few seconds) and
maps their checks onto the criteria.
"""

import sys

import pytest

from chowprod.verify import CRITERIA, run_all

_seed = 0


@pytest.fixture(scope="module")
def results(acceptance_lines):
    by_name = {}
    for suite, checks in run_all(seed=_seed).items():
        for r in checks:
            by_name[r["check"]] = r
    return by_name, acceptance_lines


def _criterion(results, number):
    by_name, lines = results
    number_, description, check_names = next(
        c for c in CRITERIA if c[0] == number)
    rows = [by_name[name] for name in check_names]
    ok = all(r["pass"] for r in rows)
    details = "; ".join(r["details"] for r in rows)
    line = "[%s] criterion %2d: %s -- %s" % (
        "PASS" if ok else "FAIL", number, description, details)
    lines.append(line)
    print(line, file=sys.__stdout__, flush=True)
    assert ok, line
    return rows


def test_criterion_01_power_degrees(results):
    _criterion(results, 1)


def test_criterion_02_degree_formula_vs_oracle(results):
    _criterion(results, 2)


def test_criterion_03_structure_theorem(results):
    _criterion(results, 3)


def test_criterion_04_vanishing_above_top(results):
    _criterion(results, 4)


def test_criterion_05_localization(results):
    _criterion(results, 5)


def test_criterion_06_classical_pairing(results):
    _criterion(results, 6)


def test_criterion_07_dual_presentation(results):
    _criterion(results, 7)


def test_criterion_08_vanishing_theorem(results):
    _criterion(results, 8)


def test_criterion_09_unit_word_identity(results):
    _criterion(results, 9)


def test_criterion_10_moving_certificates(results):
    _criterion(results, 10)
