"""Acceptance gate: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary of any run that collects this file.
"""

import time

import pytest

from qnilpotent.audits import (
    DEFAULT_SEED,
    LONGEST_PAIRINGS,
    matrix_center_dimension,
    printed_matrix_formula,
    suite_b1,
    suite_compatible,
    suite_determinant,
    suite_double_schubert,
    suite_engine,
    suite_formulas,
    suite_longest_tables,
    suite_matrix_algebra,
    suite_minus_one,
    suite_moves,
    suite_pi_degree,
    suite_root_powers,
    suite_structure,
    suite_type_a,
    suite_w_algebra,
    sweep_cases,
)

from .conftest import ACCEPTANCE_LINES


def report(n, ok, detail):
    line = f"Criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def summary(res):
    text = f"{res.checked - len(res.failures)}/{res.checked} checks"
    if res.failures:
        text += f"; first failures {res.failures[:3]}"
    return text


@pytest.fixture(scope="module")
def sweep():
    return sweep_cases(3, 6)


def timed(fn, *args, **kw):
    start = time.perf_counter()
    res = fn(*args, **kw)
    return res, time.perf_counter() - start


def test_criterion_01_type_a_longest():
    res, secs = timed(suite_type_a, 8)
    ok = res.passed and secs < 8.0
    report(1, ok, f"A1..A8, {summary(res)}, {secs:.2f}s")
    assert ok, res.failures


def test_criterion_02_minus_one_types():
    res = suite_minus_one(8)
    report(2, res.passed, summary(res))
    assert res.passed, res.failures


def test_criterion_03_pairings():
    res = suite_longest_tables()
    dims = {k: len(v) for k, v in res.info.items()}
    ok = res.passed and dims == {"D5": 4, "D7": 6, "E6": 4}
    report(3, ok, f"dimensions {dims}; E6 gives {res.info['E6']}, "
                  f"the printed list has C2*C5 in place of C3*C5")
    assert ok, res.failures
    assert sorted(res.info["E6"]) == sorted(LONGEST_PAIRINGS["E6"])


@pytest.mark.xfail(strict=True, reason="the stated closed form 1+gcd(a-1,b-1) does not match the algebra; "
                                       "the computed dimension is gcd(a,b) when a/g and b/g are odd, else 0")
def test_criterion_04_matrix_algebra():
    res = suite_matrix_algebra(2, 6, formula=printed_matrix_formula)
    report(4, res.passed, f"{summary(res)}; the computed table follows gcd(a,b) for odd a/g, b/g and 0 otherwise")
    assert res.passed


def test_matrix_algebra_derived_formula():
    # the corrected closed form, against the engine, on the same range
    res = suite_matrix_algebra(2, 6)
    assert res.passed, res.failures
    assert res.info["dimensions"]["3x5"] == 1 == matrix_center_dimension(3, 5)
    assert printed_matrix_formula(3, 5) == 3


def test_criterion_05_b1_closed_form():
    res, secs = timed(suite_b1, 40, 50, DEFAULT_SEED)
    ok = res.passed and secs < 10.0
    report(5, ok, f"{summary(res)}, {secs:.2f}s")
    assert ok, res.failures


def test_criterion_06_moves():
    res = suite_moves(500, DEFAULT_SEED)
    report(6, res.passed, f"{summary(res)}, moves applied {res.info['moves_applied']}")
    assert res.passed, res.failures


def test_criterion_07_engine(sweep):
    res = suite_engine(sweep, 2)
    report(7, res.passed, f"{len(sweep)} words, {summary(res)}")
    assert res.passed, res.failures


def test_criterion_08_formulas(sweep):
    res = suite_formulas(sweep, (1, -1))
    report(8, res.passed, f"{summary(res)}, both q-conventions")
    assert res.passed, res.failures


def test_criterion_09_compatible_pair(sweep):
    res = suite_compatible(sweep)
    report(9, res.passed, summary(res))
    assert res.passed, res.failures


def test_criterion_10_pi_degree(sweep):
    pi = suite_pi_degree(200, (3, 5, 7, 9, 15), DEFAULT_SEED)
    powers = suite_root_powers(sweep, (3, 5, 7))
    ok = pi.passed and powers.passed
    report(10, ok, f"brute force {summary(pi)}; m-th powers {summary(powers)}")
    assert ok, (pi.failures, powers.failures)


@pytest.mark.xfail(strict=True, reason="with d_s > 1 the factor is prod(2 d_s), not 2^(r-r0); "
                                       "Lbar is nonsingular there so no integral correction exists")
def test_criterion_11_determinant_literal(sweep):
    res = suite_determinant(sweep, literal=True)
    report(11, res.passed, f"{summary(res)}; mismatches by type {res.info['failures_by_type']}, "
                           f"prod(2 d_s) det Z holds everywhere")
    assert res.passed


def test_determinant_generalized(sweep):
    res = suite_determinant(sweep)
    assert res.passed, res.failures


def test_criterion_12_w_algebra():
    res = suite_w_algebra(3, 2)
    report(12, res.passed, f"{res.info['decompositions']} decompositions, {summary(res)}, "
                           f"engine on the chamber-minor form")
    assert res.passed, res.failures


def test_criterion_13_double_schubert():
    res = suite_double_schubert(("A2", "A3"))
    report(13, res.passed, summary(res))
    assert res.passed, res.failures


def test_criterion_14_structure():
    res = suite_structure(4, 3, 8)
    report(14, res.passed, f"{summary(res)}, Weyl orders {res.info['kostant_group_orders']}")
    assert res.passed, res.failures
