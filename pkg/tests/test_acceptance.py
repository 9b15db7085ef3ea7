"""One test per acceptance criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.  All
checks are exact except the spectrum, which compares floating eigenvalues to
the nearest integer with tolerance SPECTRUM_TOL.
"""
import pytest

from stareigen import checks

SEED = checks.DEFAULT_SEED
SPECTRUM_TOL = 1e-8


def report(result):
    status = "PASS" if result.passed else "FAIL"
    print(f"\ncriterion {result.key}: {status} - {result.claim} - {result.detail}")
    assert result.passed, result.detail


def test_criterion_1_pi_family():
    report(checks.check_pi_family(seed=SEED))


def test_criterion_2_f2_basis():
    # Known to fail: the F_2 functions are eigenfunctions and independent,
    # but their pairwise inner products are not zero.
    report(checks.check_f2_basis())


def test_criterion_3_polytabloid_eigen():
    report(checks.check_polytabloid_eigen())


def test_criterion_4_phi_correspondence():
    report(checks.check_phi_correspondence(seed=SEED))


def test_criterion_5_decomposition():
    report(checks.check_decomposition())


def test_criterion_6_support_partitions():
    report(checks.check_support())


def test_criterion_7_determinant():
    report(checks.check_determinant())


def test_criterion_8_block_structure():
    report(checks.check_blocks())


def test_criterion_9_reconstruction():
    report(checks.check_reconstruction(seed=SEED))


def test_criterion_10_spectrum():
    report(checks.check_spectrum(tol=SPECTRUM_TOL))


def test_pinned_tolerance():
    assert SPECTRUM_TOL == pytest.approx(1e-8)
