from fractions import Fraction

import pytest

from hurwitzdiv.checks import CHECKS, FAIL, PASS, SKIP, run_checks
from hurwitzdiv.pushforward import ExternalCoeffs


def test_registry_names():
    assert set(CHECKS) == {
        "genus",
        "catalan",
        "small-k-cases",
        "grr-assembly",
        "hodge-closed-forms",
        "closed-forms",
        "slopes",
        "bounds",
        "m0n",
        "hygiene",
        "delta-j-checks",
    }


def test_run_checks_small_range():
    results = run_checks(1, 3)
    assert all(r.status in (PASS, SKIP) for r in results)
    skipped = [r for r in results if r.status == SKIP]
    assert {r.check for r in skipped} == {"delta-j-checks"}


def test_run_checks_validates_input():
    with pytest.raises(ValueError):
        run_checks(0, 3)
    with pytest.raises(ValueError):
        run_checks(3, 2)
    with pytest.raises(ValueError):
        run_checks(1, 1, ["nope"])


def test_delta_j_checks_with_matching_externals():
    ext = ExternalCoeffs(1, {1: Fraction(-20)}, {1: Fraction(0)})
    results = run_checks(1, 2, ["delta-j-checks"], ext)
    by_k = {r.k: r.status for r in results}
    assert by_k[1] == PASS
    assert by_k[2] == SKIP  # table is for k = 1 only


def test_delta_j_checks_detects_proviso_violation():
    ext = ExternalCoeffs(1, {1: Fraction(0)}, {1: Fraction(0)})
    results = run_checks(1, 1, ["delta-j-checks"], ext)
    assert results[0].status == FAIL
