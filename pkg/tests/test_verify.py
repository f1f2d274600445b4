import math

import numpy as np
import pytest

from nbandwave.construct import FilterBank, family_n3
from nbandwave.presets import enumerate_presets, lookup
from nbandwave.verify import (
    DISCLAIMER,
    check_modulation_unitarity,
    check_shift_orthonormality,
    check_sum_rules,
    support_interval,
    support_length,
    verify_bank,
)

R2, R3 = math.sqrt(2), math.sqrt(3)
HAAR = FilterBank(2, np.array([1, 1]) / R2, (np.array([-1, 1]) / R2,))


def _perturbed(bank, scale_h=1.0, dg=0.0):
    g = [x.copy() for x in bank.g]
    g[0][0] += dg
    return bank.with_filters(bank.h * scale_h, g)


def test_sum_rules_haar():
    r = check_sum_rules(HAAR)
    assert r.passed and r.max_error < 1e-15


def test_sum_rules_pi6_bank():
    h = R3 / 9 * np.array([2, 2 - R3, 2 + R3, 1, 1 + R3, 1 - R3])
    assert abs(h.sum() - R3) < 1e-12
    assert check_sum_rules(lookup("n3-t-pi6").expected_bank()).max_error < 1e-12


def test_sum_rules_scaled_h_fails():
    r = check_sum_rules(_perturbed(HAAR, scale_h=1.01))
    assert not r.passed
    assert r.max_error == pytest.approx(0.01 * R2, rel=1e-9)


def test_shift_orthonormality_haar():
    assert np.dot(HAAR.h, HAAR.h) == pytest.approx(1.0)
    assert np.dot(HAAR.h, HAAR.g[0]) == pytest.approx(0.0)
    assert check_shift_orthonormality(HAAR).passed


def test_shift_orthonormality_daubechies():
    h = lookup("n2-daubechies").expected_h
    assert abs(h[0] * h[2] + h[1] * h[3]) < 1e-15
    assert check_shift_orthonormality(lookup("n2-daubechies").expected_bank()).max_error < 1e-12


def test_shift_orthonormality_pi3_exhaustive():
    bank = lookup("n3-t-pi3").expected_bank()
    assert check_shift_orthonormality(bank).max_error < 1e-12
    # brute-force enumeration of every filter pair and every overlapping shift
    worst = 0.0
    fs = bank.filters
    for i, f in enumerate(fs):
        for j, fp in enumerate(fs):
            for m in range(-2, 3):
                s = sum(f[k] * fp[k + 3 * m] for k in range(6) if 0 <= k + 3 * m < 6)
                worst = max(worst, abs(s - (i == j and m == 0)))
    assert worst < 1e-12


def test_modulation_unitarity_haar():
    r = check_modulation_unitarity(HAAR)
    assert r.passed and r.max_error <= 1e-14


def test_modulation_unitarity_random_family_n3():
    for t in np.random.default_rng(3).uniform(-np.pi, np.pi, 20):
        assert check_modulation_unitarity(family_n3(t)).passed


def test_modulation_unitarity_perturbed_fails():
    r = check_modulation_unitarity(_perturbed(lookup("n3-t-pi6").expected_bank(), dg=1e-3))
    assert not r.passed
    assert r.max_error > 1e-4


def test_support_length_examples():
    assert support_length(HAAR) == 1
    assert support_length(lookup("n2-daubechies").expected_bank()) == 3
    assert support_length(lookup("n3-t-0").expected_bank()) == 2


def test_support_length_rejects_single_tap():
    bank = FilterBank(2, np.array([R2, 0.0]), (np.array([0.0, 0.0]),))
    with pytest.raises(ValueError):
        support_length(bank)


@pytest.mark.parametrize("entry", enumerate_presets(), ids=lambda e: e.name)
def test_presets_pass_and_support_matches(entry):
    bank = entry.build()
    report = verify_bank(bank)
    assert report.overall, report.to_table()
    if entry.support is not None:
        assert support_interval(bank) == pytest.approx(tuple(float(x) for x in entry.support))


@pytest.mark.parametrize("entry", enumerate_presets(), ids=lambda e: e.name)
def test_unitarity_implies_shift_orthonormality(entry):
    bank = entry.expected_bank()
    if check_modulation_unitarity(bank).passed:
        assert check_shift_orthonormality(bank).passed


def test_report_overall_and_serialization():
    bad = _perturbed(HAAR, scale_h=1.01)
    report = verify_bank(bad)
    assert not report.overall
    assert report.overall == all(c.passed for c in report.checks)
    d = report.to_dict()
    assert d["overall"] is False
    assert [c["name"] for c in d["checks"]] == [
        "sum_rules",
        "shift_orthonormality",
        "modulation_unitarity",
        "support_length",
    ]
    assert d["disclaimer"] == DISCLAIMER
    table = report.to_table()
    assert "FAIL" in table and "sum_rules" in table
    assert report["support_length"].passed
