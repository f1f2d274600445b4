import math

import numpy as np
import pytest

from nbandwave.presets import REFLECTED_PAIRS, enumerate_presets, lookup, names
from nbandwave.verify import support_interval, verify_bank

R2, R3 = math.sqrt(2), math.sqrt(3)


def test_count_and_order():
    entries = enumerate_presets()
    assert len(entries) == 20
    assert [e.name for e in entries] == names()
    assert sum(e.scale == 2 for e in entries) == 12
    assert sum(e.scale == 3 for e in entries) == 8


def test_lookup_examples():
    e = lookup("n2-haar-01")
    assert e.t == 0 and e.u == pytest.approx(math.pi / 4)
    np.testing.assert_allclose(e.expected_h, np.array([1, 1, 0, 0]) / R2)
    e = lookup("n2-daubechies")
    assert e.t == pytest.approx(-math.pi / 12) and e.u == pytest.approx(math.pi / 3)
    np.testing.assert_allclose(e.expected_h, R2 / 8 * np.array([1 + R3, 3 + R3, 3 - R3, 1 - R3]))
    np.testing.assert_allclose(lookup("n3-t-pi").expected_h, R3 / 9 * np.array([1, 4, 1, 2, -1, 2]))


def test_haar_23_parameter_u():
    assert lookup("n2-haar-23").u == pytest.approx(-math.pi / 4)


def test_unknown_name_lists_available():
    with pytest.raises(KeyError) as info:
        lookup("n4-nothing")
    assert "n2-daubechies" in str(info.value)


@pytest.mark.parametrize("entry", enumerate_presets(), ids=lambda e: e.name)
def test_build_reproduces_expected(entry):
    bank = entry.build()
    np.testing.assert_allclose(bank.h, entry.expected_h, atol=1e-12, rtol=0)
    for got, want in zip(bank.g, entry.expected_g):
        np.testing.assert_allclose(got, want, atol=1e-12, rtol=0)
    assert bank.provenance["preset"] == entry.name


@pytest.mark.parametrize("entry", enumerate_presets(), ids=lambda e: e.name)
def test_expected_values_verify(entry):
    assert verify_bank(entry.expected_bank()).overall


@pytest.mark.parametrize("entry", [e for e in enumerate_presets() if e.support], ids=lambda e: e.name)
def test_stated_support(entry):
    lo, hi = support_interval(entry.build())
    assert (lo, hi) == pytest.approx((float(entry.support[0]), float(entry.support[1])))


@pytest.mark.parametrize("a,b", REFLECTED_PAIRS)
def test_reflected_pairs_reverse(a, b):
    np.testing.assert_allclose(lookup(a).expected_h[::-1], lookup(b).expected_h, atol=1e-15)
    assert lookup(b).reflection_of == a
