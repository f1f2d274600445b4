import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from nbandwave.construct import FilterBank
from nbandwave.presets import enumerate_presets, lookup
from nbandwave.transform import Decomposition, TransformError, analyze, max_levels, synthesize

R2, R3 = math.sqrt(2), math.sqrt(3)
HAAR = FilterBank(2, np.array([1, 1]) / R2, (np.array([-1, 1]) / R2,))


def loop_analysis(bank, x):
    """Plain-loop periodic convolution and decimation."""
    n, size = bank.scale, len(x)
    out = []
    for f in bank.filters:
        band = []
        for m in range(size // n):
            band.append(sum(f[i] * x[(n * m + bank.offset + i) % size] for i in range(len(f))))
        out.append(np.array(band))
    return out


def test_constant_haar():
    d = analyze(HAAR, np.full(8, 3.0), 1)
    np.testing.assert_allclose(d.approx, 3 * R2, atol=1e-14)
    np.testing.assert_allclose(d.details[0][0], 0.0, atol=1e-14)


def test_impulse_n3_haar():
    bank = lookup("n3-t-0").build()
    x = np.zeros(9)
    x[0] = 1
    d = analyze(bank, x, 1)
    np.testing.assert_allclose(d.approx, [1 / R3, 0, 0], atol=1e-15)
    # band outputs pick taps at indices congruent to 0 mod 3
    np.testing.assert_allclose(d.details[0][0], [bank.g[0][0], bank.g[0][3], 0], atol=1e-15)
    np.testing.assert_allclose(d.details[0][1], [bank.g[1][0], bank.g[1][3], 0], atol=1e-15)


@pytest.mark.parametrize("name", ["n2-daubechies", "n3-t-pi6", "n3-t-4pi3"])
def test_matches_loop_oracle(name):
    bank = lookup(name).build()
    x = np.random.default_rng(0).normal(size=18 if bank.scale == 3 else 16)
    d = analyze(bank, x, 1)
    oracle = loop_analysis(bank, x)
    np.testing.assert_allclose(d.approx, oracle[0], atol=1e-13)
    for got, want in zip(d.details[0], oracle[1:]):
        np.testing.assert_allclose(got, want, atol=1e-13)


def test_parseval_pi3():
    x = np.random.default_rng(1).normal(size=27)
    d = analyze(lookup("n3-t-pi3").build(), x, 3)
    assert abs(d.energy() - np.sum(x**2)) <= 1e-10 * np.sum(x**2)
    assert d.length == 27


@pytest.mark.parametrize("entry", enumerate_presets(), ids=lambda e: e.name)
@pytest.mark.parametrize("levels", [1, 2, 3])
def test_round_trip(entry, levels):
    bank = entry.build()
    x = np.random.default_rng(levels).normal(size=bank.scale**levels * 4)
    y = synthesize(bank, analyze(bank, x, levels))
    assert np.linalg.norm(y - x) <= 1e-10 * np.linalg.norm(x)


def test_zero_details_of_constant_reconstruct():
    bank = lookup("n2-daubechies").build()
    x = np.full(32, -1.5)
    d = analyze(bank, x, 3)
    zeroed = Decomposition(2, d.approx, tuple(tuple(np.zeros_like(b) for b in lvl) for lvl in d.details))
    np.testing.assert_allclose(synthesize(bank, zeroed), x, atol=1e-13)


@pytest.mark.parametrize("entry", enumerate_presets(), ids=lambda e: e.name)
def test_ones_have_zero_details(entry):
    bank = entry.build()
    d = analyze(bank, np.ones(bank.scale**2 * 3), 2)
    for lvl in d.details:
        for b in lvl:
            np.testing.assert_allclose(b, 0.0, atol=1e-12)


@pytest.mark.parametrize("k", [1, 2])
def test_unit_detail_coefficient_reconstructs_taps(k):
    bank = lookup("n3-t-pi6").build()
    size, m = 18, 2
    bands = [np.zeros(size // 3) for _ in range(3)]
    bands[k][m] = 1.0
    d = Decomposition(3, bands[0], (tuple(bands[1:]),))
    y = synthesize(bank, d)
    expected = np.zeros(size)
    for i, tap in enumerate(bank.g[k - 1]):
        expected[(3 * m + bank.offset + i) % size] += tap
    np.testing.assert_allclose(y, expected, atol=1e-15)
    assert np.linalg.norm(y) == pytest.approx(1.0)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(enumerate_presets()), st.data())
def test_round_trip_property(entry, data):
    bank = entry.build()
    levels = data.draw(st.integers(1, 3))
    size = bank.scale**levels * data.draw(st.integers(1, 4))
    x = data.draw(arrays(float, size, elements=st.floats(-1e3, 1e3, allow_nan=False)))
    d = analyze(bank, x, levels)
    norm = np.linalg.norm(x)
    assert np.linalg.norm(synthesize(bank, d) - x) <= 1e-10 * norm + 1e-12
    assert abs(d.energy() - norm**2) <= 1e-9 * norm**2 + 1e-12


def test_indivisible_length_names_max_levels():
    with pytest.raises(TransformError, match="at most 2 levels"):
        analyze(HAAR, np.ones(12), 3)
    assert max_levels(12, 2) == 2
    assert max_levels(243, 3) == 5


def test_bad_inputs():
    with pytest.raises(TransformError):
        analyze(HAAR, [], 1)
    with pytest.raises(TransformError):
        analyze(HAAR, [1.0, np.nan], 1)
    with pytest.raises(TransformError):
        analyze(HAAR, np.ones(4), 0)


def test_shape_mismatch_rejected():
    d = analyze(HAAR, np.ones(8), 2)
    broken = Decomposition(2, d.approx, (d.details[0], (np.ones(3),)))
    with pytest.raises(TransformError):
        synthesize(HAAR, broken)
    with pytest.raises(TransformError):
        synthesize(lookup("n3-t-0").build(), d)


def test_flatten_order_and_unflatten():
    bank = lookup("n3-t-pi6").build()
    x = np.random.default_rng(2).normal(size=27)
    d = analyze(bank, x, 2)
    flat = d.flatten()
    np.testing.assert_array_equal(flat[:3], d.approx)
    np.testing.assert_array_equal(flat[3:6], d.details[0][0])
    np.testing.assert_array_equal(flat[9:18], d.details[1][0])
    back = Decomposition.unflatten(flat, 3, 2)
    np.testing.assert_allclose(synthesize(bank, back), x, atol=1e-12)
    with pytest.raises(TransformError):
        Decomposition.unflatten(flat[:-1], 3, 2)
