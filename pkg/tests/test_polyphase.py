import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nbandwave.construct import DesignInputs, family_n3, general_design, helmert_A0, polyphase_factor
from nbandwave.laurent import LaurentPoly, PolyMatrix
from nbandwave.polyphase import decompose, paraunitarity_transport, recompose, root_sum_entry
from nbandwave.presets import enumerate_presets, lookup

R2 = math.sqrt(2)


def _roots_sum(h, n, j, w):
    """Independent oracle: (1/sqrt N) * sum over the N roots z of z**N = w of z**(-j) H(z)."""
    r = abs(w) ** (1 / n)
    base = np.angle(w) / n
    zs = r * np.exp(1j * (base + 2 * np.pi * np.arange(n) / n))
    vals = [sum(c * z ** (h.offset + i) for i, c in enumerate(h.coeffs)) for z in zs]
    return sum(z ** (-j) * v for z, v in zip(zs, vals)) / math.sqrt(n)


def _rows(bank):
    return bank.frequency_functions()


@pytest.mark.parametrize("n", [2, 3, 5])
def test_constant_row(n):
    rows = [LaurentPoly.constant(1.0)] + [LaurentPoly() for _ in range(n - 1)]
    a = decompose(rows, n)
    assert a[0, 0] == LaurentPoly.constant(math.sqrt(n))
    for j in range(1, n):
        assert a[0, j].is_zero()


def test_haar_polyphase_against_root_sum():
    rows = [LaurentPoly([0.5, 0.5]), LaurentPoly([-0.5, 0.5])]
    a = decompose(rows, 2)
    expected = np.array([[1, 1], [-1, 1]]) / R2
    for w in np.exp(-1j * np.linspace(0, 2 * np.pi, 7, endpoint=False)):
        got = a(w)
        np.testing.assert_allclose(got, expected, atol=1e-14)
        oracle = np.array([[_roots_sum(rows[k], 2, j, w) for j in range(2)] for k in range(2)])
        np.testing.assert_allclose(oracle, expected, atol=1e-14)


@pytest.mark.parametrize("name", ["n2-daubechies", "n3-t-pi6", "n3-t-4pi3"])
def test_decompose_matches_root_sum(name):
    rows = _rows(lookup(name).expected_bank())
    n = len(rows)
    a = decompose(rows, n)
    for w in np.exp(-1j * np.array([0.1, 1.3, 2.9, 4.4])):
        for k in range(n):
            for j in range(n):
                assert a[k, j](w) == pytest.approx(_roots_sum(rows[k], n, j, w), abs=1e-12)
                assert root_sum_entry(rows[k], n, j, w) == pytest.approx(_roots_sum(rows[k], n, j, w), abs=1e-12)


def test_recompose_constant():
    a = PolyMatrix.constant(np.diag([math.sqrt(3), 0.0, 0.0]))
    rows = recompose(a, 3)
    assert rows[0] == LaurentPoly.constant(1.0)
    assert rows[1].is_zero() and rows[2].is_zero()


def test_recompose_n3_factor():
    a = polyphase_factor(DesignInputs(3, helmert_A0(3), np.eye(3), (0, 1, 0)))
    h0, h1, h2 = recompose(a, 3)
    assert h0.allclose(LaurentPoly([1, 0, 1, 0, 1]) / 3, 1e-14)
    assert h1.allclose(LaurentPoly([1, 0, 0, 0, -1]) / math.sqrt(6), 1e-14)
    assert h2.allclose(LaurentPoly([1, 0, -2, 0, 1]) / (3 * R2), 1e-14)


@pytest.mark.parametrize("entry", enumerate_presets(), ids=lambda e: e.name)
def test_round_trip_presets(entry):
    rows = _rows(entry.expected_bank())
    n = entry.scale
    back = recompose(decompose(rows, n), n)
    for p, q in zip(rows, back):
        assert p.allclose(q, 1e-12)


def test_decompose_recompose_random_paraunitary():
    rng = np.random.default_rng(11)
    for n in (2, 3, 4):
        b = general_design(n, rng.uniform(-3, 3, (n - 1) * (n - 2) // 2), rng.integers(-1, 3, n))
        a = decompose(_rows(b), n)
        assert decompose(recompose(a, n), n).allclose(a, 1e-12)


row_coeffs = st.lists(st.floats(-5, 5, allow_nan=False), min_size=1, max_size=9)


@settings(max_examples=50)
@given(st.integers(2, 5), st.data())
def test_isometry(n, data):
    rows = [LaurentPoly(data.draw(row_coeffs), data.draw(st.integers(-4, 4))) for _ in range(n)]
    a = decompose(rows, n)
    for k in range(n):
        mass_a = sum(a[k, j].sq_norm() for j in range(n))
        assert mass_a == pytest.approx(n * rows[k].sq_norm(), rel=1e-12, abs=1e-12)


def test_transport_identity_and_haar():
    assert paraunitarity_transport(PolyMatrix.identity(3)).consistent
    haar = decompose([LaurentPoly([0.5, 0.5]), LaurentPoly([-0.5, 0.5])], 2)
    report = paraunitarity_transport(haar)
    assert report.polyphase_unitary and report.modulation_unitary and bool(report)


def test_transport_detects_scaled_row():
    a = decompose(_rows(family_n3(0.8)), 3)
    entries = [list(r) for r in a.rows()]
    entries[1] = [2 * p for p in entries[1]]
    report = paraunitarity_transport(PolyMatrix(entries, var="w"))
    assert not report.polyphase_unitary and not report.modulation_unitary
    assert report.polyphase_error == pytest.approx(report.modulation_error, abs=1e-9)
