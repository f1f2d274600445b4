"""Polyphase split of frequency functions and its inverse.

``A[k][j](w) = sqrt(N) * sum_m c_{N m + j} w**m`` where ``c`` are the
coefficients of ``H_k(z)``; this is exactly the root-sum
``(1/sqrt(N)) sum_{z**N = w} z**-j H_k(z)`` done by decimation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .laurent import LaurentPoly, PolyMatrix, is_paraunitary

__all__ = [
    "decompose",
    "recompose",
    "modulation_matrix",
    "root_sum_entry",
    "TransportReport",
    "paraunitarity_transport",
]


def _decimate(p: LaurentPoly, n: int, j: int) -> LaurentPoly:
    if not len(p.coeffs):
        return LaurentPoly()
    # exponents e = n*m + j  ->  m = (e - j) // n
    first = p.low + ((j - p.low) % n)
    if first > p.high:
        return LaurentPoly()
    start = first - p.low
    return LaurentPoly(p.coeffs[start::n], (first - j) // n)


def decompose(h_rows: Sequence[LaurentPoly], n: int) -> PolyMatrix:
    """Polyphase matrix in ``w`` from the ``N`` frequency functions in ``z``."""
    if len(h_rows) != n:
        raise ValueError(f"need {n} rows, got {len(h_rows)}")
    s = math.sqrt(n)
    return PolyMatrix([[s * _decimate(p, n, j) for j in range(n)] for p in h_rows], var="w")


def recompose(a: PolyMatrix, n: int | None = None) -> list[LaurentPoly]:
    """``H_k(z) = (1/sqrt(N)) sum_j z**j A[k][j](z**N)``."""
    n = a.order if n is None else n
    if a.order != n:
        raise ValueError(f"matrix order {a.order} does not match N={n}")
    s = math.sqrt(n)
    rows = []
    for k in range(n):
        acc = LaurentPoly()
        for j in range(n):
            acc = acc + a[k, j].substitute_power(n).shift(j)
        rows.append(acc / s)
    return rows


def root_sum_entry(h: LaurentPoly, n: int, j: int, w: complex) -> complex:
    """Direct root sum over the ``N`` solutions of ``z**N = w`` (reference form)."""
    z0 = complex(w) ** (1.0 / n)
    roots = z0 * np.exp(-2j * np.pi * np.arange(n) / n)
    return complex(np.sum(roots ** (-j) * h(roots)) / math.sqrt(n))


def modulation_matrix(h_rows: Sequence[LaurentPoly]) -> PolyMatrix:
    """``[H_k(rho**m z)]`` with ``rho = exp(-2 pi i / N)``."""
    n = len(h_rows)
    rho = np.exp(-2j * np.pi / n)
    entries = []
    for p in h_rows:
        row = []
        for m in range(n):
            if not len(p.coeffs):
                row.append(LaurentPoly())
                continue
            phase = rho ** ((p.exponents * m) % n)
            row.append(LaurentPoly(p.coeffs * phase if m else p.coeffs, p.low))
        entries.append(row)
    return PolyMatrix(entries, var="z")


@dataclass(frozen=True)
class TransportReport:
    polyphase_unitary: bool
    polyphase_error: float
    modulation_unitary: bool
    modulation_error: float

    @property
    def consistent(self) -> bool:
        return self.polyphase_unitary == self.modulation_unitary

    def __bool__(self) -> bool:
        return self.polyphase_unitary and self.modulation_unitary


def paraunitarity_transport(a: PolyMatrix, grid_size: int = 256, tol: float = 1e-10) -> TransportReport:
    """Check ``A(w)`` and the modulation matrix of its recomposition together.

    The modulation matrix is sampled on ``N * grid_size`` points so that
    ``w = z**N`` sweeps the same circle grid used for ``A``.
    """
    n = a.order
    ok_a, err_a = is_paraunitary(a, grid_size, tol)
    ok_h, err_h = is_paraunitary(modulation_matrix(recompose(a, n)), n * grid_size, tol)
    return TransportReport(ok_a, err_a, ok_h, err_h)
