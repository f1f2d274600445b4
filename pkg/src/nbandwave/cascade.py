"""Point values of the scaling function and wavelets on N-adic grids.

Values at the integer points of the support come from the eigenvalue-1
eigenvector of the transition matrix ``T[x, y] = sqrt(N) h_{N x - y}``;
every finer grid is then filled by one application of the refinement
equation per level.  No iteration to convergence is involved.

A scaling filter whose first nonzero tap sits at index ``lo`` yields a
``phi`` supported on ``[lo / (N-1), lo / (N-1) + L]``, so grids start at
that (generally rational) point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .construct import FilterBank
from .verify import nonzero_span, support_length

__all__ = [
    "CascadeError",
    "SampledFunction",
    "integer_point_values",
    "refine_to_grid",
    "synthesize_psi",
    "refinement_residual",
    "phi_hat",
    "cascade_table",
    "DEFAULT_DEPTH",
]

EIGEN_TOL = 1e-8
DEFAULT_DEPTH = 6


class CascadeError(ArithmeticError):
    """The integer-point eigenproblem has no usable solution.

    ``reason`` is ``"non-refinable"`` (no eigenvalue 1) or ``"ambiguous"``
    (the eigenvalue-1 space does not fix a unique normalized solution).
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Samples ``values[m] = f(origin + m / N**depth)``."""

    origin: Fraction
    depth: int
    scale: int
    values: np.ndarray
    label: str = "phi"

    @property
    def step(self) -> Fraction:
        return Fraction(1, self.scale**self.depth)

    @property
    def x(self) -> np.ndarray:
        return float(self.origin) + np.arange(len(self.values)) / self.scale**self.depth

    def point(self, m: int) -> Fraction:
        return self.origin + m * self.step

    def integral(self) -> float:
        """Riemann sum of the samples times the grid step."""
        return float(np.sum(self.values)) / self.scale**self.depth


def _normalized_filter(bank: FilterBank):
    """``(c, lo, L)``: refinement coefficients ``sqrt(N) h`` from the first to last nonzero tap."""
    lo, hi = nonzero_span(bank)
    i0 = lo - bank.offset
    c = math.sqrt(bank.scale) * bank.h[i0: hi - bank.offset + 1]
    return c, lo, support_length(bank)


def _coef(c: np.ndarray, i) -> np.ndarray:
    i = np.asarray(i)
    ok = (i >= 0) & (i < len(c))
    return np.where(ok, c[np.clip(i, 0, len(c) - 1)], 0.0)


def _integer_values(bank: FilterBank) -> np.ndarray:
    """``phi`` at ``a + 0, a + 1, ..., a + L`` where ``a`` is the left end of the support."""
    n = bank.scale
    c, _, L = _normalized_filter(bank)
    left_jump = abs(c[0] - 1.0) <= EIGEN_TOL
    if L == 1:
        if not left_jump:
            raise CascadeError("non-refinable", "two-point support requires a unit first coefficient")
        return np.array([1.0, 0.0])

    pts = np.arange(1, L)
    T = _coef(c, n * pts[:, None] - pts[None, :])
    eig = np.linalg.eigvals(T)
    mult = int(np.sum(np.abs(eig - 1.0) <= EIGEN_TOL))
    if mult == 0:
        nearest = eig[np.argmin(np.abs(eig - 1.0))]
        raise CascadeError("non-refinable", f"non-refinable at integers: no eigenvalue 1 (nearest {nearest:.6g})")
    _, sv, vh = np.linalg.svd(T - np.eye(len(pts)))
    nullity = int(np.sum(sv <= EIGEN_TOL))
    if mult > 1:
        kind = "defective, integer values grow without bound under refinement" if nullity < mult else "independent eigenvectors"
        raise CascadeError(
            "ambiguous",
            f"ambiguous normalization: eigenvalue 1 has multiplicity {mult} ({nullity} eigenvector(s); {kind})",
        )
    v = vh[-1].real
    total = v.sum()
    if abs(total) <= EIGEN_TOL:
        raise CascadeError("ambiguous", "ambiguous normalization: eigenvector sums to zero")
    v = v / total

    phi0 = 0.0
    if left_jump:
        # phi(a) is not fixed by phi(a) = c_0 phi(a); take it flat with phi(a + 1)
        # provided it does not feed back into the interior rows.
        col = _coef(c, n * pts)
        if np.max(np.abs(col)) > EIGEN_TOL:
            raise CascadeError("ambiguous", "ambiguous normalization: undetermined left endpoint value couples to interior")
        phi0 = v[0]
    return np.concatenate([[phi0], v, [0.0]])


def integer_point_values(bank: FilterBank) -> np.ndarray:
    """``phi`` at the interior integer points ``a + 1 .. a + L - 1``, normalized to sum 1."""
    return _integer_values(bank)[1:-1].copy()


def refine_to_grid(bank: FilterBank, depth: int = DEFAULT_DEPTH) -> SampledFunction:
    """Scaling function at ``a + m / N**depth`` for ``m = 0 .. L N**depth``."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    n = bank.scale
    c, lo, L = _normalized_filter(bank)
    vals = _integer_values(bank)
    taps = np.arange(len(c))
    for level in range(1, depth + 1):
        prev = vals
        stride = n ** (level - 1)
        m = np.arange(L * n**level + 1)
        idx = m[:, None] - taps[None, :] * stride
        ok = (idx >= 0) & (idx < len(prev))
        vals = np.sum(np.where(ok, prev[np.clip(idx, 0, len(prev) - 1)], 0.0) * c[None, :], axis=1)
        vals[::n] = prev
    return SampledFunction(Fraction(lo, n - 1), depth, n, vals, "phi")


def refinement_residual(bank: FilterBank, phi: SampledFunction) -> float:
    """Worst ``|phi(x) - sqrt(N) sum_n h_n phi(N x - n)|`` over the sampled grid."""
    n = bank.scale
    c, _, _ = _normalized_filter(bank)
    J = phi.depth
    vals = phi.values
    m = np.arange(len(vals))
    idx = n * m[:, None] - np.arange(len(c))[None, :] * n**J
    ok = (idx >= 0) & (idx < len(vals))
    rhs = np.sum(np.where(ok, vals[np.clip(idx, 0, len(vals) - 1)], 0.0) * c[None, :], axis=1)
    return float(np.max(np.abs(vals - rhs)))


def _psi_window(bank: FilterBank, k: int, depth: int) -> tuple[int, int]:
    """Lattice index range (relative to the phi origin) carrying ``psi^k``."""
    n = bank.scale
    lo, _ = nonzero_span(bank)
    L = support_length(bank)
    nz = np.flatnonzero(np.abs(bank.g[k - 1]) > 1e-12)
    if nz.size == 0:
        return 0, 0
    gl, gh = bank.offset + int(nz[0]), bank.offset + int(nz[-1])
    return (gl - lo) * n ** (depth - 1), (L + gh - lo) * n ** (depth - 1)


def _psi_on(bank: FilterBank, phi: SampledFunction, k: int, p: np.ndarray) -> np.ndarray:
    n = bank.scale
    lo, _ = nonzero_span(bank)
    J = phi.depth
    idx_n = bank.indices
    # N x - n for x = a + p / N**J lands on phi-lattice index (lo - n) N**J + N p
    idx = (lo - idx_n)[None, :] * n**J + n * p[:, None]
    vals = phi.values
    ok = (idx >= 0) & (idx < len(vals))
    terms = np.where(ok, vals[np.clip(idx, 0, len(vals) - 1)], 0.0) * bank.g[k - 1][None, :]
    return math.sqrt(n) * terms.sum(axis=1)


def synthesize_psi(bank: FilterBank, phi: SampledFunction, k: int) -> SampledFunction:
    """Wavelet ``psi^k(x) = sqrt(N) sum_n g^k_n phi(N x - n)`` on the lattice of ``phi``.

    Only the depth ``J - 1`` values of ``phi`` are consulted, so ``psi^k``
    is exact at the full depth of ``phi``.
    """
    n = bank.scale
    if not 1 <= k <= n - 1:
        raise ValueError(f"band index must be in 1..{n - 1}, got {k}")
    if phi.depth < 1:
        raise ValueError("phi must be sampled at depth >= 1")
    p0, p1 = _psi_window(bank, k, phi.depth)
    p = np.arange(p0, p1 + 1)
    return SampledFunction(phi.point(p0), phi.depth, n, _psi_on(bank, phi, k, p), f"psi{k}")


def phi_hat(bank: FilterBank, omega, terms: int = 40):
    """Truncated infinite product ``prod_{j=1..terms} H_0(omega / N**j)``.

    ``omega = 0`` returns exactly 1, the value forced by ``H_0(1) = 1``,
    rather than ``terms`` rounded copies of ``sum(h) / sqrt(N)``.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    n = bank.scale
    w = np.asarray(omega, dtype=float)
    k = bank.indices
    out = np.ones(w.shape, dtype=complex)
    for j in range(1, terms + 1):
        arg = w[..., None] / n**j
        out = out * (np.exp(-1j * arg * k) @ bank.h) / math.sqrt(n)
    return np.where(w == 0, 1.0 + 0j, out)[()]


def cascade_table(bank: FilterBank, depth: int = DEFAULT_DEPTH) -> tuple[list[Fraction], dict[str, np.ndarray]]:
    """``phi`` and every ``psi^k`` on one common lattice covering all supports.

    Returns exact grid points and a column per function, in the order
    ``phi, psi1, ..., psi{N-1}``.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    n = bank.scale
    phi = refine_to_grid(bank, depth)
    lo_p, hi_p = 0, len(phi.values) - 1
    windows = [_psi_window(bank, k, depth) for k in range(1, n)]
    lo_p = min([lo_p] + [w[0] for w in windows])
    hi_p = max([hi_p] + [w[1] for w in windows])
    p = np.arange(lo_p, hi_p + 1)
    cols = {"phi": np.zeros(len(p))}
    inside = (p >= 0) & (p < len(phi.values))
    cols["phi"][inside] = phi.values[p[inside]]
    for k in range(1, n):
        cols[f"psi{k}"] = _psi_on(bank, phi, k, p)
    xs = [phi.point(int(i)) for i in p]
    return xs, cols
