"""Orthogonal N-band filter banks from a product of unitary factors.

The polyphase matrix is taken as ``A(w) = A0 @ D_k(w) @ B0`` with real
orthogonal ``A0``, ``B0`` and a diagonal monomial matrix ``D_k``.  The
frequency functions are the first column of ``A(z**N) @ R(z)``.

Filter index convention: the coefficient of ``z**0`` is tap 0, and

    H_k(z) = (1/sqrt(N)) * sum_n f_n z**n

so every filter tap is ``sqrt(N)`` times the matching coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .laurent import LaurentPoly, PolyMatrix, mat_mul

__all__ = [
    "ConstructionError",
    "FilterBank",
    "DesignInputs",
    "helmert_A0",
    "givens",
    "rotation_block_M",
    "conjugated_rotation",
    "b0_from_rotation",
    "r_matrix",
    "d_matrix",
    "default_degrees",
    "assemble_H",
    "extract_filters",
    "rotation2",
    "design_n2",
    "family_n2",
    "family_n3",
    "general_design",
]

INPUT_TOL = 1e-10


class ConstructionError(ValueError):
    """Raised when design inputs violate orthogonality or admissibility.

    ``residual`` holds the offending vector (or scalar deviation) so that
    callers can report it.
    """

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = None if residual is None else np.asarray(residual)


@dataclass(frozen=True, eq=False)
class FilterBank:
    """Scaling filter ``h`` and ``N - 1`` wavelet filters ``g``.

    All filters share the index range ``offset .. offset + taps - 1``.
    """

    scale: int
    h: np.ndarray
    g: tuple[np.ndarray, ...]
    offset: int = 0
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        h = np.asarray(self.h, dtype=float).copy()
        g = tuple(np.asarray(x, dtype=float).copy() for x in self.g)
        if self.scale < 2:
            raise ValueError("scale must be at least 2")
        if len(g) != self.scale - 1:
            raise ValueError(f"expected {self.scale - 1} wavelet filters, got {len(g)}")
        if any(x.shape != h.shape for x in g) or h.ndim != 1 or not h.size:
            raise ValueError("all filters must be non-empty 1-D arrays of equal length")
        if not all(np.all(np.isfinite(x)) for x in (h, *g)):
            raise ValueError("filter taps must be finite")
        for x in (h, *g):
            x.setflags(write=False)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "offset", int(self.offset))

    @property
    def taps(self) -> int:
        return len(self.h)

    @property
    def filters(self) -> list[np.ndarray]:
        return [self.h, *self.g]

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.offset, self.offset + self.taps)

    def frequency_functions(self) -> list[LaurentPoly]:
        s = math.sqrt(self.scale)
        return [LaurentPoly(f / s, self.offset) for f in self.filters]

    def padded(self, low: int, high: int) -> list[np.ndarray]:
        """Filters as dense arrays over indices ``low..high``."""
        return [LaurentPoly(f, self.offset).padded(low, high) for f in self.filters]

    def allclose(self, other: "FilterBank", tol: float = 1e-12) -> bool:
        if self.scale != other.scale:
            return False
        return max_filter_difference(self, other) <= tol

    def with_filters(self, h, g, offset=None, **provenance) -> "FilterBank":
        prov = dict(self.provenance)
        prov.update(provenance)
        return FilterBank(self.scale, h, tuple(g), self.offset if offset is None else offset, prov)


def max_filter_difference(a: FilterBank, b: FilterBank) -> float:
    """Largest tap difference after aligning both banks on a common index range."""
    if a.scale != b.scale:
        raise ValueError("banks have different scales")
    lo = min(a.offset, b.offset)
    hi = max(a.offset + a.taps, b.offset + b.taps) - 1
    return float(max(np.max(np.abs(x - y)) for x, y in zip(a.padded(lo, hi), b.padded(lo, hi))))


def _check_orthogonal(m: np.ndarray, name: str, tol: float = INPUT_TOL) -> None:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ConstructionError(f"{name} must be square")
    dev = np.max(np.abs(m @ m.T - np.eye(len(m))))
    if dev > tol:
        raise ConstructionError(f"{name} is not orthogonal (max |{name} {name}^T - I| = {dev:.3e})", dev)


def admissibility_residual(a0: np.ndarray, b0: np.ndarray) -> np.ndarray:
    """``A0 @ (row sums of B0) - sqrt(N) e0``; zero exactly for admissible pairs."""
    n = len(a0)
    target = np.zeros(n)
    target[0] = math.sqrt(n)
    return np.asarray(a0) @ np.asarray(b0).sum(axis=1) - target


@dataclass(frozen=True, eq=False)
class DesignInputs:
    scale: int
    A0: np.ndarray
    B0: np.ndarray
    degrees: tuple[int, ...]

    def __post_init__(self):
        n = self.scale
        if n < 2:
            raise ConstructionError("scale must be at least 2")
        a0 = np.asarray(self.A0, dtype=float)
        b0 = np.asarray(self.B0, dtype=float)
        degrees = tuple(int(k) for k in self.degrees)
        if a0.shape != (n, n) or b0.shape != (n, n):
            raise ConstructionError(f"A0 and B0 must be {n}x{n}")
        if len(degrees) != n:
            raise ConstructionError(f"degree vector must have {n} entries")
        _check_orthogonal(a0, "A0")
        _check_orthogonal(b0, "B0")
        res = admissibility_residual(a0, b0)
        if np.max(np.abs(res)) > INPUT_TOL:
            raise ConstructionError(
                f"admissibility violated: A0 @ rowsum(B0) - sqrt(N) e0 = {np.array2string(res, precision=3)}",
                res,
            )
        object.__setattr__(self, "A0", a0)
        object.__setattr__(self, "B0", b0)
        object.__setattr__(self, "degrees", degrees)


def helmert_A0(n: int) -> np.ndarray:
    """Orthogonal matrix with first row ``1/sqrt(n)`` sending ``(1,...,1)`` to ``sqrt(n) e0``.

    Row ``k >= 1`` is ``(1, ..., 1, -k, 0, ..., 0) / sqrt(k (k + 1))``.
    """
    if n < 2:
        raise ValueError("N must be at least 2")
    a = np.zeros((n, n))
    a[0] = 1.0 / math.sqrt(n)
    for k in range(1, n):
        a[k, :k] = 1.0
        a[k, k] = -k
        a[k] /= math.sqrt(k * (k + 1))
    return a


def givens(n: int, p: int, q: int, theta: float) -> np.ndarray:
    g = np.eye(n)
    c, s = math.cos(theta), math.sin(theta)
    g[p, p] = g[q, q] = c
    g[p, q] = -s
    g[q, p] = s
    return g


def rotation_block_M(n: int, angles=(), reflect: bool = False) -> np.ndarray:
    """Orthogonal matrix fixing ``e0``, built from plane rotations.

    The lower ``(n-1) x (n-1)`` block is ``prod G(p, q, angle)`` over
    ``1 <= p < q <= n-1`` in lexicographic order.  ``reflect`` flips the
    sign of the last coordinate, reaching the determinant -1 component.
    """
    angles = np.atleast_1d(np.asarray(angles, dtype=float))
    pairs = [(p, q) for p in range(1, n) for q in range(p + 1, n)]
    if len(angles) != len(pairs):
        raise ValueError(f"N={n} needs {len(pairs)} rotation angles, got {len(angles)}")
    m = np.eye(n)
    for (p, q), theta in zip(pairs, angles):
        m = m @ givens(n, p, q, theta)
    if reflect:
        m[:, -1] *= -1
    return m


def conjugated_rotation(a0: np.ndarray, m: np.ndarray) -> np.ndarray:
    """``A0^T M A0``: the rotation carried over to the axis ``(1, ..., 1)``."""
    a0 = np.asarray(a0, dtype=float)
    _check_orthogonal(a0, "A0")
    return a0.T @ np.asarray(m, dtype=float) @ a0


def b0_from_rotation(m_e: np.ndarray) -> np.ndarray:
    return np.asarray(m_e, dtype=float).T.copy()


def r_matrix(n: int) -> PolyMatrix:
    """Fourier factor with entry ``(j, m) = rho**(j m) z**j / sqrt(n)``, ``rho = exp(-2 pi i / n)``."""
    if n < 2:
        raise ValueError("N must be at least 2")
    rho = np.exp(-2j * np.pi / n)
    s = math.sqrt(n)
    entries = []
    for j in range(n):
        row = []
        for m in range(n):
            c = rho ** ((j * m) % n) / s
            row.append(LaurentPoly.monomial(c.real if m == 0 else c, j))
        entries.append(row)
    return PolyMatrix(entries, var="z")


def d_matrix(degrees: Sequence[int], scale: int | None = None) -> PolyMatrix:
    """``diag(w**k_0, ..., w**k_{N-1})``; with ``scale`` given, in ``z`` with ``w = z**scale``."""
    power = 1 if scale is None else int(scale)
    polys = [LaurentPoly.monomial(1.0, int(k) * power) for k in degrees]
    return PolyMatrix.diagonal(polys, var="w" if scale is None else "z")


def default_degrees(n: int) -> tuple[int, ...]:
    return tuple(i % 2 for i in range(n))


def polyphase_factor(inputs: DesignInputs) -> PolyMatrix:
    """``A(w) = A0 D_k(w) B0`` as a polynomial matrix in ``w``."""
    return mat_mul(
        mat_mul(PolyMatrix.constant(inputs.A0), d_matrix(inputs.degrees)),
        PolyMatrix.constant(inputs.B0),
    )


def assemble_H(inputs: DesignInputs) -> PolyMatrix:
    """Modulation matrix ``A0 D_k(z^N) B0 R(z)``; column 0 holds ``H_0 .. H_{N-1}``."""
    n = inputs.scale
    a_z = polyphase_factor(inputs).substitute_power(n, var="z")
    return mat_mul(a_z, r_matrix(n))


def extract_filters(h_rows: Sequence[LaurentPoly], n: int, provenance: dict | None = None) -> FilterBank:
    """Scale frequency-function coefficients by ``sqrt(N)`` into filter taps."""
    if len(h_rows) != n:
        raise ConstructionError(f"need {n} frequency functions, got {len(h_rows)}")
    rows = []
    for p in h_rows:
        if not p.is_real:
            imag = np.max(np.abs(np.imag(p.coeffs)))
            if imag > 1e-12:
                raise ConstructionError(f"frequency function has complex coefficients (|imag| = {imag:.2e})")
        rows.append(p.real().trim())
    sums = np.array([np.sum(p.coeffs) for p in rows])
    target = np.zeros(n)
    target[0] = 1.0
    res = sums - target
    if np.max(np.abs(res)) > INPUT_TOL:
        raise ConstructionError("sum rules violated: H_k(1) - delta_k0 = " + np.array2string(res, precision=3), res)
    nonempty = [p for p in rows if len(p.coeffs)]
    lo = min(p.low for p in nonempty)
    hi = max(p.high for p in nonempty)
    s = math.sqrt(n)
    dense = [s * p.padded(lo, hi) for p in rows]
    return FilterBank(n, dense[0], tuple(dense[1:]), lo, dict(provenance or {}))


def rotation2(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [-s, c]])


def design_n2(t: float, u: float | None = None, degrees: Sequence[int] = (0, 1)) -> FilterBank:
    """Two-band design through the generic assembly with rotation matrices ``A0(t)``, ``B0(u)``."""
    if u is None:
        u = math.pi / 4 - t
    inputs = DesignInputs(2, rotation2(t), rotation2(u), tuple(degrees))
    H = assemble_H(inputs)
    prov = {"family": "n2-assembled", "t": t, "u": u, "degrees": list(inputs.degrees)}
    if any(k < 0 for k in inputs.degrees):
        prov["negative_degrees"] = True
    return extract_filters(H.column(0), 2, prov)


def family_n2(t: float, u: float | None = None) -> FilterBank:
    """Four-tap two-band family with ``D = diag(1, w)``.

    With ``u`` omitted the admissible choice ``u = pi/4 - t`` is used and
    the coefficients come from the closed form in ``cos 2t`` and ``sin 2t``
    (period ``pi`` in ``t``).  With ``u`` supplied the pair must solve the
    admissibility system.
    """
    r2 = math.sqrt(2.0)
    if u is None:
        c, s = math.cos(2 * t), math.sin(2 * t)
        h = r2 / 4 * np.array([1 + c + s, 1 + c - s, 1 - c - s, 1 - c + s])
        g = r2 / 4 * np.array([-1 + c - s, 1 - c - s, -1 - c + s, 1 + c + s])
        return FilterBank(2, h, (g,), 0, {"family": "n2", "t": t, "u": math.pi / 4 - t, "degrees": [0, 1]})

    res = rotation2(t) @ np.array([math.cos(u) + math.sin(u), math.cos(u) - math.sin(u)]) - np.array([r2, 0.0])
    if np.max(np.abs(res)) > INPUT_TOL:
        raise ConstructionError(
            f"(t, u) = ({t}, {u}) is not admissible; residual {np.array2string(res, precision=6)} "
            "(admissible u is pi/4 - t)",
            res,
        )
    ct, st, cu, su = math.cos(t), math.sin(t), math.cos(u), math.sin(u)
    h = np.array([ct * cu, ct * su, -st * su, st * cu])
    g = np.array([-st * cu, -st * su, -ct * su, ct * cu])
    return FilterBank(2, h, (g,), 0, {"family": "n2", "t": t, "u": u, "degrees": [0, 1]})


def family_n3(t: float) -> FilterBank:
    """Six-tap three-band family with Helmert ``A0``, ``D = diag(1, w, 1)`` and ``B0(t)``."""
    c, s = math.cos(t), math.sin(t)
    r3 = math.sqrt(3.0)
    q = r3 * s
    h0 = np.array([2 + c - q, 2 - 2 * c, 2 + c + q, 1 - c + q, 1 + 2 * c, 1 - c - q]) / 9
    h1 = np.array([1 + 2 * c, 1 - c - q, 1 - c + q, -(1 - c + q), -(1 + 2 * c), -1 + c + q]) / (3 * math.sqrt(6))
    # z**2 term: -1 - 5 cos t + sqrt(3) sin t (forced by H_2(1) = 0)
    h2 = np.array([-1 + 4 * c + 2 * q, -(1 - c + 3 * q), -1 - 5 * c + q, 1 - c + q, 1 + 2 * c, 1 - c - q]) / (
        9 * math.sqrt(2)
    )
    return FilterBank(3, r3 * h0, (r3 * h1, r3 * h2), 0, {"family": "n3", "t": t, "degrees": [0, 1, 0]})


def general_design(
    n: int,
    angles=None,
    degrees: Sequence[int] | None = None,
    reflect: bool = False,
) -> FilterBank:
    """Bank from ``A0 D_k(z^N) A0^T M A0 R(z)`` with Helmert ``A0`` and Givens ``M``.

    Every orthogonal ``M`` fixing ``e0`` gives an admissible ``B0``; as ``M``
    runs over the rotation group this is the same family as using ``M^T``.
    """
    if n < 2:
        raise ConstructionError("scale must be at least 2")
    if angles is None:
        angles = np.zeros((n - 1) * (n - 2) // 2)
    degrees = default_degrees(n) if degrees is None else tuple(int(k) for k in degrees)
    a0 = helmert_A0(n)
    try:
        m = rotation_block_M(n, angles, reflect=reflect)
    except ValueError as exc:
        raise ConstructionError(str(exc)) from exc
    # rotating the basis by M^T sends the plane rows by M; this orientation
    # makes angle t reproduce family_n3(t)
    b0 = b0_from_rotation(conjugated_rotation(a0, m.T))
    inputs = DesignInputs(n, a0, b0, degrees)
    H = assemble_H(inputs)
    prov = {
        "family": "general",
        "angles": [float(a) for a in np.atleast_1d(angles)],
        "degrees": list(degrees),
        "reflect": bool(reflect),
    }
    if any(k < 0 for k in degrees):
        prov["negative_degrees"] = True
    return extract_filters(H.column(0), n, prov)
