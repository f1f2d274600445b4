"""Laurent polynomials and square matrices of them.

A :class:`LaurentPoly` is a finite sum ``sum_n c_n z**n`` with integer
(possibly negative) exponents.  It is stored as a dense coefficient array
plus the exponent of its first entry.  Coefficients are real in every
filter construction; complex coefficients are tolerated only so that the
Fourier factor ``R(z)`` can be held in the same container.

Evaluation on the unit circle uses ``z = exp(-1j * omega)``.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "LaurentPoly",
    "PolyMatrix",
    "eval_on_circle",
    "adjoint",
    "mat_mul",
    "is_paraunitary",
    "COEFF_TOL",
]

COEFF_TOL = 1e-12


class LaurentPoly:
    """Immutable Laurent polynomial ``sum_n c[n - offset] z**n``."""

    __slots__ = ("_c", "_offset")

    def __init__(self, coeffs: Sequence[complex] | np.ndarray = (), offset: int = 0):
        c = np.array(coeffs, copy=True)
        if c.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        if c.dtype.kind not in "fc":
            c = c.astype(float)
        if c.size and not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c.setflags(write=False)
        self._c = c
        self._offset = int(offset)

    # -- constructors -------------------------------------------------
    @classmethod
    def from_dict(cls, terms: Mapping[int, complex]) -> "LaurentPoly":
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        dtype = complex if any(isinstance(v, complex) for v in terms.values()) else float
        c = np.zeros(hi - lo + 1, dtype=dtype)
        for n, v in terms.items():
            c[n - lo] += v
        return cls(c, lo)

    @classmethod
    def monomial(cls, coeff: complex, power: int) -> "LaurentPoly":
        return cls([coeff], power)

    @classmethod
    def constant(cls, value: complex) -> "LaurentPoly":
        return cls([value], 0)

    # -- accessors ----------------------------------------------------
    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def offset(self) -> int:
        return self._offset

    @property
    def low(self) -> int:
        return self._offset

    @property
    def high(self) -> int:
        return self._offset + len(self._c) - 1

    @property
    def exponents(self) -> np.ndarray:
        return np.arange(self._offset, self._offset + len(self._c))

    @property
    def is_real(self) -> bool:
        return self._c.dtype.kind == "f" or bool(np.all(self._c.imag == 0))

    def coeff(self, n: int) -> complex:
        i = n - self._offset
        if 0 <= i < len(self._c):
            return self._c[i]
        return 0.0

    def to_dict(self) -> dict[int, complex]:
        return {int(n): v for n, v in zip(self.exponents, self._c) if v != 0}

    def trim(self, tol: float = 0.0) -> "LaurentPoly":
        """Drop leading/trailing coefficients with magnitude ``<= tol``."""
        nz = np.flatnonzero(np.abs(self._c) > tol)
        if nz.size == 0:
            return LaurentPoly()
        return LaurentPoly(self._c[nz[0]: nz[-1] + 1], self._offset + nz[0])

    def real(self) -> "LaurentPoly":
        return LaurentPoly(np.real(self._c), self._offset)

    def is_zero(self, tol: float = 0.0) -> bool:
        return not np.any(np.abs(self._c) > tol)

    def is_constant(self, tol: float = 0.0) -> bool:
        t = self.trim(tol)
        return len(t.coeffs) == 0 or (t.low == 0 and t.high == 0)

    def padded(self, low: int, high: int) -> np.ndarray:
        """Dense coefficient vector over exponents ``low..high``."""
        if len(self._c) and (self.low < low or self.high > high):
            t = self.trim()
            if len(t.coeffs) and (t.low < low or t.high > high):
                raise ValueError(f"nonzero terms outside [{low}, {high}]")
            return t.padded(low, high)
        out = np.zeros(high - low + 1, dtype=self._c.dtype)
        if len(self._c):
            out[self.low - low: self.high - low + 1] = self._c
        return out

    # -- algebra ------------------------------------------------------
    def _binary_add(self, other: "LaurentPoly", sign: float) -> "LaurentPoly":
        if not len(other._c):
            return self
        if not len(self._c):
            return other if sign > 0 else -other
        lo, hi = min(self.low, other.low), max(self.high, other.high)
        dtype = np.result_type(self._c, other._c)
        c = np.zeros(hi - lo + 1, dtype=dtype)
        c[self.low - lo: self.high - lo + 1] += self._c
        c[other.low - lo: other.high - lo + 1] += sign * other._c
        return LaurentPoly(c, lo)

    def __add__(self, other):
        return self._binary_add(_as_poly(other), 1.0)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary_add(_as_poly(other), -1.0)

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __neg__(self):
        return LaurentPoly(-self._c, self._offset)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            if not len(self._c) or not len(other._c):
                return LaurentPoly()
            return LaurentPoly(np.convolve(self._c, other._c), self._offset + other._offset)
        if np.isscalar(other):
            return LaurentPoly(self._c * other, self._offset)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return LaurentPoly(self._c / scalar, self._offset)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            if np.isscalar(other):
                other = LaurentPoly.constant(other)
            else:
                return NotImplemented
        a, b = self.trim(), other.trim()
        if not len(a._c) or not len(b._c):
            return not len(a._c) and not len(b._c)
        return a._offset == b._offset and np.array_equal(a._c, b._c)

    __hash__ = None

    def allclose(self, other: "LaurentPoly", tol: float = COEFF_TOL) -> bool:
        other = _as_poly(other)
        return (self - other).is_zero(tol)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``z**k``."""
        return LaurentPoly(self._c, self._offset + k)

    def substitute_power(self, n: int) -> "LaurentPoly":
        """Return ``p(z**n)`` for a positive integer ``n``."""
        if n < 1:
            raise ValueError("power must be positive")
        if not len(self._c) or n == 1:
            return self
        c = np.zeros((len(self._c) - 1) * n + 1, dtype=self._c.dtype)
        c[::n] = self._c
        return LaurentPoly(c, self._offset * n)

    def adjoint(self) -> "LaurentPoly":
        """``p*(z) = conj(p)(1/z)``; for real coefficients just ``p(1/z)``."""
        if not len(self._c):
            return self
        return LaurentPoly(np.conj(self._c[::-1]), -self.high)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        if not len(self._c):
            return np.zeros_like(z)
        powers = z[..., None] ** self.exponents
        return powers @ self._c.astype(complex)

    def sq_norm(self) -> float:
        return float(np.sum(np.abs(self._c) ** 2))

    def __repr__(self) -> str:
        if not len(self._c):
            return "LaurentPoly(0)"
        terms = ", ".join(f"{n}: {v:.6g}" for n, v in self.to_dict().items())
        return f"LaurentPoly({{{terms}}})"


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if np.isscalar(x):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as LaurentPoly")


def eval_on_circle(p: LaurentPoly, omega):
    """Evaluate ``p`` at ``z = exp(-i omega)``."""
    return p(np.exp(-1j * np.asarray(omega, dtype=float)))


def adjoint(p: LaurentPoly) -> LaurentPoly:
    return p.adjoint()


class PolyMatrix:
    """Square matrix of :class:`LaurentPoly` in one formal variable.

    ``var`` names the variable (``"z"`` or ``"w"``); ``None`` marks a
    constant matrix, which multiplies with either.
    """

    __slots__ = ("_e", "var")

    def __init__(self, entries: Iterable[Iterable], var: str | None = "z"):
        rows = [tuple(_as_poly(e) for e in row) for row in entries]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("PolyMatrix must be square and non-empty")
        self._e = tuple(rows)
        if var is not None and all(p.is_constant() for r in rows for p in r):
            var = None
        self.var = var

    @classmethod
    def constant(cls, array) -> "PolyMatrix":
        a = np.asarray(array)
        return cls([[LaurentPoly.constant(v) for v in row] for row in a], var=None)

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls.constant(np.eye(n))

    @classmethod
    def diagonal(cls, polys: Sequence[LaurentPoly], var: str | None = "z") -> "PolyMatrix":
        n = len(polys)
        return cls(
            [[polys[i] if i == j else LaurentPoly() for j in range(n)] for i in range(n)],
            var=var,
        )

    @property
    def order(self) -> int:
        return len(self._e)

    def __getitem__(self, ij) -> LaurentPoly:
        i, j = ij
        return self._e[i][j]

    def rows(self) -> list[list[LaurentPoly]]:
        return [list(r) for r in self._e]

    def column(self, j: int) -> list[LaurentPoly]:
        return [r[j] for r in self._e]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return mat_mul(self, other)

    def adjoint(self) -> "PolyMatrix":
        n = self.order
        return PolyMatrix([[self._e[j][i].adjoint() for j in range(n)] for i in range(n)], self.var)

    def substitute_power(self, n: int, var: str = "z") -> "PolyMatrix":
        """Replace the variable by its ``n``-th power (``w -> z**n``)."""
        return PolyMatrix([[p.substitute_power(n) for p in r] for r in self._e], var=var)

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(p) for p in r] for r in self._e], self.var)

    def allclose(self, other: "PolyMatrix", tol: float = COEFF_TOL) -> bool:
        if self.order != other.order:
            return False
        return all(
            self._e[i][j].allclose(other[i, j], tol)
            for i in range(self.order)
            for j in range(self.order)
        )

    def __call__(self, z) -> np.ndarray:
        """Evaluate at ``z`` (scalar or array); result has shape ``z.shape + (n, n)``."""
        z = np.asarray(z, dtype=complex)
        n = self.order
        out = np.empty(z.shape + (n, n), dtype=complex)
        for i in range(n):
            for j in range(n):
                out[..., i, j] = self._e[i][j](z)
        return out

    def on_circle(self, omega) -> np.ndarray:
        return self(np.exp(-1j * np.asarray(omega, dtype=float)))

    def __repr__(self) -> str:
        body = ";\n ".join(", ".join(repr(p) for p in r) for r in self._e)
        return f"PolyMatrix(var={self.var!r},\n [{body}])"


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Exact product of two polynomial matrices."""
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    if a.var is not None and b.var is not None and a.var != b.var:
        raise ValueError(f"variable mismatch: {a.var!r} vs {b.var!r}")
    n = a.order
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = LaurentPoly()
            for s in range(n):
                acc = acc + a[i, s] * b[s, j]
            row.append(acc)
        entries.append(row)
    return PolyMatrix(entries, var=a.var if a.var is not None else b.var)


def is_paraunitary(m: PolyMatrix, grid_size: int = 256, tol: float = 1e-10) -> tuple[bool, float]:
    """Check ``M M^* = I`` at ``grid_size`` equispaced points of the unit circle.

    Returns ``(passed, worst absolute entry deviation)``.
    """
    if grid_size < 2 * m.order:
        raise ValueError(f"grid_size must be at least {2 * m.order}")
    omega = 2 * np.pi * np.arange(grid_size) / grid_size
    vals = m.on_circle(omega)
    gram = vals @ np.conj(np.swapaxes(vals, -1, -2))
    err = float(np.max(np.abs(gram - np.eye(m.order))))
    return err <= tol, err
