"""Periodic N-band discrete wavelet transform.

One analysis level computes, for every filter ``f`` of the bank,

    out[m] = sum_n f_n x[(N m + n) mod len(x)]

and recurses on the scaling-filter output.  Synthesis is the exact
adjoint, which is also the inverse because the bank is orthogonal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .construct import FilterBank

__all__ = ["Decomposition", "TransformError", "analyze", "synthesize", "max_levels"]


class TransformError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Coefficients of a multi-level transform.

    ``details[0]`` belongs to the coarsest level and ``details[-1]`` to the
    finest; each entry holds the ``N - 1`` band arrays in band order.
    """

    scale: int
    approx: np.ndarray
    details: tuple[tuple[np.ndarray, ...], ...]

    @property
    def levels(self) -> int:
        return len(self.details)

    @property
    def length(self) -> int:
        return len(self.approx) + sum(len(b) for lvl in self.details for b in lvl)

    def energy(self) -> float:
        return float(np.sum(self.approx**2) + sum(np.sum(b**2) for lvl in self.details for b in lvl))

    def flatten(self) -> np.ndarray:
        """Approximation, then bands of each level, coarse to fine."""
        parts = [self.approx] + [b for lvl in self.details for b in lvl]
        return np.concatenate(parts)

    @classmethod
    def unflatten(cls, flat, scale: int, levels: int) -> "Decomposition":
        flat = np.asarray(flat, dtype=float)
        total = len(flat)
        if levels < 1 or total % scale**levels:
            raise TransformError(f"{total} coefficients cannot hold {levels} levels at scale {scale}")
        size = total // scale**levels
        approx = flat[:size]
        pos = size
        details = []
        for _ in range(levels):
            bands = []
            for _ in range(scale - 1):
                bands.append(flat[pos: pos + size])
                pos += size
            details.append(tuple(bands))
            size *= scale
        return cls(scale, approx, tuple(details))


def max_levels(length: int, scale: int) -> int:
    levels = 0
    while length % scale == 0 and length > 0:
        length //= scale
        levels += 1
    return levels


def _analysis_step(bank: FilterBank, x: np.ndarray) -> list[np.ndarray]:
    n = bank.scale
    size = len(x)
    m = np.arange(size // n)
    idx = (n * m[:, None] + bank.indices[None, :]) % size
    gathered = x[idx]
    return [gathered @ f for f in bank.filters]


def _synthesis_step(bank: FilterBank, bands: list[np.ndarray]) -> np.ndarray:
    n = bank.scale
    half = len(bands[0])
    size = n * half
    m = np.arange(half)
    idx = (n * m[:, None] + bank.indices[None, :]) % size
    out = np.zeros(size)
    for coeffs, f in zip(bands, bank.filters):
        np.add.at(out, idx.ravel(), (coeffs[:, None] * f[None, :]).ravel())
    return out


def analyze(bank: FilterBank, x, levels: int = 1) -> Decomposition:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or len(x) == 0:
        raise TransformError("signal must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(x)):
        raise TransformError("signal samples must be finite")
    if levels < 1:
        raise TransformError("levels must be >= 1")
    n = bank.scale
    if len(x) % n**levels:
        raise TransformError(
            f"length {len(x)} is not divisible by {n}**{levels}; at most {max_levels(len(x), n)} levels possible"
        )
    details = []
    approx = x
    for _ in range(levels):
        out = _analysis_step(bank, approx)
        approx = out[0]
        details.append(tuple(out[1:]))
    return Decomposition(n, approx, tuple(reversed(details)))


def synthesize(bank: FilterBank, d: Decomposition) -> np.ndarray:
    n = bank.scale
    if d.scale != n:
        raise TransformError(f"decomposition has scale {d.scale}, bank has scale {n}")
    x = np.asarray(d.approx, dtype=float)
    for bands in d.details:
        if len(bands) != n - 1 or any(len(b) != len(x) for b in bands):
            raise TransformError("decomposition band shapes are inconsistent with the bank")
        x = _synthesis_step(bank, [x, *[np.asarray(b, dtype=float) for b in bands]])
    return x
