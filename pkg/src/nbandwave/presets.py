"""Worked two- and three-band examples as named fixtures.

Expected taps are written as radical expressions and evaluated on import.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .construct import FilterBank, family_n2, family_n3

__all__ = ["PresetEntry", "lookup", "enumerate_presets", "names", "REFLECTED_PAIRS"]

PI = math.pi
R2, R3, R6 = math.sqrt(2), math.sqrt(3), math.sqrt(6)


def _v(scale, *xs):
    return scale * np.array(xs, dtype=float)


@dataclass(frozen=True, eq=False)
class PresetEntry:
    name: str
    scale: int
    t: float
    u: float | None
    degrees: tuple[int, ...]
    expected_h: np.ndarray
    expected_g: tuple[np.ndarray, ...]
    support: tuple[Fraction, Fraction] | None = None
    note: str = ""
    reflection_of: str | None = None
    extra: dict = field(default_factory=dict)

    def build(self) -> FilterBank:
        """Run the family construction on the stored parameters."""
        if self.scale == 2:
            bank = family_n2(self.t)
        else:
            bank = family_n3(self.t)
        return bank.with_filters(bank.h, bank.g, preset=self.name)

    def expected_bank(self) -> FilterBank:
        return FilterBank(self.scale, self.expected_h, self.expected_g, 0, {"preset": self.name, "source": "expected"})


def _n2(name, t, h, g, support=None, note="", reflection_of=None):
    return PresetEntry(name, 2, t, PI / 4 - t, (0, 1), h, (g,), support, note, reflection_of)


def _n3(name, t, h, g1, g2, support=None, note=""):
    return PresetEntry(name, 3, t, None, (0, 1, 0), h, (g1, g2), support, note)


_S = R2 / 8
F = Fraction

_ENTRIES = [
    _n2("n2-haar-01", 0.0, _v(1 / R2, 1, 1, 0, 0), _v(1 / R2, 0, 0, -1, 1), (F(0), F(1)),
        "Haar, support [0,1]"),
    _n2("n2-haar-03", PI / 4, _v(1 / R2, 1, 0, 0, 1), _v(1 / R2, -1, 0, 0, 1), (F(0), F(3)),
        "stretched Haar, support [0,3]"),
    _n2("n2-haar-23", PI / 2, _v(1 / R2, 0, 0, 1, 1), _v(1 / R2, -1, 1, 0, 0), (F(2), F(3)),
        "Haar, support [2,3]"),
    _n2("n2-haar-12", -PI / 4, _v(1 / R2, 0, 1, 1, 0), _v(1 / R2, 0, 1, -1, 0), (F(1), F(2)),
        "Haar, support [1,2]"),
    _n2("n2-daub-perm-a", PI / 12,
        _v(_S, 3 + R3, 1 + R3, 1 - R3, 3 - R3), _v(_S, -3 + R3, 1 - R3, -1 - R3, 3 + R3), (F(0), F(3)),
        "permuted Daubechies taps"),
    _n2("n2-daub-perm-a-rev", 5 * PI / 12,
        _v(_S, 3 - R3, 1 - R3, 1 + R3, 3 + R3), _v(_S, -3 - R3, 1 + R3, -1 + R3, 3 - R3), (F(0), F(3)),
        "reversed n2-daub-perm-a", "n2-daub-perm-a"),
    _n2("n2-daubechies", -PI / 12,
        _v(_S, 1 + R3, 3 + R3, 3 - R3, 1 - R3), _v(_S, -1 + R3, 3 - R3, -3 - R3, 1 + R3), (F(0), F(3)),
        "classical Daubechies, support length 3"),
    _n2("n2-daubechies-rev", -5 * PI / 12,
        _v(_S, 1 - R3, 3 - R3, 3 + R3, 1 + R3), _v(_S, -1 - R3, 3 + R3, -3 + R3, 1 - R3), (F(0), F(3)),
        "reversed Daubechies", "n2-daubechies"),
    _n2("n2-daub-perm-b", PI / 6,
        _v(_S, 3 + R3, 3 - R3, 1 - R3, 1 + R3), _v(_S, -1 - R3, 1 - R3, -3 + R3, 3 + R3), (F(0), F(3)),
        "permuted Daubechies taps"),
    _n2("n2-daub-perm-b-rev", PI / 3,
        _v(_S, 1 + R3, 1 - R3, 3 - R3, 3 + R3), _v(_S, -3 - R3, 3 - R3, -1 + R3, 1 + R3), (F(0), F(3)),
        "reversed n2-daub-perm-b", "n2-daub-perm-b"),
    _n2("n2-daub-perm-c", -PI / 3,
        _v(_S, 1 - R3, 1 + R3, 3 + R3, 3 - R3), _v(_S, -3 + R3, 3 + R3, -1 - R3, 1 - R3), (F(0), F(3)),
        "permuted Daubechies taps"),
    _n2("n2-daub-perm-c-rev", -PI / 6,
        _v(_S, 3 - R3, 3 + R3, 1 + R3, 1 - R3), _v(_S, -1 + R3, 1 + R3, -3 - R3, 3 - R3), (F(0), F(3)),
        "reversed n2-daub-perm-c", "n2-daub-perm-c"),
    _n3("n3-t-0", 0.0, _v(1 / R3, 1, 0, 1, 0, 1, 0), _v(1 / R2, 1, 0, 0, 0, -1, 0),
        _v(1 / R6, 1, 0, -2, 0, 1, 0), (F(0), F(2)), "Haar, phi = indicator of [0,2)"),
    _n3("n3-t-pi6", PI / 6,
        _v(R3 / 9, 2, 2 - R3, 2 + R3, 1, 1 + R3, 1 - R3),
        _v(R6 / 18, 3 + R3, -3 + R3, R3, -R3, -3 - R3, 3 - R3),
        _v(R6 / 18, -1 + 3 * R3, -1 - R3, -1 - 2 * R3, 1, 1 + R3, 1 - R3),
        note="plotted example"),
    _n3("n3-t-pi4", PI / 4,
        _v(R3 / 18, 4 + R2 - R6, 4 - 2 * R2, 4 + R2 + R6, 2 - R2 + R6, 2 + 2 * R2, 2 - R2 - R6),
        _v(R6 / 36, 2 * R3 + 2 * R6, -3 * R2 + 2 * R3 - R6, 3 * R2 + 2 * R3 - R6,
           -3 * R2 - 2 * R3 + R6, -2 * R3 - 2 * R6, 3 * R2 - 2 * R3 + R6),
        _v(R6 / 36, -2 + 4 * R2 + 2 * R6, -2 + R2 - 3 * R6, -2 - 5 * R2 + R6,
           2 - R2 + R6, 2 + 2 * R2, 2 - R2 - R6),
        note="plotted example"),
    _n3("n3-t-pi3", PI / 3, _v(R3 / 9, 1, 1, 4, 2, 2, -1), _v(R2 / 6, 2, -1, 2, -2, -2, 1),
        _v(R6 / 18, 4, -5, -2, 2, 2, -1), note="plotted example"),
    _n3("n3-t-pi2", PI / 2,
        _v(R3 / 9, 2 - R3, 2, 2 + R3, 1 + R3, 1, 1 - R3),
        _v(R6 / 18, R3, -3 + R3, 3 + R3, -3 - R3, -R3, 3 - R3),
        _v(R6 / 18, -1 + 2 * R3, -1 - 3 * R3, -1 + R3, 1 + R3, 1, 1 - R3),
        note="plotted example"),
    _n3("n3-t-2pi3", 2 * PI / 3, _v(1 / R3, 0, 1, 1, 1, 0, 0), _v(1 / R2, 0, 0, 1, -1, 0, 0),
        _v(1 / R6, 0, -2, 1, 1, 0, 0), (F(1, 2), F(3, 2)), "Haar, phi = indicator of [1/2,3/2)"),
    _n3("n3-t-pi", PI, _v(R3 / 9, 1, 4, 1, 2, -1, 2), _v(R2 / 6, -1, 2, 2, -2, 1, -2),
        _v(R6 / 18, -5, -2, 4, 2, -1, 2), note="plotted example"),
    _n3("n3-t-4pi3", 4 * PI / 3, _v(1 / R3, 1, 1, 0, 0, 0, 1), _v(1 / R2, 0, 1, 0, 0, 0, -1),
        _v(1 / R6, -2, 1, 0, 0, 0, 1), note="support with fractal structure"),
]

_REGISTRY = {e.name: e for e in _ENTRIES}

REFLECTED_PAIRS = [
    ("n2-daub-perm-a", "n2-daub-perm-a-rev"),
    ("n2-daubechies", "n2-daubechies-rev"),
    ("n2-daub-perm-b", "n2-daub-perm-b-rev"),
    ("n2-daub-perm-c", "n2-daub-perm-c-rev"),
]


def names() -> list[str]:
    return list(_REGISTRY)


def lookup(name: str) -> PresetEntry:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; available: {', '.join(_REGISTRY)}") from None


def enumerate_presets() -> list[PresetEntry]:
    return list(_ENTRIES)
