"""Filter-level checks for an orthogonal N-band bank."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .construct import FilterBank
from .laurent import is_paraunitary
from .polyphase import modulation_matrix

__all__ = [
    "CheckResult",
    "VerificationReport",
    "check_sum_rules",
    "check_shift_orthonormality",
    "check_modulation_unitarity",
    "support_length",
    "support_interval",
    "nonzero_span",
    "verify_bank",
    "DISCLAIMER",
]

DEFAULT_TOL = 1e-10
DEFAULT_GRID = 256
TAP_TOL = 1e-12

DISCLAIMER = (
    "Filter-level conditions only; L2-orthonormality of the translates of phi "
    "(Cohen/Lawton-type criteria) is not checked."
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    max_error: float
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)
    disclaimer: str = DISCLAIMER

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "overall": self.overall,
            "checks": [
                {"name": c.name, "pass": c.passed, "max_error": c.max_error, "detail": c.detail}
                for c in self.checks
            ],
            "disclaimer": self.disclaimer,
        }

    def to_table(self) -> str:
        width = max(len(c.name) for c in self.checks) if self.checks else 5
        lines = [f"{'check':<{width}}  result  max_error", "-" * (width + 28)]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            extra = f"  {c.detail}" if c.detail else ""
            lines.append(f"{c.name:<{width}}  {mark:<6}  {c.max_error:.3e}{extra}")
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        lines.append(f"note: {self.disclaimer}")
        return "\n".join(lines)


def check_sum_rules(bank: FilterBank, tol: float = DEFAULT_TOL) -> CheckResult:
    err_h = abs(float(np.sum(bank.h)) - math.sqrt(bank.scale))
    err_g = max(abs(float(np.sum(g))) for g in bank.g)
    err = max(err_h, err_g)
    return CheckResult("sum_rules", err <= tol, err, f"|sum h - sqrt(N)| = {err_h:.2e}, max |sum g| = {err_g:.2e}")


def check_shift_orthonormality(bank: FilterBank, tol: float = DEFAULT_TOL) -> CheckResult:
    """Worst deviation of ``sum_n f_n f'_{n + N m}`` from ``delta(f, f') delta(m, 0)``."""
    n = bank.scale
    filters = bank.filters
    taps = bank.taps
    center = taps - 1
    lags = np.arange(-center, center + 1)
    keep = lags % n == 0
    worst = 0.0
    for i, f in enumerate(filters):
        for j, fp in enumerate(filters):
            if j < i:
                continue
            # full correlation: entry at lag L is sum_n f_n fp_{n+L}
            corr = np.correlate(fp, f, mode="full")[keep]
            target = np.where(lags[keep] == 0, 1.0 if i == j else 0.0, 0.0)
            worst = max(worst, float(np.max(np.abs(corr - target))))
    return CheckResult("shift_orthonormality", worst <= tol, worst)


def check_modulation_unitarity(
    bank: FilterBank, grid_size: int = DEFAULT_GRID, tol: float = DEFAULT_TOL
) -> CheckResult:
    grid_size = max(grid_size, 2 * bank.taps, 2 * bank.scale)
    ok, err = is_paraunitary(modulation_matrix(bank.frequency_functions()), grid_size, tol)
    return CheckResult("modulation_unitarity", ok, err, f"{grid_size} circle samples")


def nonzero_span(bank: FilterBank, tol: float = TAP_TOL) -> tuple[int, int]:
    """First and last index of ``h`` whose tap exceeds ``tol`` in magnitude."""
    nz = np.flatnonzero(np.abs(bank.h) > tol)
    if nz.size == 0:
        raise ValueError("scaling filter is identically zero")
    return bank.offset + int(nz[0]), bank.offset + int(nz[-1])


def support_interval(bank: FilterBank, tol: float = TAP_TOL) -> tuple[float, float]:
    """Interval carrying ``phi``: ``[lo, hi] / (N - 1)`` for the nonzero taps ``lo..hi``."""
    lo, hi = nonzero_span(bank, tol)
    return lo / (bank.scale - 1), hi / (bank.scale - 1)


def support_length(bank: FilterBank, tol: float = TAP_TOL) -> int:
    """Smallest integer ``L`` with ``span(h) <= L (N - 1)``."""
    lo, hi = nonzero_span(bank, tol)
    span = hi - lo
    if span == 0:
        raise ValueError("single-tap scaling filter has no support length L >= 1")
    return -(-span // (bank.scale - 1))


def _support_check(bank: FilterBank) -> CheckResult:
    try:
        L = support_length(bank)
    except ValueError as exc:
        return CheckResult("support_length", False, float("inf"), str(exc))
    lo, hi = nonzero_span(bank)
    frac = (hi - lo) / (bank.scale - 1)
    return CheckResult("support_length", True, 0.0, f"L = {L} (tap span {hi - lo}, exact length {frac:g})")


def verify_bank(bank: FilterBank, tol: float = DEFAULT_TOL, grid_size: int = DEFAULT_GRID) -> VerificationReport:
    return VerificationReport(
        [
            check_sum_rules(bank, tol),
            check_shift_orthonormality(bank, tol),
            check_modulation_unitarity(bank, grid_size, tol),
            _support_check(bank),
        ]
    )
