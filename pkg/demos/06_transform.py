"""
A periodic multi-band wavelet transform
=======================================

Analysis convolves with every filter and keeps every ``N``-th output, then
repeats on the scaling band.  The transform is orthogonal, so synthesis
is its transpose and energy is preserved.
"""

import numpy as np

from nbandwave import analyze, lookup, synthesize

rng = np.random.default_rng(0)

###############################################################################
# A smooth signal with a jump, analysed by a three-band bank.

n = 243
x = np.sin(2 * np.pi * np.arange(n) / n) + (np.arange(n) > 150)
bank = lookup("n3-t-pi4").build()
d = analyze(bank, x, levels=3)

print("approx length:", len(d.approx))
for level, bands in enumerate(d.details):
    energies = ", ".join(f"{np.sum(b ** 2):.3e}" for b in bands)
    print(f"level {level} (coarse to fine): detail energies {energies}")

###############################################################################
# Perfect reconstruction and energy preservation.

y = synthesize(bank, d)
print("\nrelative reconstruction error:", np.linalg.norm(y - x) / np.linalg.norm(x))
print("energy ratio:", d.energy() / np.sum(x ** 2))

###############################################################################
# Keep only the largest 10 percent of coefficients.

flat = d.flatten()
cut = np.quantile(np.abs(flat), 0.9)
kept = type(d).unflatten(np.where(np.abs(flat) >= cut, flat, 0.0), 3, 3)
approx = synthesize(bank, kept)
print("error with 10% of coefficients:", np.linalg.norm(approx - x) / np.linalg.norm(x))

###############################################################################
# Lengths must be divisible by ``N**levels``.

try:
    analyze(bank, x[:240], levels=3)
except ValueError as exc:
    print("\n", exc)
