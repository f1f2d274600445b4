"""
A one-parameter family of four-tap two-band banks
==================================================

Every bank here comes from a single angle ``t``.  The free pair ``(t, u)``
is admissible only on the line ``u = pi/4 - t``, and the resulting taps
depend on ``cos 2t`` and ``sin 2t`` alone.
"""

import math

import numpy as np

from nbandwave import family_n2, lookup, verify_bank
from nbandwave.presets import REFLECTED_PAIRS, enumerate_presets

np.set_printoptions(precision=6, suppress=True)

###############################################################################
# Sweeping ``t`` over a period of length ``pi`` walks through Haar banks
# on different unit intervals and through the classical four-tap Daubechies
# filter with its coefficients permuted.

for entry in enumerate_presets():
    if entry.scale != 2:
        continue
    bank = family_n2(entry.t)
    print(f"{entry.name:<20} t = {entry.t / math.pi:+.4f} pi   h = {bank.h}")

###############################################################################
# The classical Daubechies bank sits at ``t = -pi/12``.

daub = family_n2(-math.pi / 12)
r3 = math.sqrt(3)
print("\nDaubechies h:", daub.h)
print("closed form  :", math.sqrt(2) / 8 * np.array([1 + r3, 3 + r3, 3 - r3, 1 - r3]))

###############################################################################
# A pair that is off the admissible line is refused, and the error carries
# the residual of the admissibility system.

try:
    family_n2(0.1, 0.2)
except ValueError as exc:
    print("\nrejected:", exc)

###############################################################################
# Reversing the taps of one bank gives another member of the family.

for a, b in REFLECTED_PAIRS:
    diff = np.max(np.abs(lookup(a).build().h[::-1] - lookup(b).build().h))
    print(f"reverse({a}) vs {b}: {diff:.1e}")

###############################################################################
# Each bank passes the filter-level checks.

print()
print(verify_bank(daub).to_table())
