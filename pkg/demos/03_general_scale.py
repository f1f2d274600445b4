"""
Banks for any number of bands
=============================

Beyond ``N = 3`` the rotation block is a product of Givens rotations
with ``(N - 1)(N - 2) / 2`` angles.  Any choice of angles and of the
degree vector gives an orthogonal bank.
"""

import numpy as np

from nbandwave import general_design, verify_bank
from nbandwave.verify import support_interval

rng = np.random.default_rng(7)

###############################################################################
# Random angles for four, five and six bands.

for n in (4, 5, 6):
    angles = rng.uniform(-np.pi, np.pi, (n - 1) * (n - 2) // 2)
    bank = general_design(n, angles)
    report = verify_bank(bank)
    print(f"N = {n}: {bank.taps} taps, support {support_interval(bank)}, all checks pass: {report.overall}")

###############################################################################
# Longer degree vectors stretch the filters.  Negative degrees move taps to
# negative indices and the provenance records it.

bank = general_design(4, [0.3, -1.1, 0.7], degrees=(0, 2, -1, 1))
print("\noffset", bank.offset, "taps", bank.taps, bank.provenance)
print(verify_bank(bank).to_table())

###############################################################################
# The reflection flag reaches the other connected component of the
# orthogonal group.

print("\nreflected:", verify_bank(general_design(5, rng.normal(size=6), reflect=True)).overall)
