"""
Scaling functions and wavelets on N-adic grids
==============================================

The values of ``phi`` at the integers solve a small eigenproblem.
The refinement equation then fills in every grid point ``m / N**J``
exactly, one level at a time.  The samples are written to CSV files
for plotting.
"""

import math
from pathlib import Path

import numpy as np

from nbandwave import CascadeError, cascade_table, integer_point_values, lookup, phi_hat, refine_to_grid
from nbandwave.cascade import refinement_residual

out_dir = Path(__file__).with_name("output")
out_dir.mkdir(exist_ok=True)

###############################################################################
# Daubechies: ``phi(1) = (1 + sqrt 3) / 2`` and ``phi(2) = (1 - sqrt 3) / 2``.

daub = lookup("n2-daubechies").build()
print("integer values:", integer_point_values(daub))
phi = refine_to_grid(daub, 6)
print("phi(1/2) =", phi.values[32], " expected", (2 + math.sqrt(3)) / 4)
print("refinement residual:", refinement_residual(daub, phi))

###############################################################################
# Compare ``|phi_hat|`` from the infinite product with a quadrature of the
# samples.

for w in (0.5, 1.5, 3.0):
    quad = np.sum(phi.values * np.exp(-1j * w * phi.x)) * float(phi.step)
    print(f"omega = {w}: product {abs(phi_hat(daub, w)):.6f}   quadrature {abs(quad):.6f}")

###############################################################################
# Write every preset's samples to CSV.  One three-band preset has a
# defective eigenvalue 1 at the integers, so its values are not defined and
# the eigenproblem reports that rather than guessing.

for name in ("n2-daubechies", "n3-t-0", "n3-t-pi6", "n3-t-pi3", "n3-t-4pi3"):
    try:
        xs, cols = cascade_table(lookup(name).build(), 6)
    except CascadeError as exc:
        print(f"{name}: {exc.reason}: {exc}")
        continue
    data = np.column_stack([np.array(xs, dtype=float)] + list(cols.values()))
    path = out_dir / f"{name}.csv"
    np.savetxt(path, data, delimiter=",", header=",".join(["x", *cols]), comments="", fmt="%.17g")
    print(f"{name}: {len(xs)} rows -> {path.name}")
