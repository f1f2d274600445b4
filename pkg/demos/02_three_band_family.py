"""
Three-band banks from a rotation about the diagonal
====================================================

For ``N = 3`` the admissible right factors are rotations fixing the
all-ones vector.  One angle ``t`` sweeps through them and yields six-tap
filters, with Haar-type banks at ``t = 0`` and ``t = 2 pi / 3``.
"""

import math

import numpy as np

from nbandwave import (
    b0_from_rotation,
    conjugated_rotation,
    family_n3,
    general_design,
    helmert_A0,
    rotation_block_M,
    support_length,
)

np.set_printoptions(precision=6, suppress=True)

###############################################################################
# The Helmert-type matrix sends ``(1, 1, 1)`` to ``(sqrt 3, 0, 0)``.

a0 = helmert_A0(3)
print("A0 =\n", a0)
print("A0 @ ones =", a0 @ np.ones(3))

###############################################################################
# A plane rotation about the first axis, carried over to the diagonal,
# gives a matrix whose rows all sum to one.  That row-sum property is
# exactly what admissibility asks of ``B0``.

t = 0.4
b0 = b0_from_rotation(conjugated_rotation(a0, rotation_block_M(3, [t]).T))
print("\nB0(t) =\n", b0)
print("row sums:", b0.sum(axis=1))

###############################################################################
# The closed-form family and the generic assembly agree.

for t in (0.0, math.pi / 6, math.pi / 3, 2 * math.pi / 3, 4 * math.pi / 3):
    closed = family_n3(t)
    generic = general_design(3, [t])
    err = np.max(np.abs(closed.h - generic.h))
    print(f"t = {t / math.pi:.3f} pi   L = {support_length(closed)}   h = {closed.h}   |diff| = {err:.1e}")

###############################################################################
# At ``t = 0`` the scaling filter only touches even indices, so the scaling
# function is the indicator of ``[0, 2)``.

print("\nt = 0:", family_n3(0.0).h * math.sqrt(3))
