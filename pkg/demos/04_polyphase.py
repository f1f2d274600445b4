"""
Polyphase matrices and paraunitarity
=====================================

Splitting each frequency function into its ``N`` residue classes of
exponents gives the polyphase matrix ``A(w)`` with ``w = z**N``.  The
bank is orthogonal exactly when ``A`` is unitary on the unit circle.
"""

import numpy as np

from nbandwave import LaurentPoly, PolyMatrix, decompose, lookup, modulation_matrix, recompose
from nbandwave.laurent import is_paraunitary
from nbandwave.polyphase import paraunitarity_transport

np.set_printoptions(precision=6, suppress=True)

###############################################################################
# Haar: the polyphase matrix is constant.

haar = [LaurentPoly([0.5, 0.5]), LaurentPoly([-0.5, 0.5])]
print("Haar A(w) =\n", decompose(haar, 2)(1.0).real)

###############################################################################
# For a three-band bank the entries are polynomials in ``w``.

rows = lookup("n3-t-pi6").build().frequency_functions()
A = decompose(rows, 3)
print("\nA[0, 0] coefficients:", A[0, 0].coeffs)
print("round trip exact:", all(p.allclose(q) for p, q in zip(rows, recompose(A, 3))))

###############################################################################
# Unitarity of ``A`` on the circle and unitarity of the modulation matrix
# are the same property seen in two variables.

print("\n", paraunitarity_transport(A))
print("modulation matrix:", is_paraunitary(modulation_matrix(rows)))

###############################################################################
# Doubling one row breaks both checks by the same amount.

entries = [list(r) for r in A.rows()]
entries[2] = [2 * p for p in entries[2]]
print("\n", paraunitarity_transport(PolyMatrix(entries, var="w")))
