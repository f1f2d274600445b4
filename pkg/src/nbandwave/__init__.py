"""Orthogonal compactly supported wavelet filter banks for any integer scale N >= 2."""

from .cascade import (
    CascadeError,
    SampledFunction,
    cascade_table,
    integer_point_values,
    phi_hat,
    refine_to_grid,
    refinement_residual,
    synthesize_psi,
)
from .construct import (
    ConstructionError,
    DesignInputs,
    FilterBank,
    assemble_H,
    b0_from_rotation,
    conjugated_rotation,
    d_matrix,
    design_n2,
    extract_filters,
    family_n2,
    family_n3,
    general_design,
    helmert_A0,
    r_matrix,
    rotation_block_M,
)
from .laurent import LaurentPoly, PolyMatrix, adjoint, eval_on_circle, is_paraunitary, mat_mul
from .polyphase import decompose, modulation_matrix, paraunitarity_transport, recompose
from .presets import enumerate_presets, lookup
from .transform import Decomposition, analyze, synthesize
from .verify import (
    VerificationReport,
    check_modulation_unitarity,
    check_shift_orthonormality,
    check_sum_rules,
    support_length,
    verify_bank,
)

__version__ = "0.1.0"
