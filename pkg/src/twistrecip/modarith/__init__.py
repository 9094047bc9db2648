from .__phase import ReducedPhase, reduce_phase, mod_inverse, additive_reciprocity_check
from .__characters import (
    DirichletCharacter,
    is_odd_prime,
    primitive_root,
    discrete_log,
    characters,
    primitive_characters,
    gauss_sum,
    gauss_sum_raw,
    gauss_orthogonality_residual,
    character_sum_residual,
)
