from .__triple import PrimeTriple, moment_phase
from .__moments import (
    c_f,
    twist_value,
    modular_symbol_moment,
    additive_twists,
    character_twist,
    moment_via_characters,
)
from .__theorem import (
    LHS_SIGNS,
    reciprocity_coefficients,
    theorem1_sides,
    corollary_sides,
    lemma_report,
    mutated_theorem1_residuals,
    pole_cancellation_residual,
    decay_constants,
)
