from .__apcomplex import ApComplex, to_mpc, digits_of, working_dps
from .__gamma import (
    gamma,
    gamma_raw,
    upper_incomplete_gamma,
    upper_gamma_raw,
    crossover,
    nonpositive_integer,
    positive_integer,
)
from .__stirling import (
    stirling_approx,
    stirling_coefficients,
    stirling_main_term,
    stirling_modulus_bound,
)
