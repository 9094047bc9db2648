from .__contour import (
    ContourSpec,
    Integrand,
    INTEGRANDS,
    make_integrand,
    integrate_line,
    quadrature_digits,
    vertical_line_integral,
    path_independence_residual,
)
from .__lemmas import (
    DEFAULT_TOL,
    taylor_remainder,
    mellin_exp_residual,
    residue_value,
    residue_circle,
    J_closed_form,
    J_numeric,
    I_numeric,
    I_leading_term,
    Q_argument,
    Q_closed_form,
    Q_via_Q0identity,
    Q_decay_constant,
)
