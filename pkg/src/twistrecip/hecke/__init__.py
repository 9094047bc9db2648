from functools import lru_cache

from .__series import multiply, power, euler_product, delta_series, eisenstein_series
from .__form import (
    HeckeEigenform,
    EISENSTEIN_MONOMIALS,
    build_form,
    eigenvalue,
    cusp_form_series,
    check_multiplicativity,
    check_prime_power_recursion,
    check_deligne,
    evaluate_q_series,
)
from .__cache import load_coefficients, store_coefficients, atomic_write, SCHEMA_VERSION


@lru_cache()
def get_form(weight: int) -> HeckeEigenform:
    """Process-wide shared form of this weight; its coefficient cache grows on demand."""
    return HeckeEigenform(weight)
