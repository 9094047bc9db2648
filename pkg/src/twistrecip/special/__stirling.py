import logging

import mpmath

from twistrecip.utils.exceptions import DomainError
from .__apcomplex import ApComplex, to_mpc, digits_of, working_dps

logger = logging.getLogger(__name__)


def _mul(a, b, order):
    out = [mpmath.mpc(0)] * (order + 1)
    for i, ai in enumerate(a[:order + 1]):
        if ai == 0:
            continue
        for j in range(order + 1 - i):
            out[i + j] += ai * b[j]
    return out


def _exp_series(log_coeffs, order):
    # exp of a series with zero constant term: a_m = (1/m) sum_j j L_j a_{m-j}
    a = [mpmath.mpc(1)] + [mpmath.mpc(0)] * order
    for m in range(1, order + 1):
        a[m] = mpmath.fsum(j * log_coeffs[j] * a[m - j] for j in range(1, m + 1)) / m
    return a


def _log_remainder_series(z, order):
    """
    Power series in u = 1/t of log(Gamma(z+it) / main term), through u^order.
    """
    iz = 1j * z
    log_coeffs = [mpmath.mpc(0)] * (order + 1)

    # (z - 1/2) log(1 - i z u)
    for j in range(1, order + 1):
        log_coeffs[j] -= (z - mpmath.mpf(1) / 2) * iz ** j / j

    # i t log(1 - i z u) without its constant z
    for j in range(2, order + 2):
        log_coeffs[j - 1] -= 1j * iz ** j / j

    # Bernoulli corrections in 1/w = -iu / (1 - i z u)
    for m in range(1, (order + 1) // 2 + 1):
        n = 2 * m - 1
        scale = mpmath.bernoulli(2 * m) / (2 * m * n) * (-1j) ** n
        for j in range(order + 1 - n):
            log_coeffs[n + j] += scale * mpmath.binomial(n + j - 1, j) * iz ** j
    return log_coeffs


def stirling_coefficients(z, M: int, digits: int | None = None) -> list[ApComplex]:
    """Coefficients a_0 = 1, a_1, ..., a_M of the expansion in powers of 1/t."""
    digits = digits_of(z, digits)
    with mpmath.workdps(working_dps(digits)):
        coeffs = _exp_series(_log_remainder_series(to_mpc(z), M), M)
        return [ApComplex(c, digits) for c in coeffs]


def stirling_main_term(z, t):
    sign = 1 if t > 0 else -1
    at = abs(t)
    return (
        mpmath.sqrt(2 * mpmath.pi)
        * mpmath.expjpi(-mpmath.mpf(sign) / 4)
        * mpmath.power(at, z - mpmath.mpf(1) / 2)
        * mpmath.exp(-mpmath.pi * at / 2 + 1j * t * mpmath.log(at) - 1j * t + 1j * z * mpmath.pi * sign / 2)
    )


def stirling_approx(z, t, M: int, digits: int | None = None):
    """
    Main term of Gamma(z+it) times (1 + sum_{m<=M} a_m(z) t^{-m}).

    Returns the approximation and its relative deviation from Gamma(z+it).
    """
    digits = digits_of(z, digits)
    with mpmath.workdps(working_dps(digits)):
        z = to_mpc(z)
        t = mpmath.mpf(t)
        if abs(t) <= mpmath.mpf(1) / 2:
            raise DomainError(f'Stirling expansion needs |t| > 1/2, got t={mpmath.nstr(t, 5)}.')
        if z.real < 0:
            raise DomainError('Stirling expansion is stated for Re z >= 0.')
        coeffs = _exp_series(_log_remainder_series(z, M), M)
        u = 1 / t
        correction = mpmath.fsum(c * u ** m for m, c in enumerate(coeffs))
        approximation = stirling_main_term(z, t) * correction
        exact = mpmath.gamma(z + 1j * t)
        deviation = abs(approximation - exact) / abs(exact)
        logger.debug('stirling z=%s t=%s M=%d deviation=%s', z, t, M, mpmath.nstr(deviation, 5))
        return ApComplex(approximation, digits), deviation


def stirling_modulus_bound(z, t):
    """
    Upper bound for |Gamma(z+it)| from the leading Stirling term,
    sqrt(2 pi) |t|^{Re z - 1/2} e^{-pi |t| / 2} e^{-Im(z) pi sgn(t) / 2},
    inflated by the first correction. Meant for |t| >= 4 (|z|^2 + 1).
    """
    z = mpmath.mpc(z)
    t = mpmath.mpf(t)
    at = abs(t)
    sign = 1 if t > 0 else -1
    lead = (
        mpmath.sqrt(2 * mpmath.pi)
        * mpmath.power(at, z.real - mpmath.mpf(1) / 2)
        * mpmath.exp(-mpmath.pi * at / 2 - z.imag * mpmath.pi * sign / 2)
    )
    return lead * (1 + 2 * (abs(z) ** 2 + 1) / at)
