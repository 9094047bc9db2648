import logging

import mpmath

from twistrecip.utils.exceptions import DomainError, PoleError, PrecisionError
from .__apcomplex import ApComplex, to_mpc, digits_of, working_dps

logger = logging.getLogger(__name__)

MAX_TERMS = 100000


def nonpositive_integer(z) -> bool:
    z = mpmath.mpc(z)
    return z.imag == 0 and z.real <= 0 and mpmath.isint(z.real)


def positive_integer(z) -> bool:
    z = mpmath.mpc(z)
    return z.imag == 0 and z.real >= 1 and mpmath.isint(z.real)


def gamma_raw(z):
    if nonpositive_integer(z):
        raise PoleError(f'Gamma has a pole at {mpmath.nstr(mpmath.mpc(z).real, 5)}.',
                        location=int(mpmath.mpc(z).real))
    return mpmath.gamma(z)


def gamma(z, digits: int | None = None) -> ApComplex:
    digits = digits_of(z, digits)
    with mpmath.workdps(working_dps(digits)):
        return ApComplex(gamma_raw(to_mpc(z)), digits)


def _integer_order(m: int, x):
    # Gamma(m, x) = (m-1)! e^{-x} sum_{i<m} x^i / i!
    term = mpmath.mpf(1)
    partial = mpmath.mpf(1)
    for i in range(1, m):
        term = term * x / i
        partial += term
    return mpmath.factorial(m - 1) * mpmath.exp(-x) * partial


def _series(nu, x):
    # Gamma(nu) - x^nu e^{-x} sum_m x^m / (nu (nu+1) ... (nu+m))
    term = 1 / nu
    total = term
    m = 0
    eps = mpmath.eps
    while True:
        m += 1
        if m > MAX_TERMS:
            raise PrecisionError('incomplete Gamma series did not settle.', achieved_bound=abs(term))
        ratio = x / (nu + m)
        term = term * ratio
        total += term
        # once the ratio is below 1/2 the tail is dominated by the last term
        if abs(ratio) <= 0.5 and abs(term) <= eps * abs(total):
            break
    return mpmath.gamma(nu) - mpmath.power(x, nu) * mpmath.exp(-x) * total


def _continued_fraction(nu, x):
    # modified Lentz on e^{-x} x^nu / (x + 1 - nu - 1(1-nu)/(x + 3 - nu - ...))
    tiny = mpmath.mpf(2) ** (-2 * mpmath.mp.prec)
    eps = mpmath.eps
    b = x + 1 - nu
    c = 1 / tiny
    d = 1 / b
    h = d
    delta = h
    i = 0
    while True:
        i += 1
        if i > MAX_TERMS:
            raise PrecisionError('incomplete Gamma continued fraction did not settle.',
                                 achieved_bound=abs(delta - 1))
        an = -i * (i - nu)
        b += 2
        d = an * d + b
        if d == 0:
            d = tiny
        c = b + an / c
        if c == 0:
            c = tiny
        d = 1 / d
        delta = d * c
        h *= delta
        if abs(delta - 1) <= eps:
            break
    return mpmath.exp(-x) * mpmath.power(x, nu) * h


def crossover(nu) -> float:
    return abs(mpmath.mpc(nu)) + 2


def upper_gamma_raw(nu, x):
    """Gamma(nu, x) in the ambient mpmath context; ``x`` must be a positive real."""
    if positive_integer(nu):
        return mpmath.mpc(_integer_order(int(mpmath.mpc(nu).real), x))
    if nonpositive_integer(nu) or x >= crossover(nu):
        return mpmath.mpc(_continued_fraction(mpmath.mpc(nu), x))
    return mpmath.mpc(_series(mpmath.mpc(nu), x))


def upper_incomplete_gamma(nu, x, digits: int | None = None) -> ApComplex:
    """
    Upper incomplete Gamma function Gamma(nu, x) for real x > 0.

    Integer orders use the finite exponential sum; otherwise the power series is
    used below the crossover ``x = |nu| + 2`` and the continued fraction above it.
    """
    digits = digits_of(nu, digits)
    with mpmath.workdps(working_dps(digits)):
        x = to_mpc(x)
        if x.imag != 0 or x.real <= 0:
            raise DomainError(f'the incomplete Gamma argument must be a positive real, got {x}.')
        return ApComplex(upper_gamma_raw(to_mpc(nu), x.real), digits)
