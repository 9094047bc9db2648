from math import gcd
import logging
import threading

import mpmath
from sympy import divisor_count, primerange

from twistrecip.special import ApComplex, working_dps
from twistrecip.utils.exceptions import DomainError
from twistrecip.utils.validators import validate_weight
from .__series import delta_series, eisenstein_series, multiply
from .__cache import load_coefficients, store_coefficients

logger = logging.getLogger(__name__)

# exponents (e4, e6) of the Eisenstein monomial multiplying Delta
EISENSTEIN_MONOMIALS = {
    12: (0, 0),
    16: (1, 0),
    18: (0, 1),
    20: (2, 0),
    22: (1, 1),
    26: (2, 1),
}


def cusp_form_series(weight: int, length: int) -> list[int]:
    """Coefficients of q^0 .. q^{length-1} of the normalized eigenform of this weight."""
    weight = validate_weight(weight)
    series = delta_series(length)
    e4_power, e6_power = EISENSTEIN_MONOMIALS[weight]
    if e4_power:
        e4 = eisenstein_series(4, length)
        for _ in range(e4_power):
            series = multiply(series, e4, length)
    if e6_power:
        series = multiply(series, eisenstein_series(6, length), length)
    return series


class HeckeEigenform:
    """
    The normalized level-1 cusp eigenform of a supported weight, with a growable
    cache of exact Fourier coefficients a_f(1), a_f(2), ...

    Readers work on an immutable tuple snapshot; ``ensure`` swaps in a longer
    snapshot under a lock, so a reader never observes a partial prefix.
    """

    def __init__(self, weight: int, coeffs=()):
        self.weight = validate_weight(weight)
        self.__coeffs: tuple[int, ...] = tuple(coeffs)
        self.__lock = threading.Lock()

    def __getstate__(self):
        return {'weight': self.weight, 'coeffs': self.__coeffs}

    def __setstate__(self, state):
        self.__init__(state['weight'], state['coeffs'])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.__coeffs

    @property
    def cache_len(self) -> int:
        return len(self.__coeffs)

    def ensure(self, n: int) -> tuple[int, ...]:
        snapshot = self.__coeffs
        if len(snapshot) >= n:
            return snapshot
        with self.__lock:
            if len(self.__coeffs) < n:
                target = max(n, 2 * len(self.__coeffs))
                logger.debug('extending weight %d coefficients to %d', self.weight, target)
                coeffs = load_coefficients(self.weight, target)
                if coeffs is None:
                    coeffs = cusp_form_series(self.weight, target + 1)[1:]
                    store_coefficients(self.weight, coeffs)
                self.__coeffs = tuple(coeffs[:target])
            return self.__coeffs

    def coefficient(self, n: int) -> int:
        if n < 1:
            raise DomainError(f'Fourier coefficients are indexed from 1, got {n}.')
        return self.ensure(n)[n - 1]

    def __repr__(self):
        return f'HeckeEigenform(weight={self.weight}, cache_len={self.cache_len})'


def build_form(weight: int, N: int) -> HeckeEigenform:
    weight = validate_weight(weight)
    if N < 1:
        raise DomainError(f'the number of coefficients must be positive, got {N}.')
    form = HeckeEigenform(weight)
    return HeckeEigenform(weight, form.ensure(N)[:N])


def eigenvalue(form: HeckeEigenform, n: int, digits: int | None = None) -> ApComplex:
    """lambda_f(n) = a_f(n) n^{-(k-1)/2}."""
    if n < 1:
        raise DomainError(f'eigenvalues are indexed from 1, got {n}.')
    with mpmath.workdps(working_dps(digits or 30)):
        value = form.coefficient(n) * mpmath.power(n, -mpmath.mpf(form.weight - 1) / 2)
        return ApComplex(value, digits)


def check_multiplicativity(form: HeckeEigenform, limit: int) -> list[tuple[int, int]]:
    a = (0,) + form.ensure(limit)
    violations = []
    for m in range(2, limit + 1):
        if m * (m + 1) > limit:
            break
        for n in range(m + 1, limit // m + 1):
            if gcd(m, n) == 1 and a[m * n] != a[m] * a[n]:
                violations.append((m, n))
    return violations


def check_prime_power_recursion(form: HeckeEigenform, limit: int) -> list[tuple[int, int]]:
    a = (0,) + form.ensure(limit)
    k = form.weight
    violations = []
    for p in primerange(2, limit + 1):
        if p * p > limit:
            break
        previous, current = 1, p
        while current * p <= limit:
            nxt = current * p
            if a[nxt] != a[p] * a[current] - p ** (k - 1) * a[previous]:
                violations.append((p, nxt))
            previous, current = current, nxt
    return violations


def check_deligne(form: HeckeEigenform, limit: int) -> list[int]:
    # |a(n)| <= d(n) n^{(k-1)/2}, squared to stay in integers
    a = (0,) + form.ensure(limit)
    k = form.weight
    return [
        n for n in range(1, limit + 1)
        if a[n] * a[n] > int(divisor_count(n)) ** 2 * n ** (k - 1)
    ]


def evaluate_q_series(form: HeckeEigenform, z, digits: int = 30):
    """f(z) = sum a_f(n) e(nz) for Im z > 0, truncated below 10^{-(digits+10)}."""
    with mpmath.workdps(working_dps(digits)):
        z = mpmath.mpc(z)
        y = z.imag
        if y <= 0:
            raise DomainError('the q-expansion needs Im z > 0.')
        k = form.weight
        target = (digits + 10) * mpmath.log(10)
        n = 10
        for _ in range(50):
            nxt = int(mpmath.ceil((target + (mpmath.mpf(k + 1) / 2) * mpmath.log(n)) / (2 * mpmath.pi * y))) + 1
            if nxt <= n:
                break
            n = nxt
        coeffs = form.ensure(n)
        q = mpmath.expjpi(2 * z)
        total = mpmath.mpc(0)
        qn = mpmath.mpc(1)
        for c in coeffs[:n]:
            qn *= q
            total += c * qn
        return total
