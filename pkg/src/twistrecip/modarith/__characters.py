from types import MappingProxyType
import logging
import threading

import mpmath
from pydantic import BaseModel, ConfigDict
from sympy import primitive_root as _sympy_primitive_root

from twistrecip.special import ApComplex, working_dps
from twistrecip.utils.exceptions import DomainError, NotCoprimeError, ValidationError
from twistrecip.utils.validators import validate_prime
from .__phase import mod_inverse

logger = logging.getLogger(__name__)

__lock = threading.Lock()
__roots: MappingProxyType = MappingProxyType({})
__logs: MappingProxyType = MappingProxyType({})


def is_odd_prime(q: int) -> bool:
    try:
        validate_prime(q)
    except ValidationError:
        return False
    return True


def _cached(q: int):
    global __roots, __logs
    root = __roots.get(q)
    if root is not None:
        return root, __logs[q]
    with __lock:
        if q not in __roots:
            validate_prime(q)
            g = int(_sympy_primitive_root(q))
            table = {}
            value = 1
            for e in range(q - 1):
                table[value] = e
                value = value * g % q
            logger.debug('primitive root %d cached for modulus %d', g, q)
            __logs = MappingProxyType({**__logs, q: MappingProxyType(table)})
            __roots = MappingProxyType({**__roots, q: g})
        return __roots[q], __logs[q]


def primitive_root(q: int) -> int:
    """Smallest primitive root modulo the odd prime q."""
    return _cached(q)[0]


def discrete_log(n: int, q: int) -> int:
    if n % q == 0:
        raise NotCoprimeError(f'{n} is divisible by the modulus {q}.')
    return _cached(q)[1][n % q]


class DirichletCharacter(BaseModel):
    """
    The character mod an odd prime q sending the primitive root g to e(index / (q - 1)).
    """
    model_config = ConfigDict(frozen=True)

    modulus: int
    index: int

    def model_post_init(self, context):
        validate_prime(self.modulus)
        if not 0 <= self.index < self.modulus - 1:
            raise ValidationError(
                f'character index must lie in [0, {self.modulus - 2}], got {self.index}.')

    @property
    def order(self) -> int:
        return self.modulus - 1

    @property
    def is_primitive(self) -> bool:
        return self.index != 0

    @property
    def parity(self) -> int:
        # -1 = g^{(q-1)/2}
        return -1 if self.index % 2 else 1

    def exponent(self, n: int) -> int | None:
        """chi(n) = e(exponent / (q - 1)); None when q divides n."""
        if n % self.modulus == 0:
            return None
        return self.index * discrete_log(n, self.modulus) % self.order

    def value(self, n: int, digits: int | None = None):
        e = self.exponent(n)
        if e is None:
            return mpmath.mpc(0)
        if digits is None:
            return mpmath.expjpi(mpmath.mpf(2 * e) / self.order)
        with mpmath.workdps(working_dps(digits)):
            return mpmath.expjpi(mpmath.mpf(2 * e) / self.order)

    def conjugate(self) -> 'DirichletCharacter':
        return DirichletCharacter(modulus=self.modulus, index=-self.index % self.order)

    def __mul__(self, other: 'DirichletCharacter') -> 'DirichletCharacter':
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        if other.modulus != self.modulus:
            raise ValidationError('characters to different moduli cannot be multiplied.')
        return DirichletCharacter(modulus=self.modulus, index=(self.index + other.index) % self.order)


def characters(q: int) -> list[DirichletCharacter]:
    validate_prime(q)
    return [DirichletCharacter(modulus=q, index=j) for j in range(q - 1)]


def primitive_characters(q: int) -> list[DirichletCharacter]:
    return characters(q)[1:]


def gauss_sum_raw(chi: DirichletCharacter):
    if not chi.is_primitive:
        raise ValidationError(f'the principal character mod {chi.modulus} is not primitive.')
    q = chi.modulus
    return mpmath.fsum(
        chi.value(n) * mpmath.expjpi(mpmath.mpf(2 * n) / q) for n in range(1, q)
    )


def gauss_sum(chi: DirichletCharacter, digits: int) -> ApComplex:
    """tau(chi) = sum_{n mod q} chi(n) e(n/q)."""
    with mpmath.workdps(working_dps(digits)):
        return ApComplex(gauss_sum_raw(chi), digits)


def gauss_orthogonality_residual(q: int, m: int, digits: int):
    """
    | (1/phi(q)) sum over primitive chi of tau(chi) chi(m) - e(m-bar/q) - 1/phi(q) |.
    """
    validate_prime(q)
    if m % q == 0:
        raise NotCoprimeError(f'{q} divides {m}; only the coprime case is covered.')
    phi = q - 1
    with mpmath.workdps(working_dps(digits)):
        total = mpmath.fsum(gauss_sum_raw(chi) * chi.value(m) for chi in primitive_characters(q))
        m_bar = mod_inverse(m, q)
        return abs(total / phi - mpmath.expjpi(mpmath.mpf(2 * m_bar) / q) - mpmath.mpf(1) / phi)


def character_sum_residual(q: int, m: int, digits: int):
    """| sum over all chi mod q of chi(m) - phi(q) [m = 1 mod q] |."""
    validate_prime(q)
    if m % q == 0:
        raise DomainError(f'{q} divides {m}.')
    with mpmath.workdps(working_dps(digits)):
        total = mpmath.fsum(chi.value(m) for chi in characters(q))
        expected = q - 1 if m % q == 1 else 0
        return abs(total - expected)
