from math import gcd
import logging

import mpmath

from twistrecip.config import SETTINGS
from twistrecip.hecke import HeckeEigenform, eigenvalue
from twistrecip.lfunctions import LQuery, as_shift, evaluate, evaluate_shifts
from twistrecip.modarith import DirichletCharacter, ReducedPhase, gauss_sum_raw, primitive_characters, reduce_phase
from twistrecip.special import ApComplex, working_dps
from twistrecip.utils.exceptions import CostError, NotCoprimeError, ValidationError
from twistrecip.utils.validators import validate_prime
from .__triple import moment_phase

logger = logging.getLogger(__name__)


def _integer_shift(s: ApComplex) -> int | None:
    if s.imag != 0 or s.real != int(s.real):
        return None
    return int(s.real)


def twist_value(form: HeckeEigenform, phase: ReducedPhase, s, digits: int) -> ApComplex:
    """L(1/2 + s, f x e(a/b)); integer s takes the single-pass shift path."""
    s = as_shift(s, digits)
    j = _integer_shift(s)
    if j is not None and abs(j) <= form.weight // 2 - 1:
        return evaluate_shifts(form, phase, [j], digits)[j]
    return evaluate(LQuery(form=form, phase=phase, s=s, digits=digits))


def c_f(s, q: int, form: HeckeEigenform, digits: int = SETTINGS.DEFAULT_DIGITS) -> ApComplex:
    """lambda_f(q) q^{1/2 - s} - q^{-2s} - 1."""
    validate_prime(q)
    s = as_shift(s, digits)
    with mpmath.workdps(working_dps(digits)):
        lam = eigenvalue(form, q, digits).value
        value = lam * mpmath.sqrt(q) * mpmath.power(q, -s.value) - mpmath.power(q, -2 * s.value) - 1
        return ApComplex(value, digits)


def modular_symbol_moment(form: HeckeEigenform, u: int, v: int, modulus: int, s=0,
                          digits: int = SETTINGS.DEFAULT_DIGITS) -> ApComplex:
    """M_f(s, u, v; m) = L(1/2 + s, f x e(u-bar v / m))."""
    phase = moment_phase(u, v, modulus)
    logger.debug('M(%d,%d;%d) -> phase %s', u, v, modulus, phase)
    return twist_value(form, phase, s, digits)


def additive_twists(form: HeckeEigenform, q: int, s, digits: int) -> list[ApComplex]:
    """L(1/2 + s, f x e(m/q)) for m = 1 .. q - 1."""
    return [twist_value(form, reduce_phase(m, q), s, digits) for m in range(1, q)]


def character_twist(form: HeckeEigenform, chi: DirichletCharacter, s, digits: int,
                    additive: list[ApComplex] | None = None) -> ApComplex:
    """
    L(1/2 + s, f x chi) = (1 / tau(chi-bar)) sum_{m mod q} chi-bar(m) L(1/2 + s, f x e(m/q)).

    ``additive`` may carry the q - 1 additive values already computed for this s.
    """
    if not chi.is_primitive:
        raise ValidationError('only primitive characters can be expanded into additive twists.')
    q = chi.modulus
    if additive is None:
        additive = additive_twists(form, q, s, digits)
    dual = chi.conjugate()
    with mpmath.workdps(working_dps(digits)):
        total = mpmath.fsum(dual.value(m) * additive[m - 1].value for m in range(1, q))
        return ApComplex(total / gauss_sum_raw(dual), digits)


def moment_via_characters(form: HeckeEigenform, p: int, r: int, q: int, s=0,
                          digits: int = SETTINGS.DEFAULT_DIGITS) -> ApComplex:
    """
    (1/phi(q)) [ sum over primitive chi of tau(chi) L(1/2 + s, f x chi-bar) chi(p) chi-bar(r)
                 + c_f(s, q) L(1/2 + s, f) ].
    """
    validate_prime(q)
    if gcd(p * r, q) != 1:
        raise NotCoprimeError(f'{q} divides p r = {p * r}.')
    limit = SETTINGS.CHARACTERS.MAX_MODULUS
    if q > limit:
        cost = (q - 1) ** 2
        raise CostError(
            f'the character expansion mod {q} needs about {cost} products of additive twists; '
            f'moduli above {limit} are refused.',
            cost_estimate=cost,
        )
    s = as_shift(s, digits)
    additive = additive_twists(form, q, s, digits)
    untwisted = twist_value(form, reduce_phase(0, 1), s, digits)
    correction = c_f(s, q, form, digits)
    logger.debug('character moment mod %d: %d primitive characters', q, q - 2)
    with mpmath.workdps(working_dps(digits)):
        terms = []
        for chi in primitive_characters(q):
            twisted = character_twist(form, chi.conjugate(), s, digits, additive=additive)
            terms.append(
                gauss_sum_raw(chi) * twisted.value * chi.value(p) * mpmath.conj(chi.value(r))
            )
        total = mpmath.fsum(terms) + correction.value * untwisted.value
        return ApComplex(total / (q - 1), digits)
