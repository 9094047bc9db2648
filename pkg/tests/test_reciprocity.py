from itertools import permutations

import mpmath
import pytest

from twistrecip.hecke import eigenvalue, get_form
from twistrecip.modarith import reduce_phase
from twistrecip.reciprocity import (
    PrimeTriple,
    c_f,
    corollary_sides,
    decay_constants,
    lemma_report,
    modular_symbol_moment,
    moment_phase,
    moment_via_characters,
    mutated_theorem1_residuals,
    pole_cancellation_residual,
    reciprocity_coefficients,
    theorem1_sides,
)
from twistrecip.utils.exceptions import CostError, NotCoprimeError, ValidationError
from twistrecip.utils.validators import SUPPORTED_WEIGHTS

CONTRACT = mpmath.mpf('1e-20')
PRIMES = (3, 5, 7, 11, 13)


def test_c_f_at_the_centre(delta):
    assert abs(c_f(0, 5, delta, 30) - mpmath.mpf('-0.4544')) < mpmath.mpf('1e-4')


def test_c_f_off_the_centre(delta):
    lam = eigenvalue(delta, 5, 30).value
    with mpmath.workdps(40):
        expected = lam * mpmath.sqrt(5) / 5 - mpmath.mpf(1) / 25 - 1
    assert abs(c_f(1, 5, delta, 30) - expected) < CONTRACT


def test_moment_phases():
    triple = PrimeTriple(p=3, q=7, r=5)
    assert triple.lhs_phases == {
        'M(p,r;q)': reduce_phase(4, 7),
        'M(-q,r;p)': reduce_phase(1, 3),
        'M(-p,q;r)': reduce_phase(1, 5),
    }
    assert triple.rhs_phases == (reduce_phase(1, 5), reduce_phase(2, 3))


def test_corollary_phases():
    triple = PrimeTriple(p=3, q=5, corollary=True)
    assert triple.lhs_phases['M(-p,q;r)'] == reduce_phase(0, 1)
    assert triple.rhs_phases == (reduce_phase(0, 1), reduce_phase(2, 3))


def test_unit_modulus_is_trivial():
    assert moment_phase(3, 7, 1) == reduce_phase(0, 1)


def test_moment_phase_needs_coprime_arguments():
    with pytest.raises(NotCoprimeError):
        moment_phase(3, 7, 3)
    with pytest.raises(ValidationError):
        moment_phase(3, 7, 0)


@pytest.mark.parametrize('kwargs', [
    {'p': 9, 'q': 7, 'r': 5},
    {'p': 3, 'q': 3, 'r': 5},
    {'p': 3, 'q': 7},
    {'p': 3, 'q': 7, 'r': 5, 'corollary': True},
    {'p': 2, 'q': 7, 'r': 5},
])
def test_prime_triple_validation(kwargs):
    with pytest.raises(ValidationError):
        PrimeTriple(**kwargs)


def test_coefficients_are_large_but_finite():
    coefficients = reciprocity_coefficients(12, 3, 7, 5, 30)
    assert sorted(coefficients) == [1, 2, 3, 4, 5]
    with mpmath.workdps(30):
        # j = 1: Gamma(7) / Gamma(5) (2 pi i q / (p r))^{-1}
        expected = 30 / (2j * mpmath.pi * 7 / 15)
        assert abs(coefficients[1] - expected) < mpmath.mpf('1e-20')


def test_moment_is_a_single_twist(delta):
    value = modular_symbol_moment(delta, 3, 5, 7, 0, 30)
    assert value.digits == 30
    assert abs(value) > 0


@pytest.mark.parametrize('p, q, r', [(3, 7, 5), (5, 3, 7)])
def test_theorem(delta, p, q, r):
    report = theorem1_sides(delta, p, q, r, 30)
    assert report.residual < CONTRACT
    assert report.passed
    assert report.residual <= max(mpmath.mpf(report.error_budget), CONTRACT)
    assert [t.j for t in report.terms] == [1, 2, 3, 4, 5]


@pytest.mark.parametrize('k, p, q', [(12, 3, 5), (18, 3, 5), (26, 7, 11)])
def test_corollary(k, p, q):
    report = corollary_sides(get_form(k), p, q, 30)
    assert report.inputs.mode == 'corollary'
    assert report.residual < CONTRACT


@pytest.mark.parametrize('k, p, r, q, s', [(12, 3, 7, 5, 0), (12, 3, 5, 7, 0), (16, 5, 11, 7, 1)])
def test_character_moment(k, p, r, q, s):
    report = lemma_report(get_form(k), p, r, q, s, 30)
    assert report.inputs.mode == 'lemma'
    assert report.residual < CONTRACT
    assert set(report.wall_ms) == {'characters', 'additive', 'total'}


def test_character_moment_refuses_large_moduli(delta):
    with pytest.raises(CostError) as info:
        moment_via_characters(delta, 3, 5, 103)
    assert info.value.cost_estimate == 102 ** 2


def test_character_moment_needs_coprime_modulus(delta):
    with pytest.raises(NotCoprimeError):
        moment_via_characters(delta, 3, 5, 5)


def test_mutations_break_the_identity(delta):
    residuals = mutated_theorem1_residuals(delta, 3, 7, 5, 30)
    for label in ('M(p,r;q)', 'M(-q,r;p)', 'M(-p,q;r)'):
        assert residuals[f'sign:{label}'] > mpmath.mpf('1e-3')
    assert residuals['twist:M(p,r;q)'] > mpmath.mpf('1e-3')


def test_involutive_twist_flip_is_invisible(delta):
    # 1/5 and -1/5 are dual phases: the flip only conjugates a real central value
    residuals = mutated_theorem1_residuals(delta, 3, 7, 5, 30)
    assert residuals['twist:M(-p,q;r)'] < CONTRACT


def test_pole_cancellation(delta):
    assert pole_cancellation_residual(delta, 3, 7, 5, 30) < CONTRACT


@pytest.mark.slow
def test_decay_constants_stay_bounded(delta):
    constants = dict(decay_constants(delta, 3, 5, [31, 61, 101, 151], 30))
    assert sorted(constants) == [31, 61, 101, 151]
    assert max(constants.values()) < 1e3
    assert constants[151] <= 10 * constants[31]


@pytest.mark.slow
def test_theorem_high_precision(delta):
    assert theorem1_sides(delta, 3, 7, 5, 60).residual < mpmath.mpf('1e-50')


@pytest.mark.slow
@pytest.mark.parametrize('k', SUPPORTED_WEIGHTS)
@pytest.mark.parametrize('p, q, r', list(permutations(PRIMES, 3)))
def test_theorem_grid(k, p, q, r):
    assert theorem1_sides(get_form(k), p, q, r, 30).residual < CONTRACT


@pytest.mark.slow
@pytest.mark.parametrize('k', SUPPORTED_WEIGHTS)
@pytest.mark.parametrize('p, q', list(permutations(PRIMES, 2)))
def test_corollary_grid(k, p, q):
    assert corollary_sides(get_form(k), p, q, 30).residual < CONTRACT
