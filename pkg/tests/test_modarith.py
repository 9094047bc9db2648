from fractions import Fraction
from math import gcd

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from twistrecip.modarith import (
    DirichletCharacter,
    ReducedPhase,
    additive_reciprocity_check,
    character_sum_residual,
    characters,
    discrete_log,
    gauss_orthogonality_residual,
    gauss_sum,
    is_odd_prime,
    mod_inverse,
    primitive_characters,
    primitive_root,
    reduce_phase,
)
from twistrecip.utils.exceptions import DomainError, NotCoprimeError, ValidationError


def test_reduce_phase_canonical():
    phase = reduce_phase(-14, 3)
    assert (phase.a, phase.b) == (1, 3)
    assert str(reduce_phase(9, -5)) == '1/5'
    assert reduce_phase(0, 1).fraction == Fraction(0)


def test_reduce_phase_rejects_common_factor():
    with pytest.raises(NotCoprimeError):
        reduce_phase(6, 9)
    with pytest.raises(ValidationError):
        reduce_phase(1, 0)


def test_reduced_phase_validates():
    with pytest.raises(ValidationError):
        ReducedPhase(a=5, b=5)


def test_mod_inverse():
    assert mod_inverse(3, 5) == 2
    assert mod_inverse(-5, 3) == 1
    assert mod_inverse(4, 1) == 0
    with pytest.raises(NotCoprimeError):
        mod_inverse(6, 9)


def test_dual_phase():
    # 3-bar = 5 mod 7, so the dual of 3/7 is -5/7 = 2/7
    assert reduce_phase(3, 7).dual == reduce_phase(2, 7)
    assert reduce_phase(0, 1).dual == reduce_phase(0, 1)


@given(
    n=st.integers(min_value=-10 ** 6, max_value=10 ** 6),
    a=st.integers(min_value=-10 ** 6, max_value=10 ** 6),
    b=st.integers(min_value=-10 ** 6, max_value=10 ** 6),
)
def test_additive_reciprocity(n, a, b):
    assume(a != 0 and b != 0 and gcd(a, b) == 1)
    assert additive_reciprocity_check(n, a, b) == 0


def test_additive_reciprocity_errors():
    with pytest.raises(DomainError):
        additive_reciprocity_check(1, 0, 3)
    with pytest.raises(NotCoprimeError):
        additive_reciprocity_check(1, 4, 6)


def test_primitive_roots():
    assert primitive_root(7) == 3
    assert primitive_root(13) == 2
    assert discrete_log(3, 7) == 1
    assert pow(primitive_root(11), discrete_log(5, 11), 11) == 5


def test_is_odd_prime():
    assert is_odd_prime(13)
    assert not is_odd_prime(2)
    assert not is_odd_prime(9)


def test_character_enumeration():
    assert len(characters(7)) == 6
    assert len(primitive_characters(7)) == 5
    assert characters(7)[0].value(3) == 1
    with pytest.raises(ValidationError):
        DirichletCharacter(modulus=7, index=6)


def test_character_multiplicative():
    chi = DirichletCharacter(modulus=11, index=3)
    psi = DirichletCharacter(modulus=11, index=4)
    with mpmath.workdps(30):
        assert mpmath.almosteq((chi * psi).value(7), chi.value(7) * psi.value(7), 1e-25)
        assert mpmath.almosteq(chi.value(6), chi.value(2) * chi.value(3), 1e-25)
        assert mpmath.almosteq(chi.conjugate().value(5), mpmath.conj(chi.value(5)), 1e-25)
    assert chi.value(22) == 0


def test_quadratic_character_parity():
    assert DirichletCharacter(modulus=7, index=3).parity == -1
    assert DirichletCharacter(modulus=5, index=2).parity == 1


def test_quadratic_gauss_sum_mod_5():
    tau = gauss_sum(DirichletCharacter(modulus=5, index=2), 30)
    with mpmath.workdps(40):
        assert abs(tau.value - mpmath.sqrt(5)) < mpmath.mpf('1e-28')


@pytest.mark.parametrize('q', [3, 5, 7, 11, 13])
def test_gauss_sum_modulus(q):
    for chi in primitive_characters(q):
        tau = gauss_sum(chi, 30)
        with mpmath.workdps(40):
            assert abs(abs(tau) - mpmath.sqrt(q)) < mpmath.mpf('1e-28')


def test_principal_gauss_sum_rejected():
    with pytest.raises(ValidationError):
        gauss_sum(characters(5)[0], 30)


@pytest.mark.parametrize('q', [3, 5, 7, 11, 13])
def test_gauss_orthogonality(q):
    for m in range(1, q):
        assert gauss_orthogonality_residual(q, m, 30) < mpmath.mpf('1e-25')
        assert character_sum_residual(q, m, 30) < mpmath.mpf('1e-25')


def test_gauss_orthogonality_needs_coprime_m():
    with pytest.raises(NotCoprimeError):
        gauss_orthogonality_residual(5, 10, 30)
