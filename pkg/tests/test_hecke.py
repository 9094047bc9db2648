import json

import mpmath
import pytest
from hypothesis import given, strategies as st

from twistrecip.hecke import (
    HeckeEigenform,
    build_form,
    check_deligne,
    check_multiplicativity,
    check_prime_power_recursion,
    cusp_form_series,
    delta_series,
    eigenvalue,
    eisenstein_series,
    evaluate_q_series,
    get_form,
    load_coefficients,
    multiply,
)
from twistrecip.utils.exceptions import DomainError, UnsupportedWeightError
from twistrecip.utils.validators import SUPPORTED_WEIGHTS

TAU = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920]


def test_tau_row():
    assert list(build_form(12, 10).coeffs) == TAU


def test_delta_series_starts_at_q():
    series = delta_series(5)
    assert series == [0, 1, -24, 252, -1472]


def test_multiply_handles_signs():
    assert multiply([1, -2, 3], [-4, 5, -6], 3) == [-4, 13, -28]


def test_eisenstein_coefficients():
    assert eisenstein_series(4, 4) == [1, 240, 2160, 6720]
    assert eisenstein_series(6, 3) == [1, -504, -16632]
    with pytest.raises(UnsupportedWeightError):
        eisenstein_series(8, 3)


@pytest.mark.parametrize('weight', SUPPORTED_WEIGHTS)
def test_normalized_leading_coefficient(weight):
    series = cusp_form_series(weight, 3)
    assert series[:2] == [0, 1]


def test_weight16_second_coefficient():
    # Delta E4 has a(2) = 240 - 24
    assert cusp_form_series(16, 3)[2] == 216


def test_unsupported_weight():
    with pytest.raises(UnsupportedWeightError):
        HeckeEigenform(14)


def test_build_form_needs_coefficients():
    with pytest.raises(DomainError):
        build_form(12, 0)


@pytest.mark.parametrize('weight', [12, 18])
def test_hecke_relations_small(weight):
    form = get_form(weight)
    assert check_multiplicativity(form, 2000) == []
    assert check_prime_power_recursion(form, 2000) == []
    assert check_deligne(form, 2000) == []


@pytest.mark.slow
@pytest.mark.parametrize('weight', SUPPORTED_WEIGHTS)
def test_hecke_relations_full(weight):
    form = get_form(weight)
    assert check_multiplicativity(form, 10 ** 4) == []
    assert check_prime_power_recursion(form, 10 ** 4) == []
    assert check_deligne(form, 10 ** 4) == []


def test_corrupted_coefficient_is_caught():
    coeffs = list(build_form(12, 30).coeffs)
    coeffs[5] += 1
    form = HeckeEigenform(12, coeffs)
    assert (2, 3) in check_multiplicativity(form, 30)


def test_eigenvalue_normalization(delta):
    value = eigenvalue(delta, 2, 30)
    assert mpmath.almosteq(value.real, mpmath.mpf(-24) / mpmath.power(2, mpmath.mpf(11) / 2), 1e-25)


def test_eigenvalue_index():
    with pytest.raises(DomainError):
        eigenvalue(get_form(12), 0)


def test_ensure_grows_snapshot():
    form = HeckeEigenform(12)
    first = form.ensure(5)
    assert len(first) >= 5
    second = form.ensure(40)
    assert second[:5] == first[:5]
    assert form.coefficient(10) == -115920


def test_coefficient_cache_file(cache_dir):
    form = HeckeEigenform(12)
    form.ensure(20)
    files = list(cache_dir.glob('coefficients-k12-n*.json'))
    assert files
    data = json.loads(files[0].read_text())
    assert data['weight'] == 12
    assert data['coefficients'][:10] == TAU
    assert load_coefficients(12, 10)[:10] == TAU


def test_q_series_modularity(delta):
    # Delta(i) = Delta(-1/i) and Delta(-1/z) = z^12 Delta(z) at z = i
    with mpmath.workdps(40):
        z = mpmath.mpc(0, '1.1')
        lhs = evaluate_q_series(delta, -1 / z, 30)
        rhs = mpmath.power(z, 12) * evaluate_q_series(delta, z, 30)
        assert abs(lhs - rhs) < mpmath.mpf('1e-25') * abs(rhs)


@given(
    a=st.lists(st.integers(min_value=-10 ** 30, max_value=10 ** 30), min_size=1, max_size=12),
    b=st.lists(st.integers(min_value=-10 ** 30, max_value=10 ** 30), min_size=1, max_size=12),
    length=st.integers(min_value=1, max_value=15),
)
def test_multiply_matches_schoolbook_convolution(a, b, length):
    expected = [0] * length
    for i, x in enumerate(a[:length]):
        for j, y in enumerate(b[:length - i]):
            expected[i + j] += x * y
    assert multiply(a, b, length) == expected
