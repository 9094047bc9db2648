import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from twistrecip.config import SETTINGS
from twistrecip.hecke import get_form
from twistrecip.lfunctions import LQuery, evaluate
from twistrecip.modarith import reduce_phase
from twistrecip.transforms import (
    ContourSpec,
    I_leading_term,
    I_numeric,
    J_closed_form,
    J_numeric,
    Q_closed_form,
    Q_decay_constant,
    Q_via_Q0identity,
    integrate_line,
    make_integrand,
    mellin_exp_residual,
    path_independence_residual,
    residue_circle,
    residue_value,
    taylor_remainder,
    vertical_line_integral,
)
from twistrecip.utils.exceptions import DomainError, NotCoprimeError, QuadratureError, ValidationError

TOL = mpmath.mpf('1e-8')


@pytest.mark.parametrize('x', [1, 5])
def test_gamma_kernel_inverts_to_exponential(x):
    value = vertical_line_integral(ContourSpec(abscissa=2, integrand='gamma_kernel'), {'x': x}, 1e-10)
    with mpmath.workdps(30):
        assert abs(value.value - mpmath.exp(-x)) < mpmath.mpf('1e-10')


def test_zero_integrand():
    assert abs(vertical_line_integral(ContourSpec(abscissa=0, integrand='zero'))) == 0


def test_unknown_integrand():
    with pytest.raises(ValidationError):
        make_integrand('bessel', x=1)


def test_nonconvergent_abscissa_is_rejected():
    with pytest.raises(QuadratureError) as info:
        vertical_line_integral(ContourSpec(abscissa=mpmath.mpf('0.5'), integrand='mellin_exp'), {'x': 1})
    assert info.value.decay_exponent is not None


def test_tolerance_out_of_reach_at_fixed_height():
    with pytest.raises(QuadratureError) as info:
        J_numeric(1, 12, tol=mpmath.mpf('1e-30'), height=5)
    assert info.value.tail_estimate > 0


def test_gamma_kernel_path_independence():
    assert path_independence_residual('gamma_kernel', {'x': 2}, 2, mpmath.mpf('-1.5'), 1e-10) < mpmath.mpf('1e-9')


def test_mellin_path_independence():
    residual = path_independence_residual(
        'mellin_exp', {'x': mpmath.mpf('0.3')}, mpmath.mpf('-2.5'), mpmath.mpf('-4.5'), 1e-6)
    assert residual < mpmath.mpf('1e-5')


@pytest.mark.parametrize('x, n', [
    (mpmath.mpf('0.05'), 2), (mpmath.mpf('0.5'), 2), (mpmath.mpf('0.3'), 4), (mpmath.mpf('1.7'), 6),
    (3, 3), (5, 2), (5, 8),
])
def test_mellin_representation(x, n):
    assert mellin_exp_residual(x, n, TOL) < TOL


@pytest.mark.slow
@settings(max_examples=20)
@given(
    x=st.floats(min_value=0.01, max_value=5),
    n=st.integers(min_value=2, max_value=8),
)
def test_mellin_representation_property(x, n):
    assert mellin_exp_residual(mpmath.mpf(x), n, TOL) < TOL


def test_oscillating_tail_is_corrected():
    integrand = make_integrand('mellin_exp', x=5)
    spec = ContourSpec(abscissa=mpmath.mpf('-2.5'), integrand='mellin_exp')
    with mpmath.workdps(40):
        value, error, (lower, _) = integrate_line(integrand, spec, TOL)
        assert error < TOL
        assert lower < SETTINGS.QUADRATURE.MAX_HEIGHT
        assert abs(value - taylor_remainder(5, 2, 20).value) < TOL


def test_mellin_depth_must_be_positive():
    with pytest.raises(DomainError):
        mellin_exp_residual(1, 0)


def test_taylor_remainder_small_argument():
    x = mpmath.mpf('1e-3')
    remainder = taylor_remainder(x, 3, 30)
    with mpmath.workdps(40):
        assert abs(remainder) <= 10 * (2 * mpmath.pi * x) ** 4 / 24


def test_residue_at_zero_is_the_value(delta):
    phase = reduce_phase(1, 3)
    value = residue_value(0, 3, '0.2', delta, phase, 30)
    direct = evaluate(LQuery(form=delta, phase=phase, s='0.2', digits=30))
    assert abs(value - direct) < mpmath.mpf('1e-25')


def test_residue_at_minus_one(delta):
    phase = reduce_phase(2, 5)
    x = 2 * mpmath.pi * 7 / 15
    value = residue_value(1, x, 0, delta, phase, 30)
    shifted = evaluate(LQuery(form=delta, phase=phase, s=-1, digits=30))
    with mpmath.workdps(40):
        assert abs(value.value - 1j / x * shifted.value) < mpmath.mpf('1e-25')


@pytest.mark.parametrize('n', [0, 1, 2])
def test_residue_circle_agreement(delta, n):
    phase = reduce_phase(1, 3)
    closed = residue_value(n, 3, '0.2', delta, phase, 20)
    circle = residue_circle(n, 3, '0.2', delta, phase, 20)
    assert abs(closed - circle) < mpmath.mpf('1e-10')


def test_residue_rejects_negative_order(delta):
    with pytest.raises(DomainError):
        residue_value(-1, 1, 0, delta, reduce_phase(1, 3))


def test_J_approaches_its_leading_term():
    x = 1000
    with mpmath.workdps(30):
        leading = 1 + mpmath.expj(-x)
    assert abs(J_closed_form(x, 12, 30) - leading) < mpmath.mpf('0.1')


@pytest.mark.parametrize('x, k', [(1, 12), (10, 16), (mpmath.mpf('0.5'), 12), (mpmath.mpf('3.7'), 20)])
def test_J_two_paths(x, k):
    assert abs(J_closed_form(x, k, 30) - J_numeric(x, k, TOL)) < TOL


@pytest.mark.slow
@pytest.mark.parametrize('k', [12, 16, 22])
@pytest.mark.parametrize('x', [mpmath.mpf('0.5'), 1, 2, mpmath.mpf('3.7'), 10, 25])
def test_J_grid(x, k):
    assert abs(J_closed_form(x, k, 30) - J_numeric(x, k, TOL)) < TOL


def test_I_needs_convergent_strip():
    with pytest.raises(DomainError):
        I_numeric(1, mpmath.mpf('0.5'), 12)
    with pytest.raises(DomainError):
        I_numeric(1, mpmath.mpc('1.25', 2), 12)


def test_I_bounded_for_small_x():
    value = I_numeric(mpmath.mpf('0.5'), mpmath.mpf('1.25'), 12, TOL)
    assert abs(value) < 1e4


@pytest.mark.slow
def test_I_decay_has_no_growth_trend():
    s = mpmath.mpf('1.25')
    ratios = []
    for x in (2, 10, 50):
        difference = abs(I_numeric(x, s, 12, TOL) - I_leading_term(x, s, 12, 30))
        with mpmath.workdps(30):
            ratios.append(difference / (mpmath.power(x, -2 * s - 1) + mpmath.power(x, -mpmath.mpf(15) / 8)))
    assert ratios[-1] <= 10 * max(ratios[:-1])


def test_Q_first_term_ratio():
    with mpmath.workdps(30):
        assert mpmath.gamma(7) / mpmath.gamma(5) == 30


@pytest.mark.parametrize('n, p, q, r, k', [(1, 3, 7, 5, 12), (4, 5, 11, 3, 16)])
def test_Q_two_paths(n, p, q, r, k):
    closed = Q_closed_form(n, p, q, r, k, 30)
    assert abs(closed - Q_via_Q0identity(n, p, q, r, k, TOL)) < TOL


@pytest.mark.parametrize('n, p, q, r, k', [(1, 3, 7, 5, 12), (4, 5, 11, 3, 16), (2, 7, 3, 13, 26)])
def test_Q_identity_is_exact_with_closed_J(n, p, q, r, k):
    closed = Q_closed_form(n, p, q, r, k, 30)
    via_identity = Q_via_Q0identity(n, p, q, r, k, use_closed_form=True, digits=30)
    assert abs(closed - via_identity) < mpmath.mpf('1e-20')


def test_Q_needs_coprime_arguments():
    with pytest.raises(NotCoprimeError):
        Q_closed_form(1, 3, 9, 5, 12)


def test_Q_decay():
    assert Q_decay_constant(3, 7, 5, 12, range(10, 101)) < 100


@pytest.mark.parametrize('x, k', [(1, 12), (mpmath.mpf('3.7'), 16)])
def test_J_does_not_depend_on_the_line(x, k):
    assert abs(J_numeric(x, k, TOL, abscissa=2) - J_numeric(x, k, TOL)) < 2 * TOL
    assert path_independence_residual('J_integrand', {'x': x, 'k': k}, k // 2 - 1, 2, TOL) < 2 * TOL


@pytest.mark.slow
@pytest.mark.parametrize('k', [12, 16, 22])
@pytest.mark.parametrize('x', [mpmath.mpf('0.5'), 2, 10, 25])
def test_J_line_grid(x, k):
    assert abs(J_numeric(x, k, TOL, abscissa=2) - J_closed_form(x, k, 30)) < TOL


def test_J_line_must_sit_in_the_pole_free_strip():
    with pytest.raises(DomainError):
        J_numeric(1, 12, abscissa=mpmath.mpf('0.4'))
    with pytest.raises(DomainError):
        J_numeric(1, 12, abscissa=6)


def test_Q0_integrand_is_J_at_the_moment_argument():
    with mpmath.workdps(30):
        q0 = make_integrand('Q0_integrand', n=2, p=3, q=7, r=5, k=12)
        j = make_integrand('J_integrand', x=2 * mpmath.pi * 2 * 7 / mpmath.mpf(15), k=12)
        w = mpmath.mpc(5, '3.5')
        assert abs(q0(w) - j(w)) < mpmath.mpf('1e-25') * abs(j(w))
