from math import gcd
import logging

import mpmath

from twistrecip.config import SETTINGS
from twistrecip.hecke import HeckeEigenform
from twistrecip.lfunctions import LQuery, as_shift, evaluate, root_number
from twistrecip.modarith import ReducedPhase
from twistrecip.special import ApComplex, working_dps
from twistrecip.utils.exceptions import DomainError, NotCoprimeError
from twistrecip.utils.validators import validate_weight
from .__contour import ContourSpec, integrate_line, make_integrand, quadrature_digits, vertical_line_integral

logger = logging.getLogger(__name__)

DEFAULT_TOL = mpmath.mpf('1e-8')

# I(x, s) is defined on Re w = -15/8 for s in this box
I_STRIP_REAL = (mpmath.mpf(19) / 16, mpmath.mpf(11) / 8)
I_STRIP_IMAG = 1


def _positive(x, name='x'):
    x = mpmath.mpf(x)
    if x <= 0:
        raise DomainError(f'{name} must be positive, got {mpmath.nstr(x, 8)}.')
    return x


def taylor_remainder(x, N: int, digits: int = 30):
    """e(x) - sum_{n<=N} (2 pi i x)^n / n!."""
    with mpmath.workdps(working_dps(digits)):
        x = _positive(x)
        z = 2j * mpmath.pi * x
        partial = mpmath.fsum(z ** n / mpmath.factorial(n) for n in range(N + 1))
        return ApComplex(mpmath.expjpi(2 * x) - partial, digits)


def mellin_exp_residual(x, N: int, tol=DEFAULT_TOL):
    """
    |e(x) - sum_{n<=N} (2 pi i x)^n / n!  -  (1/2 pi i) int_{(-N-1/2)} Gamma(w) e^{i pi w/2} (2 pi x)^{-w} dw|.

    The line -N-1/2 sits left of the Gamma poles 0, -1, ..., -N whose residues
    are the Taylor terms.
    """
    if N < 1:
        raise DomainError(f'the shift depth must be at least 1, got {N}.')
    spec = ContourSpec(abscissa=-mpmath.mpf(N) - mpmath.mpf(1) / 2, integrand='mellin_exp')
    integral = vertical_line_integral(spec, {'x': x}, tol)
    remainder = taylor_remainder(x, N, integral.digits)
    return abs(remainder - integral)


def residue_value(n: int, x, s, form: HeckeEigenform, phase: ReducedPhase, digits: int = 30) -> ApComplex:
    """Res_{w=-n} Gamma(w) e^{i pi w/2} x^w L(1/2+s+w) = i^n / n! x^{-n} L(1/2+s-n)."""
    if n < 0:
        raise DomainError(f'residues sit at nonpositive integers, got n={n}.')
    s = as_shift(s, digits)
    value = evaluate(LQuery(form=form, phase=phase, s=s - n, digits=digits))
    with mpmath.workdps(working_dps(digits)):
        x = _positive(x)
        factor = mpmath.mpc(1j) ** n / mpmath.factorial(n) * mpmath.power(x, -n)
        return value * factor


def residue_circle(n: int, x, s, form: HeckeEigenform, phase: ReducedPhase, digits: int = 20,
                   nodes: int = 64, radius=mpmath.mpf(1) / 4) -> ApComplex:
    """Trapezoidal rule for (1/2 pi i) on |w + n| = radius of the same integrand."""
    s = as_shift(s, digits)
    with mpmath.workdps(working_dps(digits)):
        x = _positive(x)
        radius = mpmath.mpf(radius)
        terms = []
        for j in range(nodes):
            rotation = mpmath.expjpi(mpmath.mpf(2 * j) / nodes)
            w = -n + radius * rotation
            l_value = evaluate(LQuery(form=form, phase=phase, s=s.value + w, digits=digits)).value
            terms.append(mpmath.gamma(w) * mpmath.expjpi(w / 2) * mpmath.power(x, w) * l_value * radius * rotation)
        return ApComplex(mpmath.fsum(terms) / nodes, digits)


def _binomial_weight(k, j):
    half = k // 2
    return mpmath.factorial(half - 1 + j) / (mpmath.factorial(j) * mpmath.factorial(half - 1 - j))


def J_closed_form(x, k: int, digits: int = 30) -> ApComplex:
    """sum_{j<k/2} (ix)^{-j} (k/2-1+j)! / (j! (k/2-1-j)!) ((-1)^j + i^k e^{-ix})."""
    k = validate_weight(k)
    with mpmath.workdps(working_dps(digits)):
        x = _positive(x)
        tail = root_number(k) * mpmath.expj(-x)
        total = mpmath.fsum(
            mpmath.power(1j * x, -j) * _binomial_weight(k, j) * ((-1) ** j + tail)
            for j in range(k // 2)
        )
        return ApComplex(total, digits)


def J_numeric(x, k: int, tol=DEFAULT_TOL, height=None, abscissa=None) -> ApComplex:
    """
    J(x) on Re w = k/2 - 1 by default; no pole of Gamma(k/2 - w) lies in 1/2 < Re w < k/2,
    so the value equals the one on any line in that strip.
    """
    k = validate_weight(k)
    abscissa = k // 2 - 1 if abscissa is None else mpmath.mpf(abscissa)
    if not mpmath.mpf(1) / 2 < abscissa < mpmath.mpf(k) / 2:
        raise DomainError(f'J is defined by lines with 1/2 < Re w < {k // 2}, got {mpmath.nstr(abscissa, 8)}.')
    spec = ContourSpec(abscissa=abscissa, integrand='J_integrand', truncation=height)
    return vertical_line_integral(spec, {'x': x, 'k': k}, tol)


def _check_I_strip(s):
    if not (I_STRIP_REAL[0] < s.real < I_STRIP_REAL[1] and abs(s.imag) < I_STRIP_IMAG):
        raise DomainError(
            f's = {mpmath.nstr(s, 8)} is outside 19/16 < Re s < 11/8, |Im s| < 1, '
            f'where the integral on Re w = -15/8 converges.'
        )


def I_numeric(x, s, k: int, tol=DEFAULT_TOL, height=None) -> ApComplex:
    """
    I(x, s) on Re w = -15/8, computed on Re w = k/2 - Re s - 1/2 minus the
    residues of Gamma(w) at w = 0 and w = -1 crossed on the way.
    """
    k = validate_weight(k)
    s = mpmath.mpc(s)
    _check_I_strip(s)
    params = {'x': x, 's': s, 'k': k}
    abscissa = mpmath.mpf(k) / 2 - s.real - mpmath.mpf(1) / 2
    with mpmath.workdps(SETTINGS.QUADRATURE.DIGITS):
        probe = make_integrand('I_integrand', **params)
        digits = quadrature_digits(tol, probe.magnitude(abscissa))
    with mpmath.workdps(digits + SETTINGS.GUARD_DIGITS):
        integrand = make_integrand('I_integrand', **params)
        spec = ContourSpec(abscissa=abscissa, integrand='I_integrand', truncation=height)
        value, _, _ = integrate_line(integrand, spec, tol)
        residues = integrand.poles_between(-mpmath.mpf(15) / 8, abscissa)
        logger.debug('I(x, s): subtracting residues at %s', [mpmath.nstr(p, 5) for p, _ in residues])
        return ApComplex(value - mpmath.fsum(r for _, r in residues), digits)


def I_leading_term(x, s, k: int, digits: int = 30) -> ApComplex:
    """i^k x^{-2s} e^{-ix}."""
    with mpmath.workdps(working_dps(digits)):
        x = _positive(x)
        return ApComplex(root_number(k) * mpmath.power(x, -2 * mpmath.mpc(s)) * mpmath.expj(-x), digits)


def _pairwise_coprime(*values):
    for i, u in enumerate(values):
        if u < 1:
            raise DomainError(f'{u} must be a positive integer.')
        for v in values[i + 1:]:
            if gcd(u, v) != 1:
                raise NotCoprimeError(f'{u} and {v} are not coprime.')


def Q_argument(n, p, q, r):
    """x = 2 pi n q / (p r), in the ambient precision."""
    return 2 * mpmath.pi * n * q / (mpmath.mpf(p) * r)


def Q_closed_form(n: int, p: int, q: int, r: int, k: int, digits: int = 30) -> ApComplex:
    """
    Q(2 pi n q / (p r), 0) = -i (p r / (2 pi q n)) Gamma(k/2+1) / Gamma(k/2-1)
        + sum_{1 <= j < k/2} (2 pi i q n / (p r))^{-j} (k/2-1+j)! / (j! (k/2-1-j)!) ((-1)^j + i^k e(-q n / (p r))).
    """
    k = validate_weight(k)
    _pairwise_coprime(p, q, r)
    if n < 1:
        raise DomainError(f'n must be positive, got {n}.')
    half = k // 2
    with mpmath.workdps(working_dps(digits)):
        x = Q_argument(n, p, q, r)
        tail = root_number(k) * mpmath.expj(-x)
        first = -1j / x * mpmath.factorial(half) / mpmath.factorial(half - 2)
        total = first + mpmath.fsum(
            mpmath.power(1j * x, -j) * _binomial_weight(k, j) * ((-1) ** j + tail)
            for j in range(1, half)
        )
        return ApComplex(total, digits)


def Q_via_Q0identity(n: int, p: int, q: int, r: int, k: int, tol=DEFAULT_TOL,
                     use_closed_form: bool = False, digits: int = 30) -> ApComplex:
    """
    Q(x, 0) = J(x) + (1 / (i x)) Gamma(k/2+1) / Gamma(k/2-1) - 1 - i^k e^{-ix},  x = 2 pi n q / (p r),
    with J from quadrature of the Q0 integrand, or from its finite sum when ``use_closed_form``.
    """
    k = validate_weight(k)
    _pairwise_coprime(p, q, r)
    if n < 1:
        raise DomainError(f'n must be positive, got {n}.')
    half = k // 2
    with mpmath.workdps(working_dps(digits)):
        x = Q_argument(n, p, q, r)
    if use_closed_form:
        j_value = J_closed_form(x, k, digits)
    else:
        spec = ContourSpec(abscissa=half - 1, integrand='Q0_integrand')
        j_value = vertical_line_integral(spec, {'n': n, 'p': p, 'q': q, 'r': r, 'k': k}, tol)
    with mpmath.workdps(working_dps(digits)):
        rest = mpmath.factorial(half) / mpmath.factorial(half - 2) / (1j * x) - 1 \
            - root_number(k) * mpmath.expj(-x)
        return j_value + ApComplex(rest, digits)


def Q_decay_constant(p: int, q: int, r: int, k: int, ns, digits: int = 30):
    """max over n of |Q(x_n, 0)| x_n."""
    with mpmath.workdps(working_dps(digits)):
        return max(abs(Q_closed_form(n, p, q, r, k, digits).value) * Q_argument(n, p, q, r) for n in ns)
