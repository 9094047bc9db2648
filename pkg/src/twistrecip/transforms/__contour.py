from typing import Any, Literal
import logging

import mpmath
from mpmath.calculus.quadrature import GaussLegendre
from pydantic import BaseModel, ConfigDict

from twistrecip.config import SETTINGS
from twistrecip.special import ApComplex
from twistrecip.utils.exceptions import QuadratureError, ValidationError

logger = logging.getLogger(__name__)

# node tables are cached per (degree, precision) on the rule instance
_RULE = GaussLegendre(mpmath.mp)

IntegrandTag = Literal['gamma_kernel', 'mellin_exp', 'I_integrand', 'J_integrand', 'Q0_integrand', 'zero']


class Integrand:
    """
    A meromorphic integrand w -> f(w) on vertical lines together with its
    growth |f(c+it)| ~ |t|^beta e^{-rate |t|} as t -> -inf and t -> +inf.
    """
    tag = None

    def __call__(self, w):
        raise NotImplementedError

    def decay(self, c):
        """(beta_minus, rate_minus, beta_plus, rate_plus) on the line Re w = c."""
        raise NotImplementedError

    def magnitude(self, c):
        """Rough size of the integrand's non-decaying factor on Re w = c."""
        return mpmath.mpf(1)

    def poles_between(self, lo, hi):
        """(location, residue) for the poles with lo < Re w < hi."""
        return []

    def log_derivatives(self, w):
        """
        (f'/f, (f'/f)', (f'/f)'') at w, or None. Integrands that supply them get an
        integration-by-parts correction for oscillating polynomial tails.
        """
        return None


class ZeroIntegrand(Integrand):
    tag = 'zero'

    def __call__(self, w):
        return mpmath.mpc(0)

    def decay(self, c):
        return mpmath.ninf, mpmath.inf, mpmath.ninf, mpmath.inf


def _gamma_poles(lo, hi):
    """Nonpositive integers -m with lo < -m < hi."""
    m = max(0, int(mpmath.floor(-hi)))
    while -m > lo:
        if -m < hi:
            yield m
        m += 1


class GammaKernel(Integrand):
    """Gamma(w) x^{-w}; its inverse Mellin transform is e^{-x}."""
    tag = 'gamma_kernel'

    def __init__(self, x):
        self.x = mpmath.mpf(x)

    def __call__(self, w):
        return mpmath.gamma(w) * mpmath.power(self.x, -w)

    def decay(self, c):
        beta = c - mpmath.mpf(1) / 2
        return beta, mpmath.pi / 2, beta, mpmath.pi / 2

    def magnitude(self, c):
        return mpmath.power(self.x, -c)

    def poles_between(self, lo, hi):
        return [(-m, (-1) ** m / mpmath.factorial(m) * mpmath.power(self.x, m)) for m in _gamma_poles(lo, hi)]


class MellinExp(Integrand):
    """Gamma(w) e^{i pi w / 2} (2 pi x)^{-w}."""
    tag = 'mellin_exp'

    def __init__(self, x):
        self.x = mpmath.mpf(x)

    def __call__(self, w):
        return mpmath.gamma(w) * mpmath.expjpi(w / 2) * mpmath.power(2 * mpmath.pi * self.x, -w)

    def decay(self, c):
        beta = c - mpmath.mpf(1) / 2
        return beta, mpmath.mpf(0), beta, mpmath.pi

    def magnitude(self, c):
        return mpmath.power(2 * mpmath.pi * self.x, -c)

    def poles_between(self, lo, hi):
        z = 2j * mpmath.pi * self.x
        return [(-m, z ** m / mpmath.factorial(m)) for m in _gamma_poles(lo, hi)]

    def log_derivatives(self, w):
        first = mpmath.digamma(w) + 1j * mpmath.pi / 2 - mpmath.log(2 * mpmath.pi * self.x)
        return first, mpmath.psi(1, w), mpmath.psi(2, w)


class IIntegrand(Integrand):
    """Gamma(w) e^{i pi w / 2} x^w Gamma(k/2 - s - w) / Gamma(k/2 + s + w)."""
    tag = 'I_integrand'

    def __init__(self, x, s, k):
        self.x = mpmath.mpf(x)
        self.s = mpmath.mpc(s)
        self.k = int(k)
        self.left = mpmath.mpf(self.k) / 2 - self.s
        self.right = mpmath.mpf(self.k) / 2 + self.s

    def _ratio(self, w):
        return mpmath.gamma(w) * mpmath.gamma(self.left - w) * mpmath.rgamma(self.right + w)

    def __call__(self, w):
        return self._ratio(w) * mpmath.expjpi(w / 2) * mpmath.power(self.x, w)

    def decay(self, c):
        beta = -c - mpmath.mpf(1) / 2 - 2 * self.s.real
        return beta, mpmath.mpf(0), beta, mpmath.pi

    def magnitude(self, c):
        return mpmath.power(self.x, c)

    def poles_between(self, lo, hi):
        poles = []
        for m in _gamma_poles(lo, hi):
            # Res Gamma(w) = (-1)^m / m!
            residue = (-1) ** m / mpmath.factorial(m) * mpmath.expjpi(-mpmath.mpf(m) / 2) \
                * mpmath.power(self.x, -m) * mpmath.gamma(self.left + m) * mpmath.rgamma(self.right - m)
            poles.append((-m, residue))
        # Gamma(k/2 - s - w) has poles at w = k/2 - s + m with residue -(-1)^m / m!
        m = 0
        while True:
            location = self.left + m
            if location.real >= hi:
                break
            if location.real > lo:
                residue = -(-1) ** m / mpmath.factorial(m) * mpmath.gamma(location) \
                    * mpmath.expjpi(location / 2) * mpmath.power(self.x, location) \
                    * mpmath.rgamma(self.right + location)
                poles.append((location, residue))
            m += 1
        return poles

    def log_derivatives(self, w):
        u, v = self.left - w, self.right + w
        first = mpmath.digamma(w) - mpmath.digamma(u) - mpmath.digamma(v) + 1j * mpmath.pi / 2 + mpmath.log(self.x)
        second = mpmath.psi(1, w) + mpmath.psi(1, u) - mpmath.psi(1, v)
        third = mpmath.psi(2, w) - mpmath.psi(2, u) - mpmath.psi(2, v)
        return first, second, third


class JIntegrand(IIntegrand):
    """
    The s = 0 case; Gamma(w) / Gamma(k/2 + w) = 1 / (w)_{k/2} is evaluated as a
    rational function, leaving one Gamma call per node.
    """
    tag = 'J_integrand'

    def __init__(self, x, k):
        super().__init__(x, 0, k)

    def _ratio(self, w):
        return mpmath.gamma(self.left - w) / mpmath.rf(w, self.k // 2)


class Q0Integrand(JIntegrand):
    """The J integrand at x = 2 pi n q / (p r), the argument at which Q(x, 0) enters the moments."""
    tag = 'Q0_integrand'

    def __init__(self, n, p, q, r, k):
        self.n, self.p, self.q, self.r = int(n), int(p), int(q), int(r)
        super().__init__(2 * mpmath.pi * self.n * self.q / (mpmath.mpf(self.p) * self.r), k)


INTEGRANDS = {
    'gamma_kernel': GammaKernel,
    'mellin_exp': MellinExp,
    'I_integrand': IIntegrand,
    'J_integrand': JIntegrand,
    'Q0_integrand': Q0Integrand,
    'zero': ZeroIntegrand,
}


def make_integrand(tag: str, **params) -> Integrand:
    try:
        factory = INTEGRANDS[tag]
    except KeyError:
        raise ValidationError(f'unknown integrand {tag!r}; choose one of {", ".join(INTEGRANDS)}.')
    return factory(**params)


class ContourSpec(BaseModel):
    """The line Re w = abscissa, cut at |Im w| <= truncation (chosen adaptively when None)."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    abscissa: Any
    integrand: IntegrandTag
    truncation: float | None = None
    degree: int = SETTINGS.QUADRATURE.START_DEGREE


def quadrature_digits(tol, magnitude=1) -> int:
    scale = max(mpmath.mpf(1), mpmath.mpf(magnitude))
    return max(
        SETTINGS.QUADRATURE.DIGITS,
        int(mpmath.ceil(-mpmath.log10(tol) + mpmath.log10(scale))) + 10,
    )


def _side_tail(integrand, c, height, beta, rate, sign):
    """
    (correction, bound) for (1/2 pi) int f(c+it) dt over sign * t > height. On
    oscillating polynomial tails two integrations by parts give the correction
    -sign f (1/g + g'/g^3) with g = d/dt log f, and the bound covers the rest.
    """
    w = mpmath.mpc(c, sign * height)
    value = integrand(w)
    size = abs(value)
    if size == 0:
        return mpmath.mpc(0), mpmath.mpf(0)
    if rate > 0:
        slack = rate - max(beta, 0) / height
        if slack <= 0:
            return mpmath.mpc(0), mpmath.inf
        return mpmath.mpc(0), 2 * size / slack / (2 * mpmath.pi)
    reach = height / abs(beta + 1)
    derivatives = integrand.log_derivatives(w)
    if derivatives is not None:
        first, second, third = derivatives
        g, dg, ddg = 1j * first, -second, -1j * third
        # the whole tail must lie past the stationary point: rate >= 2 and still growing
        ahead = integrand.log_derivatives(mpmath.mpc(c, 2 * sign * height))[0].real
        if abs(first.real) >= 2 and first.real * ahead > 0 and abs(ahead) > abs(first.real):
            correction = -sign * value * (1 / g + dg / g ** 3)
            rest = abs(ddg) / abs(g) ** 3 + 3 * abs(dg) ** 2 / abs(g) ** 4
            return correction / (2 * mpmath.pi), 2 * size * rest * reach / (2 * mpmath.pi)
    return mpmath.mpc(0), 2 * size * reach / (2 * mpmath.pi)


def _side_height(integrand, c, beta, rate, sign, budget):
    height = 4
    while True:
        correction, tail = _side_tail(integrand, c, height, beta, rate, sign)
        if tail <= budget:
            return height, correction, tail
        if height >= SETTINGS.QUADRATURE.MAX_HEIGHT:
            raise QuadratureError(
                f'tail beyond height {height} is still {mpmath.nstr(tail, 5)} '
                f'(budget {mpmath.nstr(budget, 5)}) on Re w = {mpmath.nstr(c, 8)}.',
                tail_estimate=tail,
            )
        height = min(2 * height, int(SETTINGS.QUADRATURE.MAX_HEIGHT))


def _panel_sum(integrand, c, lower, upper, degree, prec):
    nodes = _RULE.get_nodes(-1, 1, degree, prec)
    terms = []
    for start in range(-lower, upper):
        for x, weight in nodes:
            t = start + (x + 1) / 2
            terms.append(weight / 2 * integrand(mpmath.mpc(c, t)))
    return mpmath.fsum(terms)


def integrate_line(integrand: Integrand, spec: ContourSpec, tol):
    """
    (1/2 pi i) int_{(c)} f(w) dw over |Im w| within the chosen heights, in the
    ambient mpmath context. Returns (value, error estimate, heights).
    """
    c = mpmath.mpf(spec.abscissa)
    tol = mpmath.mpf(tol)
    beta_minus, rate_minus, beta_plus, rate_plus = integrand.decay(c)
    for beta, rate in ((beta_minus, rate_minus), (beta_plus, rate_plus)):
        if rate == 0 and beta >= -1:
            raise QuadratureError(
                f'the integrand decays like |t|^{mpmath.nstr(beta, 6)} on Re w = {mpmath.nstr(c, 8)}; '
                f'the line integral does not converge absolutely.',
                decay_exponent=beta,
            )

    if spec.truncation is not None:
        height = int(mpmath.ceil(spec.truncation))
        correction_minus, tail_minus = _side_tail(integrand, c, height, beta_minus, rate_minus, -1)
        correction_plus, tail_plus = _side_tail(integrand, c, height, beta_plus, rate_plus, 1)
        tail = tail_minus + tail_plus
        if tail > tol / 2:
            raise QuadratureError(
                f'tolerance {mpmath.nstr(tol, 3)} is out of reach at height {height}: '
                f'tail estimate {mpmath.nstr(tail, 5)}.',
                tail_estimate=tail,
            )
        lower = upper = height
    else:
        lower, correction_minus, tail_minus = _side_height(integrand, c, beta_minus, rate_minus, -1, tol / 4)
        upper, correction_plus, tail_plus = _side_height(integrand, c, beta_plus, rate_plus, 1, tol / 4)
        tail = tail_minus + tail_plus
    logger.debug('%s on Re w = %s: heights -%d..%d, tail %s', integrand.tag,
                 mpmath.nstr(c, 8), lower, upper, mpmath.nstr(tail, 5))

    prec = mpmath.mp.prec
    degree = spec.degree
    previous = _panel_sum(integrand, c, lower, upper, degree, prec)
    while True:
        degree += 1
        current = _panel_sum(integrand, c, lower, upper, degree, prec)
        difference = abs(current - previous) / (2 * mpmath.pi)
        if difference <= tol / 10:
            break
        if degree >= SETTINGS.QUADRATURE.MAX_DEGREE:
            raise QuadratureError(
                f'Gauss-Legendre refinements still differ by {mpmath.nstr(difference, 5)} '
                f'at degree {degree}.',
                tail_estimate=tail,
            )
        previous = current
    value = current / (2 * mpmath.pi) + correction_minus + correction_plus
    return value, tail + difference, (lower, upper)


def vertical_line_integral(spec: ContourSpec, params: dict | None = None, tol=1e-10) -> ApComplex:
    """
    (1/2 pi i) int_{(c)} of the tagged integrand, by Gauss-Legendre on unit panels
    with node counts doubled until two refinements agree to tol/10.
    """
    params = params or {}
    with mpmath.workdps(SETTINGS.QUADRATURE.DIGITS):
        integrand = make_integrand(spec.integrand, **params)
        digits = quadrature_digits(tol, integrand.magnitude(mpmath.mpf(spec.abscissa)))
    with mpmath.workdps(digits + SETTINGS.GUARD_DIGITS):
        integrand = make_integrand(spec.integrand, **params)
        value, _, _ = integrate_line(integrand, spec, tol)
        return ApComplex(value, digits)


def path_independence_residual(tag: str, params: dict, right, left, tol=1e-10):
    """
    |int_{(right)} - int_{(left)} - sum of residues strictly between the lines|.
    """
    with mpmath.workdps(SETTINGS.QUADRATURE.DIGITS):
        probe = make_integrand(tag, **params)
        scale = max(probe.magnitude(mpmath.mpf(right)), probe.magnitude(mpmath.mpf(left)))
        digits = quadrature_digits(tol, scale)
    with mpmath.workdps(digits + SETTINGS.GUARD_DIGITS):
        integrand = make_integrand(tag, **params)
        right, left = mpmath.mpf(right), mpmath.mpf(left)
        if left >= right:
            raise ValidationError('the left abscissa must lie strictly left of the right one.')
        a, _, _ = integrate_line(integrand, ContourSpec(abscissa=right, integrand=tag), tol)
        b, _, _ = integrate_line(integrand, ContourSpec(abscissa=left, integrand=tag), tol)
        residues = mpmath.fsum(r for _, r in integrand.poles_between(left, right))
        return abs(a - b - residues)
