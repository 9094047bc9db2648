"""
Additively twisted L-values from the split period integral.

With nu = k/2 + s, mu = k/2 - s and h = 2 pi / b,

    S1 = sum lambda(n) e(n a / b)    n^{-1/2-s} Gamma(nu, n h)
    S2 = sum lambda(n) e(-n a-bar / b) n^{-1/2+s} Gamma(mu, n h)

    L(1/2 + s, f x e(a/b)) = (S1 + i^k h^{2s} S2) / Gamma(nu)
    Lambda(s; a/b)          = h^{-s} S1 + i^k h^{s} S2

The second sum comes from f(a/b + iy) = (iby)^{-k} f(-a-bar/b + i/(b^2 y)) on y < 1/b.
"""
from typing import Any, Iterable
import logging

import mpmath
from pydantic import BaseModel, ConfigDict

from twistrecip.config import SETTINGS
from twistrecip.hecke import HeckeEigenform, evaluate_q_series
from twistrecip.modarith import ReducedPhase
from twistrecip.special import ApComplex, upper_gamma_raw, working_dps
from twistrecip.utils.exceptions import DomainError, PrecisionError
from .__query import LQuery, as_shift

logger = logging.getLogger(__name__)

MAX_ESCALATIONS = 3
MAX_TRUNCATION_BUMPS = 10


class LResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    value: ApComplex
    terms: int
    error_bound: Any
    working_digits: int


def _root_table(b: int):
    return [mpmath.expjpi(mpmath.mpf(2 * r) / b) for r in range(b)]


def root_number(k: int) -> int:
    return 1 if k % 4 == 0 else -1


def _fixed_point_length(b, k: int, sigma_abs, digits: int) -> int:
    # N = ceil((b / 2 pi) ((P + 15) ln 10 + c ln N))
    c = mpmath.mpf(k) / 2 + sigma_abs + 1
    target = (digits + SETTINGS.TRUNCATION_DIGITS) * mpmath.log(10)
    n = max(10, int(mpmath.ceil(b)))
    for _ in range(50):
        nxt = int(mpmath.ceil(b / (2 * mpmath.pi) * (target + c * mpmath.log(n))))
        nxt = max(nxt, 2)
        if nxt == n:
            break
        n = nxt
    return n


def tail_bound(b, k: int, sigma_abs, n: int):
    """
    Bound for sum_{m > n} |lambda(m) m^{-1/2 -+ s} Gamma(k/2 +- s, m h)| using
    |lambda(m)| <= d(m) <= 2 sqrt(m) and Gamma(a, x) <= x^{a-1} e^{-x} / (1 - (a-1)/x).
    """
    h = 2 * mpmath.pi / b
    a = mpmath.mpf(k) / 2 + sigma_abs
    if n * h <= a:
        return mpmath.inf
    m = n + 1

    def term(j):
        return 2 * mpmath.power(j, sigma_abs) * mpmath.power(j * h, a - 1) * mpmath.exp(-j * h)

    ratio = mpmath.power(mpmath.mpf(m + 1) / m, sigma_abs + a - 1) * mpmath.exp(-h)
    if ratio >= 1:
        return mpmath.inf
    return term(m) / (1 - (a - 1) / (n * h)) / (1 - ratio)


def truncation_length(b, k: int, sigma_abs, digits: int):
    """Truncation point of both sums and its tail bound; bumps N if the fixed point is short."""
    goal = mpmath.mpf(10) ** (-(digits + 10))
    n = _fixed_point_length(b, k, sigma_abs, digits)
    bound = tail_bound(b, k, sigma_abs, n)
    for _ in range(MAX_TRUNCATION_BUMPS):
        if bound <= goal:
            return n, bound
        n = int(n * 1.25) + 1
        bound = tail_bound(b, k, sigma_abs, n)
    if bound <= goal:
        return n, bound
    raise PrecisionError(
        f'truncation did not settle for b={mpmath.nstr(b, 8)}, k={k}: '
        f'tail bound {mpmath.nstr(bound, 5)} at N={n}.',
        achieved_bound=bound,
    )


def _general_sums(coeffs, phase: ReducedPhase, k: int, s, n_terms: int, split=1):
    # split point y0 = split / b; split = 1 is the fixed point of y -> 1 / (b^2 y)
    b = phase.b
    a = phase.a
    a_bar = phase.inverse
    nu = mpmath.mpf(k) / 2 + s
    mu = mpmath.mpf(k) / 2 - s
    h = 2 * mpmath.pi / b
    roots = _root_table(b)

    first, second = [], []
    for n in range(1, n_terms + 1):
        c = coeffs[n - 1]
        if c == 0:
            continue
        x = n * h
        log_n = mpmath.log(n)
        first.append(c * roots[n * a % b] * mpmath.exp(-nu * log_n) * upper_gamma_raw(nu, x * split))
        second.append(c * roots[-n * a_bar % b] * mpmath.exp(-mu * log_n) * upper_gamma_raw(mu, x / split))
    return first, second


def _magnitude(terms):
    return mpmath.fsum(abs(t) for t in terms)


def _escalating(digits: int, compute):
    """
    Run ``compute(working_digits)`` and raise the working precision while the
    accumulated rounding estimate exceeds 10^{-(digits + 10)}.
    """
    goal = mpmath.mpf(10) ** (-(digits + 10))
    working = working_dps(digits)
    for attempt in range(MAX_ESCALATIONS + 1):
        with mpmath.workdps(working):
            result, magnitude = compute()
            rounding = 10 * magnitude * mpmath.mpf(10) ** (-working)
        if rounding <= goal:
            return result, rounding, working
        extra = int(mpmath.ceil(mpmath.log10(rounding / goal))) + 5
        logger.debug('rounding estimate %s above goal; raising working digits %d -> %d',
                     mpmath.nstr(rounding, 5), working, working + extra)
        working += extra
    raise PrecisionError(
        f'rounding did not settle after {MAX_ESCALATIONS} precision escalations.',
        achieved_bound=rounding,
    )


def _as_split(split):
    split = mpmath.mpf(split)
    if split <= 0:
        raise DomainError(f'the split point must be positive, got {mpmath.nstr(split, 8)}.')
    return split


def _evaluate(query: LQuery, completed: bool, split=1) -> LResult:
    k = query.weight
    phase = query.phase
    digits = query.digits
    sigma_abs = abs(query.s.real)
    with mpmath.workdps(working_dps(digits)):
        split = _as_split(split)
        # both sums converge at least as fast as one split at 1 with modulus b / min(split, 1/split)
        reach = phase.b if split == 1 else phase.b / min(split, 1 / split)
    n_terms, tail = truncation_length(reach, k, sigma_abs, digits)
    coeffs = query.form.ensure(n_terms)
    logger.debug('L(1/2+s, f x e(%s)) weight %d: %d terms, tail bound %s',
                 phase, k, n_terms, mpmath.nstr(tail, 5))

    def compute():
        s = query.s.value
        first, second = _general_sums(coeffs, phase, k, s, n_terms, split)
        h = 2 * mpmath.pi / phase.b
        eps_k = root_number(k)
        if completed:
            left, right = mpmath.power(h, -s), eps_k * mpmath.power(h, s)
        else:
            g = mpmath.gamma(mpmath.mpf(k) / 2 + s)
            left, right = 1 / g, eps_k * mpmath.power(h, 2 * s) / g
        value = left * mpmath.fsum(first) + right * mpmath.fsum(second)
        scale = abs(left) + abs(right)
        magnitude = abs(left) * _magnitude(first) + abs(right) * _magnitude(second)
        return (value, scale), magnitude

    (value, scale), rounding, working = _escalating(digits, compute)
    error = tail * scale + rounding
    return LResult(value=ApComplex(value, digits), terms=n_terms, error_bound=error,
                   working_digits=working)


def evaluate_detailed(query: LQuery, split=1) -> LResult:
    return _evaluate(query, completed=False, split=split)


def evaluate(query: LQuery, split=1) -> ApComplex:
    """L(1/2 + s, f x e(a/b)), from the period integral split at y = split / b."""
    return _evaluate(query, completed=False, split=split).value


def completed(query: LQuery) -> ApComplex:
    """Lambda(s; a/b) = (b / 2 pi)^s Gamma(k/2 + s) L(1/2 + s, f x e(a/b))."""
    return _evaluate(query, completed=True).value


def fe_residual(form: HeckeEigenform, phase: ReducedPhase, s, digits: int):
    """|Lambda(s; -a-bar/b) - i^k Lambda(-s; a/b)|."""
    s = as_shift(s, digits)
    lhs = completed(LQuery(form=form, phase=phase.dual, s=s, digits=digits))
    rhs = completed(LQuery(form=form, phase=phase, s=-s, digits=digits))
    return abs(lhs - root_number(form.weight) * rhs)


def split_residual(form: HeckeEigenform, phase: ReducedPhase, s, digits: int, split='1.3'):
    """
    |L(1/2 + s) split at y = split / b  -  L(1/2 + s) split at y = 1 / b|. The two sums
    trade weight as the split moves, so the difference vanishes only when the second
    sum really is the modular image of the first.
    """
    s = as_shift(s, digits)
    moved = evaluate(LQuery(form=form, phase=phase, s=s, digits=digits), split=split)
    fixed = evaluate(LQuery(form=form, phase=phase, s=s, digits=digits))
    return abs(moved - fixed)


def evaluate_shifts(form: HeckeEigenform, phase: ReducedPhase, shifts: Iterable[int],
                    digits: int, with_error: bool = False):
    """
    L(1/2 + j, f x e(a/b)) for integer shifts j, in one pass over n.

    At integer order Gamma(m, x) = (m-1)! e^{-x} E_m(x) with E_m(x) = sum_{i<m} x^i/i!,
    and lambda(n) n^{-1/2-j} = a(n) / n^{k/2+j}; the (nu-1)! cancels against Gamma(nu).
    Returns a dict keyed by shift, plus the shared error bound when ``with_error``.
    """
    k = form.weight
    half = k // 2
    shifts = sorted(set(int(j) for j in shifts))
    if not shifts:
        return ({}, mpmath.mpf(0)) if with_error else {}
    for j in shifts:
        if abs(j) > half - 1:
            raise DomainError(f'shift {j} is outside |j| <= {half - 1} for weight {k}.')
    sigma_abs = max(abs(j) for j in shifts)
    b = phase.b
    n_terms, tail = truncation_length(b, k, sigma_abs, digits)
    coeffs = form.ensure(n_terms)
    top = half + sigma_abs
    logger.debug('shifts %s of L(f x e(%s)) weight %d: %d terms', shifts, phase, k, n_terms)

    def compute():
        a, a_bar = phase.a, phase.inverse
        h = 2 * mpmath.pi / b
        roots = _root_table(b)
        eps_k = root_number(k)
        first = {j: [] for j in shifts}
        second = {j: [] for j in shifts}
        for n in range(1, n_terms + 1):
            c = coeffs[n - 1]
            if c == 0:
                continue
            x = n * h
            # partial[m] = e^{-x} sum_{i<m} x^i / i!
            partial = [mpmath.mpf(0)] * (top + 1)
            term = mpmath.exp(-x)
            for m in range(1, top + 1):
                partial[m] = partial[m - 1] + term
                term = term * x / m
            twist, dual_twist = c * roots[n * a % b], c * roots[-n * a_bar % b]
            for j in shifts:
                first[j].append(twist * partial[half + j] / mpmath.mpf(n) ** (half + j))
                second[j].append(dual_twist * partial[half - j] / mpmath.mpf(n) ** (half - j))

        values, largest, magnitude = {}, mpmath.mpf(0), mpmath.mpf(0)
        for j in shifts:
            ratio = mpmath.factorial(half - j - 1) / mpmath.factorial(half + j - 1)
            right = eps_k * mpmath.power(h, 2 * j) * ratio
            values[j] = mpmath.fsum(first[j]) + right * mpmath.fsum(second[j])
            largest = max(largest, abs(right))
            magnitude = max(magnitude, _magnitude(first[j]) + abs(right) * _magnitude(second[j]))
        return (values, largest), magnitude

    (values, largest), rounding, working = _escalating(digits, compute)
    with mpmath.workdps(working):
        out = {j: ApComplex(values[j], digits) for j in shifts}
        error = tail * (1 / mpmath.factorial(half - sigma_abs - 1) + largest) + rounding
    logger.debug('shift evaluation error bound %s at %d working digits', mpmath.nstr(error, 5), working)
    return (out, error) if with_error else out


def direct_series(form: HeckeEigenform, phase: ReducedPhase, s, terms: int, digits: int = 30):
    """
    Partial Dirichlet series sum_{n <= terms} lambda(n) e(n a/b) n^{-1/2-s} and the
    Deligne tail bound 2 N^{3/2 - sigma'} / (sigma' - 3/2), sigma' = 1/2 + Re s.
    """
    s = as_shift(s, digits)
    with mpmath.workdps(working_dps(digits)):
        sigma = mpmath.mpf(1) / 2 + s.real
        if sigma <= mpmath.mpf(3) / 2:
            raise DomainError('the direct series oracle needs Re s > 1.')
        coeffs = form.ensure(terms)
        roots = _root_table(phase.b)
        nu = mpmath.mpf(form.weight) / 2 + s.value
        total = mpmath.fsum(
            coeffs[n - 1] * roots[n * phase.a % phase.b] * mpmath.power(n, -nu)
            for n in range(1, terms + 1)
        )
        bound = 2 * mpmath.power(terms, mpmath.mpf(3) / 2 - sigma) / (sigma - mpmath.mpf(3) / 2)
        return ApComplex(total, digits), bound


def conjugation_residual(form: HeckeEigenform, phase: ReducedPhase, s, digits: int):
    """|L(1/2 + conj(s), f x e(-a/b)) - conj(L(1/2 + s, f x e(a/b)))|."""
    s = as_shift(s, digits)
    value = evaluate(LQuery(form=form, phase=phase, s=s, digits=digits))
    mirrored = evaluate(LQuery(form=form, phase=phase.negated, s=s.conjugate(), digits=digits))
    return abs(mirrored - value.conjugate())


def period_identity_residual(form: HeckeEigenform, phase: ReducedPhase, y, digits: int = 30):
    """|f(a/b + iy) - (iby)^{-k} f(-a-bar/b + i/(b^2 y))|."""
    with mpmath.workdps(working_dps(digits)):
        y = mpmath.mpf(y)
        b = phase.b
        lhs = evaluate_q_series(form, mpmath.mpc(mpmath.mpf(phase.a) / b, y), digits)
        image = mpmath.mpc(-mpmath.mpf(phase.inverse) / b, 1 / (b * b * y))
        rhs = mpmath.power(1j * b * y, -form.weight) * evaluate_q_series(form, image, digits)
        return abs(lhs - rhs)
