from itertools import permutations
from math import gcd
import logging
import random

import mpmath

from twistrecip.hecke import get_form
from twistrecip.lfunctions import LQuery, direct_series, evaluate, fe_residual, split_residual
from twistrecip.modarith import (
    additive_reciprocity_check,
    character_sum_residual,
    gauss_orthogonality_residual,
    reduce_phase,
)
from twistrecip.reciprocity import corollary_sides, lemma_report, theorem1_sides
from twistrecip.schemas.reports import CheckResult, VerificationReport
from twistrecip.special import working_dps
from twistrecip.transforms import (
    I_leading_term,
    I_numeric,
    J_closed_form,
    J_numeric,
    Q_closed_form,
    Q_via_Q0identity,
    residue_circle,
    residue_value,
    taylor_remainder,
    ContourSpec,
    vertical_line_integral,
)
from twistrecip.utils.batch import AsyncoCaseManager
from twistrecip.utils.exceptions import ValidationError
from twistrecip.utils.validators import validate_weight
from .__base import BaseVerification

logger = logging.getLogger(__name__)


def _contract(digits: int, slack: int = 10):
    return mpmath.mpf(10) ** (slack - digits)


def _show(value) -> str:
    return mpmath.nstr(getattr(value, 'value', value), 15)


def theorem1_case(weight: int, p: int, q: int, r: int, digits: int) -> dict:
    return theorem1_sides(get_form(weight), p, q, r, digits).to_dict()


def corollary_case(weight: int, p: int, q: int, digits: int) -> dict:
    return corollary_sides(get_form(weight), p, q, digits).to_dict()


def lemma_case(weight: int, p: int, r: int, q: int, s, digits: int) -> dict:
    return lemma_report(get_form(weight), p, r, q, s, digits).to_dict()


class ReportVerification(BaseVerification):
    """Shared driver for the report-producing identities; cases run through the case manager."""

    def __init__(self, weights, digits: int, workers: int = 1, **kwargs):
        super().__init__(**kwargs)
        self.weights = [validate_weight(k) for k in weights]
        self.digits = digits
        self.workers = workers

    def cases(self):
        raise NotImplementedError

    def service_output_handler(self) -> list[CheckResult]:
        manager = AsyncoCaseManager(workers=self.workers)
        for target, kwargs in self.cases():
            manager.add_to_cases(f'{__name__}:{target.__name__}', kwargs)
        results = manager.start().export()
        logger.info('%s: %d cases in %.1f s', self.name, len(results.items), results.elapsed_time)
        out = []
        for item in results.items:
            if item.error is not None:
                label = ' '.join(f'{k}={v}' for k, v in item.case.kwargs.items())
                out.append(CheckResult(
                    name=f'{self.name} {label}', residual=mpmath.inf, contract=_contract(self.digits),
                    detail={'error': item.error, 'error_code': item.error_code},
                ))
                continue
            out.append(CheckResult.from_report(VerificationReport.from_dict(item.data)))
        return out


class Theorem1Verification(ReportVerification):
    class Config:
        name = 'theorem'
        cache = True
        cache_key = ('weights', 'triples', 'digits')

    def __init__(self, weights, triples, digits: int, **kwargs):
        super().__init__(weights, digits, **kwargs)
        self.triples = [tuple(t) for t in triples]

    @classmethod
    def from_grid(cls, weights, primes, digits: int, **kwargs):
        return cls(weights, list(permutations(primes, 3)), digits, **kwargs)

    def cases(self):
        for k in self.weights:
            for p, q, r in self.triples:
                yield theorem1_case, {'weight': k, 'p': p, 'q': q, 'r': r, 'digits': self.digits}


class CorollaryVerification(ReportVerification):
    class Config:
        name = 'corollary'
        cache = True
        cache_key = ('weights', 'pairs', 'digits')

    def __init__(self, weights, pairs, digits: int, **kwargs):
        super().__init__(weights, digits, **kwargs)
        self.pairs = [tuple(t) for t in pairs]

    @classmethod
    def from_grid(cls, weights, primes, digits: int, **kwargs):
        return cls(weights, list(permutations(primes, 2)), digits, **kwargs)

    def cases(self):
        for k in self.weights:
            for p, q in self.pairs:
                yield corollary_case, {'weight': k, 'p': p, 'q': q, 'digits': self.digits}


class LemmaVerification(ReportVerification):
    class Config:
        name = 'lemma'

    def __init__(self, weights, cases, digits: int, **kwargs):
        super().__init__(weights, digits, **kwargs)
        self.lemma_cases = [tuple(c) for c in cases]

    def cases(self):
        for k in self.weights:
            for p, r, q, s in self.lemma_cases:
                yield lemma_case, {'weight': k, 'p': p, 'r': r, 'q': q, 's': s, 'digits': self.digits}


class OrthogonalityVerification(BaseVerification):
    """Gauss-sum orthogonality and the character sum over all characters, per coprime m."""

    class Config:
        name = 'orthogonality'

    def __init__(self, primes, digits: int, residues=None, **kwargs):
        super().__init__(**kwargs)
        self.primes = list(primes)
        self.digits = digits
        self.residues = None if not residues else list(residues)

    def service_output_handler(self) -> list[CheckResult]:
        contract = _contract(self.digits, slack=5)
        out = []
        for q in self.primes:
            for m in self.residues or range(1, q):
                out.append(CheckResult(
                    name=f'gauss q={q} m={m}',
                    residual=gauss_orthogonality_residual(q, m, self.digits),
                    contract=contract,
                ))
                out.append(CheckResult(
                    name=f'characters q={q} m={m}',
                    residual=character_sum_residual(q, m, self.digits),
                    contract=contract,
                ))
        return out


class FunctionalEquationVerification(BaseVerification):
    """
    Random (weight, phase b <= 50, |Re s| <= 2) draws. Each draw checks the functional
    equation, that the value does not move with the split point of the period integral,
    and agreement with the Dirichlet series far right of the critical line, where its
    Deligne tail bound is the contract.
    """

    class Config:
        name = 'fe'

    SPLIT = '1.3'
    DIRECT_ABSCISSA = 4
    DIRECT_TERMS = 2000

    def __init__(self, weights, count: int, seed: int, digits: int, max_modulus: int = 50, **kwargs):
        super().__init__(**kwargs)
        self.weights = [validate_weight(k) for k in weights]
        self.count = count
        self.seed = seed
        self.digits = digits
        self.max_modulus = max_modulus

    def draw(self):
        rng = random.Random(self.seed)
        for _ in range(self.count):
            k = rng.choice(self.weights)
            b = rng.randint(1, self.max_modulus)
            a = rng.randrange(b)
            while gcd(a, b) != 1:
                a = rng.randrange(b)
            s = mpmath.mpc(rng.uniform(-2, 2), rng.uniform(-2, 2))
            yield k, reduce_phase(a, b), s

    def _direct(self, form, phase, s, contract) -> CheckResult:
        with mpmath.workdps(working_dps(self.digits)):
            far = mpmath.mpc(self.DIRECT_ABSCISSA, s.imag)
        engine = evaluate(LQuery(form=form, phase=phase, s=far, digits=self.digits))
        partial, bound = direct_series(form, phase, far, self.DIRECT_TERMS, self.digits)
        return CheckResult(
            name=f'direct k={form.weight} phase={phase} s={mpmath.nstr(far, 6)}',
            residual=abs(engine - partial),
            contract=bound + contract,
            lhs=_show(engine),
            rhs=_show(partial),
        )

    def service_output_handler(self) -> list[CheckResult]:
        contract = _contract(self.digits)
        out = []
        for k, phase, s in self.draw():
            form = get_form(k)
            label = f'k={k} phase={phase} s={mpmath.nstr(s, 6)}'
            out.append(CheckResult(
                name=f'fe {label}',
                residual=fe_residual(form, phase, s, self.digits),
                contract=contract,
            ))
            out.append(CheckResult(
                name=f'split {label}',
                residual=split_residual(form, phase, s, self.digits, self.SPLIT),
                contract=contract,
            ))
            out.append(self._direct(form, phase, s, contract))
        return out


class AdditiveReciprocityVerification(BaseVerification):
    """Exact defect of n a-bar / b = -n b-bar / a + n / (a b) on random coprime triples."""

    class Config:
        name = 'additive'

    def __init__(self, count: int, seed: int, bound: int = 10 ** 6, **kwargs):
        super().__init__(**kwargs)
        self.count = count
        self.seed = seed
        self.bound = bound

    def service_output_handler(self) -> list[CheckResult]:
        rng = random.Random(self.seed)
        out = []
        while len(out) < self.count:
            a = rng.randint(-self.bound, self.bound)
            b = rng.randint(-self.bound, self.bound)
            if a == 0 or b == 0 or gcd(a, b) != 1:
                continue
            n = rng.randint(-self.bound, self.bound)
            defect = additive_reciprocity_check(n, a, b)
            out.append(CheckResult(
                name=f'additive n={n} a={a} b={b}',
                residual=mpmath.mpf(defect.numerator) / defect.denominator,
                contract=0,
                detail={'defect': str(defect)},
            ))
        return out


class TransformVerification(BaseVerification):
    """Quadrature against closed forms for the integral transforms, one grid per ``which``."""

    class Config:
        name = 'transforms'

    MELLIN_CASES = (
        (mpmath.mpf('0.05'), 2), (mpmath.mpf('0.5'), 2), (mpmath.mpf('0.3'), 4), (mpmath.mpf('1.7'), 6),
        (3, 3), (5, 2), (5, 8),
    )
    RESIDUE_CASES = ((0, 3, '0.2'), (1, 3, '0.2'), (2, 3, '0.2'))
    J_CASES = ((1, 12), (10, 16), (mpmath.mpf('0.5'), 12), (mpmath.mpf('3.7'), 20))
    I_CASES = (mpmath.mpf('0.5'), 2, 10, 50)
    Q_CASES = ((1, 3, 7, 5, 12), (4, 5, 11, 3, 16))

    def __init__(self, which: str, tol, digits: int = 30, **kwargs):
        super().__init__(**kwargs)
        self.which = which
        self.tol = mpmath.mpf(tol)
        self.digits = digits

    def service_output_handler(self) -> list[CheckResult]:
        handler = getattr(self, f'_{self.which.lower()}', None)
        if handler is None:
            raise ValidationError(f'unknown transform {self.which!r}; choose one of mellin, residue, I, J, Q.')
        return handler()

    def _row(self, name, lhs, rhs, contract=None):
        with mpmath.workdps(working_dps(self.digits)):
            residual = abs(getattr(lhs, 'value', lhs) - getattr(rhs, 'value', rhs))
        return CheckResult(
            name=name, residual=residual, contract=self.tol if contract is None else contract,
            lhs=_show(lhs), rhs=_show(rhs),
        )

    def _mellin(self):
        out = []
        for x, n in self.MELLIN_CASES:
            spec = ContourSpec(abscissa=-mpmath.mpf(n) - mpmath.mpf(1) / 2, integrand='mellin_exp')
            integral = vertical_line_integral(spec, {'x': x}, self.tol)
            out.append(self._row(f'mellin x={x} N={n}', taylor_remainder(x, n, integral.digits), integral))
        return out

    def _residue(self):
        form, phase = get_form(12), reduce_phase(1, 3)
        return [
            self._row(
                f'residue n={n} x={x} s={s}',
                residue_value(n, x, s, form, phase, 20),
                residue_circle(n, x, s, form, phase, 20),
                contract=mpmath.mpf('1e-10'),
            )
            for n, x, s in self.RESIDUE_CASES
        ]

    def _j(self):
        return [
            self._row(f'J x={x} k={k}', J_closed_form(x, k, self.digits), J_numeric(x, k, self.tol))
            for x, k in self.J_CASES
        ]

    def _i(self):
        s, k = mpmath.mpf('1.25'), 12
        rows = []
        for x in self.I_CASES:
            value = I_numeric(x, s, k, self.tol)
            lead = I_leading_term(x, s, k, self.digits)
            with mpmath.workdps(working_dps(self.digits)):
                scale = mpmath.power(x, -2 * s - 1) + mpmath.power(x, -mpmath.mpf(15) / 8)
                rows.append((x, value, lead, abs(value.value - lead.value) / scale))
        # fitted constant: each ratio stays within twice the largest one before it
        out = []
        for i, (x, value, lead, ratio) in enumerate(rows):
            earlier = [row[3] for row in rows[:i]]
            out.append(CheckResult(
                name=f'I x={x} s={s}', residual=ratio,
                contract=2 * max(earlier) if earlier else mpmath.inf,
                lhs=_show(value), rhs=_show(lead),
            ))
        return out

    def _q(self):
        return [
            self._row(
                f'Q n={n} p={p} q={q} r={r} k={k}',
                Q_closed_form(n, p, q, r, k, self.digits),
                Q_via_Q0identity(n, p, q, r, k, self.tol),
            )
            for n, p, q, r, k in self.Q_CASES
        ]
