from twistrecip.reciprocity import PrimeTriple
from twistrecip.services import (
    AdditiveReciprocityVerification,
    CorollaryVerification,
    FunctionalEquationVerification,
    LemmaVerification,
    OrthogonalityVerification,
    Theorem1Verification,
    TransformVerification,
)
from twistrecip.utils.validators import SUPPORTED_WEIGHTS, validate_prime
from ..__base import BaseCommand, CommandOutput


class VerifyTheorem1Command(BaseCommand):
    help = 'Check M(p,r;q) - M(-q,r;p) - M(-p,q;r) against the finite sum over shifts.'

    def add_arguments(self, parser):
        parser.add_argument('--weight', type=int, default=12)
        parser.add_argument('--p', type=int, required=True)
        parser.add_argument('--q', type=int, required=True)
        parser.add_argument('--r', type=int, required=True)

    def handle(self, config, **options):
        triple = PrimeTriple(p=options['p'], q=options['q'], r=options['r'])
        service = Theorem1Verification(config.weights, [(triple.p, triple.q, triple.r)], config.digits)
        return CommandOutput(checks=service.execute())


class VerifyCorollaryCommand(BaseCommand):
    help = 'Check M(p,q) - M(-q,p) against L(1/2, f) plus the finite sum over shifts.'

    def add_arguments(self, parser):
        parser.add_argument('--weight', type=int, default=12)
        parser.add_argument('--p', type=int, required=True)
        parser.add_argument('--q', type=int, required=True)

    def handle(self, config, **options):
        pair = PrimeTriple(p=options['p'], q=options['q'], r=1, corollary=True)
        service = CorollaryVerification(config.weights, [(pair.p, pair.q)], config.digits)
        return CommandOutput(checks=service.execute())


class VerifyLemma1Command(BaseCommand):
    help = 'Check the character-sum moment against the additive twist L(1/2 + s, f x e(p-bar r / q)).'

    def add_arguments(self, parser):
        parser.add_argument('--weight', type=int, default=12)
        parser.add_argument('--p', type=int, required=True)
        parser.add_argument('--r', type=int, required=True)
        parser.add_argument('--q', type=int, required=True)
        parser.add_argument('--s', default='0')

    def handle(self, config, **options):
        validate_prime(options['q'])
        case = (options['p'], options['r'], options['q'], options['s'])
        service = LemmaVerification(config.weights, [case], config.digits)
        return CommandOutput(checks=service.execute())


class VerifyOrthogonalityCommand(BaseCommand):
    help = 'Gauss-sum orthogonality and character sums for every coprime residue m.'

    def add_arguments(self, parser):
        parser.add_argument('--q', type=int, action='append', default=None,
                            help='Modulus; repeat for several (default 3 5 7 11 13).')
        parser.add_argument('--m', type=int, action='append', default=None,
                            help='Residue m coprime to every q; repeat for several (default all of 1..q-1).')

    def handle(self, config, **options):
        primes = [validate_prime(q) for q in options['q']] if options.get('q') else config.primes
        residues = options.get('m')
        return CommandOutput(checks=OrthogonalityVerification(primes, config.digits, residues).execute())


class VerifyTransformsCommand(BaseCommand):
    help = 'Contour quadrature against the closed forms of the integral transforms.'
    default_format = 'csv'

    def add_arguments(self, parser):
        parser.add_argument('--which', choices=('mellin', 'residue', 'I', 'J', 'Q'), required=True)
        parser.add_argument('--tol', type=float, default=None)

    def handle(self, config, **options):
        service = TransformVerification(options['which'], config.tol, config.digits)
        return CommandOutput(checks=service.execute())


class VerifyFeCommand(BaseCommand):
    help = 'Functional-equation residuals at random weights, phases and shifts.'

    def add_arguments(self, parser):
        parser.add_argument('--weight', type=int, action='append', default=None,
                            help='Weight to draw from; repeat for several (default all supported).')
        parser.add_argument('--count', type=int, default=None)
        parser.add_argument('--seed', type=int, default=None)

    def run_config(self, options):
        if options.get('weight') is None:
            options = {**options, 'weight': list(SUPPORTED_WEIGHTS)}
        return super().run_config(options)

    def handle(self, config, **options):
        service = FunctionalEquationVerification(config.weights, config.count, config.seed, config.digits)
        return CommandOutput(checks=service.execute())


class VerifyAdditiveCommand(BaseCommand):
    help = 'Exact additive reciprocity defects on random coprime pairs.'

    def add_arguments(self, parser):
        parser.add_argument('--count', type=int, default=None)
        parser.add_argument('--seed', type=int, default=None)

    def handle(self, config, **options):
        service = AdditiveReciprocityVerification(config.count, config.seed)
        return CommandOutput(checks=service.execute())
