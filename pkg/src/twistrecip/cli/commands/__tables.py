import mpmath

from twistrecip.hecke import build_form, get_form
from twistrecip.lfunctions import LQuery, evaluate_detailed
from twistrecip.modarith import reduce_phase
from twistrecip.special import working_dps
from twistrecip.utils.exceptions import ValidationError
from twistrecip.utils.validators import validate_integer
from ..__base import BaseCommand, CommandOutput


class TauTableCommand(BaseCommand):
    help = 'Print the first n Fourier coefficients a_f(1..n) of the weight-k eigenform.'
    default_format = 'csv'

    def add_arguments(self, parser):
        parser.add_argument('--weight', type=int, default=12)
        parser.add_argument('--n', type=int, default=10)

    def handle(self, config, **options):
        count = validate_integer(options['n'], minimum=1)
        form = build_form(config.weights[0], count)
        return CommandOutput(rows=[{'n': n, 'coefficient': c} for n, c in enumerate(form.coeffs, start=1)])


class EvalLtwistCommand(BaseCommand):
    help = 'Evaluate L(1/2 + s, f x e(a/b)) with its truncation length and error bound.'

    def add_arguments(self, parser):
        parser.add_argument('--weight', type=int, default=12)
        parser.add_argument('--a', type=int, default=0)
        parser.add_argument('--b', type=int, default=1)
        parser.add_argument('--s-re', dest='s_re', default=None, help='Real part of s, read at full precision.')
        parser.add_argument('--s-im', dest='s_im', default=None, help='Imaginary part of s.')
        parser.add_argument('--s', default=None, help="Shift s in one piece, e.g. '0.25' or '0.3+0.1i'.")

    @staticmethod
    def _shift(options, digits):
        parts = options.get('s_re'), options.get('s_im')
        if options.get('s') is not None:
            if parts != (None, None):
                raise ValidationError('give either --s or --s-re/--s-im, not both.')
            return options['s'], options['s']
        real, imag = (part or '0' for part in parts)
        label = f'{real}{"" if imag.startswith("-") else "+"}{imag}i'
        with mpmath.workdps(working_dps(digits)):
            try:
                return mpmath.mpc(mpmath.mpf(real), mpmath.mpf(imag)), label
            except ValueError:
                raise ValidationError(f'cannot read s = {label} as a complex number.')

    def handle(self, config, **options):
        s, label = self._shift(options, config.digits)
        query = LQuery(
            form=get_form(config.weights[0]),
            phase=reduce_phase(options['a'], options['b']),
            s=s,
            digits=config.digits,
        )
        result = evaluate_detailed(query)
        return CommandOutput(rows=[{
            'weight': query.weight,
            'phase': str(query.phase),
            's': label,
            're': mpmath.nstr(result.value.real, config.digits),
            'im': mpmath.nstr(result.value.imag, config.digits),
            'terms': result.terms,
            'error_bound': mpmath.nstr(result.error_bound, 5),
        }])
