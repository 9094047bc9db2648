from itertools import permutations

from twistrecip.schemas.run import RunConfig
from twistrecip.services import CorollaryVerification, LemmaVerification, Theorem1Verification
from twistrecip.utils.exceptions import ValidationError
from ..__base import BaseCommand, CommandOutput

BATCH_SUBCOMMANDS = ('verify-theorem1', 'verify-corollary', 'verify-lemma1')


class BatchCommand(BaseCommand):
    help = 'Run a reciprocity check over the weight and prime grids of a JSON config file.'
    default_format = 'json'

    def add_arguments(self, parser):
        parser.add_argument('--config', required=True, help='JSON file holding a RunConfig.')
        parser.add_argument('--workers', type=int, default=None)

    def run_config(self, options):
        overrides = {
            'digits': options.get('digits'),
            'workers': options.get('workers'),
            'output': options.get('report'),
            'format': options.get('format'),
            'deterministic': options.get('deterministic') or None,
        }
        config = RunConfig.from_file(options['config'], **overrides)
        if config.subcommand not in BATCH_SUBCOMMANDS:
            raise ValidationError(
                f'batch runs {", ".join(BATCH_SUBCOMMANDS)}; got {config.subcommand!r}.')
        if options.get('format') is None and 'format' not in config.model_fields_set:
            config = config.model_copy(update={'format': self.default_format})
        return config

    def handle(self, config, /, **options):
        primes = config.primes
        if config.subcommand == 'verify-theorem1':
            service = Theorem1Verification.from_grid(config.weights, primes, config.digits, workers=config.workers)
        elif config.subcommand == 'verify-corollary':
            service = CorollaryVerification.from_grid(config.weights, primes, config.digits, workers=config.workers)
        else:
            cases = [(p, r, q, 0) for q in primes for p, r in permutations([x for x in primes if x != q], 2)]
            service = LemmaVerification(config.weights, cases, config.digits, workers=config.workers)
        return CommandOutput(checks=service.execute())
