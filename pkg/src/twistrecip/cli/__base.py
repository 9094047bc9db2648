from argparse import ArgumentParser

from twistrecip.config import SETTINGS
from twistrecip.schemas.run import RunConfig
from twistrecip.utils.strings import command_name


class CommandOutput:
    """Either checks against contracts or a plain table of rows."""

    def __init__(self, checks=None, rows=None):
        self.checks = list(checks or [])
        self.rows = list(rows or [])


class BaseCommand:
    help = ''
    default_format = 'text'

    @classmethod
    def name(cls) -> str:
        return command_name(cls.__name__)

    def create_parser(self, subparsers) -> ArgumentParser:
        parser = subparsers.add_parser(self.name(), help=self.help, description=self.help)
        parser.add_argument('--digits', type=int, default=None,
                            help=f'Working precision P in decimal digits (default {SETTINGS.DEFAULT_DIGITS}).')
        parser.add_argument('--format', choices=('text', 'json', 'csv'), default=None,
                            help=f'Output format (default {self.default_format}).')
        parser.add_argument('--report', default=None, help='Write the output to this path atomically.')
        parser.add_argument('--deterministic', action='store_true',
                            help='Zero all timings so identical runs give byte-identical reports.')
        parser.add_argument('-v', '--verbose', action='count', default=0)
        self.add_arguments(parser)
        parser.set_defaults(command=self)
        return parser

    def add_arguments(self, parser: ArgumentParser):
        pass

    def run_config(self, options: dict) -> RunConfig:
        data = {
            'subcommand': self.name(),
            'output': options.get('report'),
            'format': options.get('format') or self.default_format,
            'deterministic': options.get('deterministic', False),
        }
        for key in ('digits', 'tol', 'seed', 'count', 'workers'):
            if options.get(key) is not None:
                data[key] = options[key]
        if options.get('weight') is not None:
            data['weights'] = options['weight'] if isinstance(options['weight'], list) else [options['weight']]
        return RunConfig(**data)

    def handle(self, config: RunConfig, **options) -> CommandOutput:
        raise NotImplementedError
