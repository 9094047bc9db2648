from argparse import ArgumentParser
from pathlib import Path
import csv
import io
import logging
import sys

import mpmath
from pydantic import ValidationError as SchemaError

from twistrecip import __version__
from twistrecip.hecke import atomic_write
from twistrecip.utils.exceptions import ContractViolation, CostError, TwistRecipError, ValidationError
from twistrecip.utils.json import JSON
from twistrecip.utils.messages import (
    BadInputFailMessage,
    ContractMetSuccessMessage,
    ContractViolatedFailMessage,
    WorstResidualInfoMessage,
)
from .__base import CommandOutput
from .commands import COMMANDS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def create_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog='twistrecip',
        description='Numerical verification of reciprocity relations for additively twisted L-values.',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='subcommand', metavar='subcommand')
    subparsers.required = True
    for command in COMMANDS:
        command().create_parser(subparsers)
    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def _csv(rows: list[dict]) -> str:
    if not rows:
        return ''
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator='\n')
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def _text(output: CommandOutput) -> str:
    if output.rows:
        return '\n'.join(' '.join(f'{k}={v}' for k, v in row.items()) for row in output.rows) + '\n'
    lines = []
    for check in output.checks:
        message = ContractMetSuccessMessage if check.passed else ContractViolatedFailMessage
        line = message.format(
            name=check.name,
            residual=mpmath.nstr(mpmath.mpf(check.residual), 5),
            contract=mpmath.nstr(mpmath.mpf(check.contract), 3),
        )
        if check.detail.get('error'):
            line += f' [{check.detail["error"]}]'
        lines.append(line)
    return '\n'.join(lines) + '\n'


def render(output: CommandOutput, fmt: str, deterministic: bool = False) -> str:
    if fmt == 'csv':
        return _csv(output.rows or [c.to_row() for c in output.checks])
    if fmt == 'json':
        if output.rows:
            return JSON.dumps(output.rows, indent=2) + '\n'
        data = [c.to_dict(deterministic=deterministic) for c in output.checks]
        return JSON.dumps(data[0] if len(data) == 1 else data, indent=2) + '\n'
    return _text(output)


def check_contracts(output: CommandOutput):
    failed = [c for c in output.checks if not c.passed]
    if not failed:
        return
    worst = max(failed, key=lambda c: mpmath.mpf(c.residual))
    raise ContractViolation(
        WorstResidualInfoMessage.format(
            failed=len(failed),
            total=len(output.checks),
            worst=mpmath.nstr(mpmath.mpf(worst.residual), 5),
            name=worst.name,
        ),
        residual=worst.residual,
    )


def run(argv=None) -> int:
    """Parse ``argv``, run one subcommand and return its exit code."""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    options = vars(args)
    command = options.pop('command')
    _configure_logging(options.get('verbose', 0))

    try:
        config = command.run_config(options)
        output = command.handle(config, **options)
    except (ValidationError, CostError, SchemaError) as exc:
        print(BadInputFailMessage.format(detail=exc), file=sys.stderr)
        return EXIT_USAGE
    except TwistRecipError as exc:
        print(f'{command.name()}: {exc.code}: {exc}', file=sys.stderr)
        return EXIT_VIOLATION

    text = render(output, config.format, config.deterministic)
    if config.output:
        atomic_write(Path(config.output), text)
        logger.info('report written to %s', config.output)
    else:
        sys.stdout.write(text)
    try:
        check_contracts(output)
    except ContractViolation as exc:
        print(exc, file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def main():
    sys.exit(run())
