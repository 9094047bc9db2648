from .__base import BaseCommand, CommandOutput
from .__run import run, main, render, create_parser, check_contracts, EXIT_OK, EXIT_VIOLATION, EXIT_USAGE
