from .__tables import TauTableCommand, EvalLtwistCommand
from .__verify import (
    VerifyTheorem1Command,
    VerifyCorollaryCommand,
    VerifyLemma1Command,
    VerifyOrthogonalityCommand,
    VerifyTransformsCommand,
    VerifyFeCommand,
    VerifyAdditiveCommand,
)
from .__batch import BatchCommand, BATCH_SUBCOMMANDS

COMMANDS = (
    TauTableCommand,
    EvalLtwistCommand,
    VerifyTheorem1Command,
    VerifyCorollaryCommand,
    VerifyLemma1Command,
    VerifyOrthogonalityCommand,
    VerifyTransformsCommand,
    VerifyFeCommand,
    VerifyAdditiveCommand,
    BatchCommand,
)
