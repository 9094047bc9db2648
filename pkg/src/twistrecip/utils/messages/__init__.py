from .__ import (
    BaseMessage,
    BaseFailMessage,
    BaseSuccessMessage,
    BaseInfoMessage,

    ContractMetSuccessMessage,
    ContractViolatedFailMessage,
    BadInputFailMessage,
    WorstResidualInfoMessage,
)
