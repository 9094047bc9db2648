class BaseMessage:
    def __init__(self, message, code, type_, *args, **kwargs):
        self.message = message
        self.code = code
        self.type = type_

    def format(self, **kwargs):
        return self.message.format(**kwargs)


class BaseFailMessage(BaseMessage):
    def __init__(self, *args, **kwargs):
        super().__init__(type_='FAIL', *args, **kwargs)


class BaseSuccessMessage(BaseMessage):
    def __init__(self, *args, **kwargs):
        super().__init__(type_='SUCCESS', *args, **kwargs)


class BaseInfoMessage(BaseMessage):
    def __init__(self, *args, **kwargs):
        super().__init__(type_='INFO', *args, **kwargs)


class _ContractMetSuccessMessage(BaseSuccessMessage):
    def __init__(self):
        super().__init__(
            message='{name}: residual {residual} meets the contract {contract}.',
            code='0',
        )


ContractMetSuccessMessage = _ContractMetSuccessMessage()


class _ContractViolatedFailMessage(BaseFailMessage):
    def __init__(self):
        super().__init__(
            message='{name}: residual {residual} exceeds the contract {contract}.',
            code='1',
        )


ContractViolatedFailMessage = _ContractViolatedFailMessage()


class _BadInputFailMessage(BaseFailMessage):
    def __init__(self):
        super().__init__(
            message='invalid input: {detail}',
            code='2',
        )


BadInputFailMessage = _BadInputFailMessage()


class _WorstResidualInfoMessage(BaseInfoMessage):
    def __init__(self):
        super().__init__(
            message='{failed} of {total} checks failed; worst residual {worst} ({name}).',
            code='1',
        )


WorstResidualInfoMessage = _WorstResidualInfoMessage()
