class TwistRecipError(Exception):
    code = 'ERROR'

    def __init__(self, message, code=None, *args):
        super().__init__(message, *args)
        self.message = message
        if code is not None:
            self.code = code

    def __str__(self):
        return self.message


class ValidationError(TwistRecipError):
    code = 'INVALID'


class UnsupportedWeightError(ValidationError):
    code = 'UNSUPPORTED_WEIGHT'


class NotCoprimeError(ValidationError):
    code = 'NOT_COPRIME'


class DomainError(ValidationError):
    code = 'DOMAIN'


class PoleError(DomainError):
    code = 'POLE'

    def __init__(self, message, location=None, *args):
        super().__init__(message, None, *args)
        self.location = location


class PrecisionError(TwistRecipError):
    code = 'PRECISION'

    def __init__(self, message, achieved_bound=None, *args):
        super().__init__(message, None, *args)
        self.achieved_bound = achieved_bound


class QuadratureError(TwistRecipError):
    code = 'QUADRATURE'

    def __init__(self, message, decay_exponent=None, tail_estimate=None, *args):
        super().__init__(message, None, *args)
        self.decay_exponent = decay_exponent
        self.tail_estimate = tail_estimate


class CostError(TwistRecipError):
    code = 'COST'

    def __init__(self, message, cost_estimate=None, *args):
        super().__init__(message, None, *args)
        self.cost_estimate = cost_estimate


class ContractViolation(TwistRecipError):
    code = 'CONTRACT'

    def __init__(self, message, residual=None, *args):
        super().__init__(message, None, *args)
        self.residual = residual
