from twistrecip.utils.exceptions import UnsupportedWeightError
from twistrecip.utils.validators.integer import validate as validate_integer

# weights whose level-1 cusp space is spanned by a single eigenform
SUPPORTED_WEIGHTS = (12, 16, 18, 20, 22, 26)


def validate(value):
    value = validate_integer(value)
    if value not in SUPPORTED_WEIGHTS:
        raise UnsupportedWeightError(
            f'weight {value} is not supported; choose one of '
            f'{", ".join(str(k) for k in SUPPORTED_WEIGHTS)} '
            f'(the cusp space must be one-dimensional).'
        )
    return value
