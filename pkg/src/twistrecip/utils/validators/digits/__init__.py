from twistrecip.utils.exceptions import ValidationError
from twistrecip.utils.validators.integer import validate as validate_integer

MIN_DIGITS = 10


def validate(value):
    value = validate_integer(value)
    if value < MIN_DIGITS:
        raise ValidationError(f'precision must be at least {MIN_DIGITS} digits, got {value}.')
    return value
