from sympy import isprime

from twistrecip.utils.exceptions import ValidationError
from twistrecip.utils.validators.integer import validate as validate_integer


def validate(value):
    value = validate_integer(value)
    if value < 3 or value % 2 == 0 or not isprime(value):
        raise ValidationError(f'{value} is not an odd prime.')
    return value
