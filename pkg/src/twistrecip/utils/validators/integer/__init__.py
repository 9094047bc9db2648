import re

from twistrecip.utils.exceptions import ValidationError


def validate(value, minimum=None):
    pattern = r'^[-+]?(0|[1-9][0-9]*)$'
    validation_error_message = 'Please enter an integer.'

    if isinstance(value, bool):
        raise ValidationError(validation_error_message)

    value = str(value).strip()
    if not re.match(pattern, value):
        raise ValidationError(validation_error_message)

    value = int(value)
    if minimum is not None and value < minimum:
        raise ValidationError(f'Please enter an integer of at least {minimum}.')
    return value
