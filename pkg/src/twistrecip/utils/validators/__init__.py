from .integer import validate as validate_integer
from .prime import validate as validate_prime
from .weight import validate as validate_weight, SUPPORTED_WEIGHTS
from .digits import validate as validate_digits, MIN_DIGITS
