from .casings import SNAKE_CASE, PASCAL_CASE, KEBAB_CASE, ANY
from .converters import casing, command_name
