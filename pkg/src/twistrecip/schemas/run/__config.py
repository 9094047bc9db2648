from typing import Literal

from pydantic import Field, field_validator

from twistrecip.config import SETTINGS
from twistrecip.schemas import AbstractBaseSchema
from twistrecip.utils.exceptions import ValidationError
from twistrecip.utils.json import JSON
from twistrecip.utils.validators import validate_digits, validate_prime, validate_weight

OutputFormat = Literal['text', 'json', 'csv']


class RunConfig(AbstractBaseSchema):
    """One invocation: the subcommand, its grids and where the report goes."""

    subcommand: str
    weights: list[int] = Field(default_factory=lambda: [12])
    primes: list[int] = Field(default_factory=lambda: [3, 5, 7, 11, 13])
    digits: int = SETTINGS.DEFAULT_DIGITS
    tol: float = 1e-8
    output: str | None = None
    format: OutputFormat = 'text'
    seed: int = 0
    count: int = 100
    deterministic: bool = False
    workers: int = SETTINGS.WORKERS

    @field_validator('digits')
    @classmethod
    def check_digits(cls, value):
        return validate_digits(value)

    @field_validator('weights')
    @classmethod
    def check_weights(cls, value):
        if not value:
            raise ValidationError('the weight grid is empty.')
        return [validate_weight(k) for k in value]

    @field_validator('primes')
    @classmethod
    def check_primes(cls, value):
        if not value:
            raise ValidationError('the prime grid is empty.')
        return [validate_prime(p) for p in value]

    @field_validator('tol')
    @classmethod
    def check_tol(cls, value):
        if not 0 < value < 1:
            raise ValidationError(f'tolerance must lie in (0, 1), got {value}.')
        return value

    @classmethod
    def from_file(cls, path: str, **overrides) -> 'RunConfig':
        """File values first; every override that is not None wins."""
        try:
            with open(path, 'r') as f:
                data = JSON.loads(f.read())
        except (OSError, ValueError) as exc:
            raise ValidationError(f'cannot read config file {path}: {exc}')
        if not isinstance(data, dict):
            raise ValidationError(f'config file {path} must hold a JSON object.')
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**data)
