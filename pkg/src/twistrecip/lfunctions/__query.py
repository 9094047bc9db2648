from typing import Any

import mpmath
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator

from twistrecip.config import SETTINGS
from twistrecip.hecke import HeckeEigenform, get_form
from twistrecip.modarith import ReducedPhase, reduce_phase
from twistrecip.special import ApComplex, working_dps
from twistrecip.utils.exceptions import DomainError
from twistrecip.utils.validators import validate_digits


def as_shift(value, digits: int) -> ApComplex:
    """Shift s as an ApComplex; strings such as '0.3+0.1i' or '1/4' parse at full precision."""
    if isinstance(value, ApComplex):
        return ApComplex(value.value, digits)
    if isinstance(value, str):
        with mpmath.workdps(working_dps(digits)):
            value = mpmath.mpmathify(value.replace(' ', '').replace('i', 'j'))
            return ApComplex(value, digits)
    return ApComplex(value, digits)


class LQuery(BaseModel):
    """One evaluation point 1/2 + s of L(., f x e(a/b))."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    form: HeckeEigenform
    phase: ReducedPhase
    digits: int = SETTINGS.DEFAULT_DIGITS
    s: Any = Field(default=0, validate_default=True)

    @field_validator('digits')
    @classmethod
    def check_digits(cls, value):
        return validate_digits(value)

    @field_validator('s', mode='before')
    @classmethod
    def convert_shift(cls, value, info: ValidationInfo):
        return as_shift(value, info.data.get('digits', SETTINGS.DEFAULT_DIGITS))

    @model_validator(mode='after')
    def check_strip(self):
        limit = self.form.weight // 2 - 1
        if abs(self.s.real) > limit:
            raise DomainError(
                f'|Re s| must be at most {limit} for weight {self.form.weight}, '
                f'got Re s = {mpmath.nstr(self.s.real, 8)}.'
            )
        return self

    @property
    def weight(self) -> int:
        return self.form.weight


def make_query(weight: int | HeckeEigenform, phase: ReducedPhase | tuple[int, int], s=0,
               digits: int = SETTINGS.DEFAULT_DIGITS) -> LQuery:
    form = weight if isinstance(weight, HeckeEigenform) else get_form(weight)
    if not isinstance(phase, ReducedPhase):
        phase = reduce_phase(*phase)
    return LQuery(form=form, phase=phase, s=s, digits=digits)
