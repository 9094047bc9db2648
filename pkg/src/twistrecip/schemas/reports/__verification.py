from typing import Any, Literal

import mpmath
from pydantic import ConfigDict, Field

from twistrecip.schemas import AbstractBaseSchema
from twistrecip.special import ApComplex, working_dps
from twistrecip.utils.json import JSON

SCHEMA_VERSION = 1

Mode = Literal['theorem', 'corollary', 'lemma']


class ReportInputs(AbstractBaseSchema):
    weight: int
    p: int
    q: int
    r: int = 1
    digits: int
    mode: Mode = 'theorem'
    shift: str = '0'


class ReportTerm(AbstractBaseSchema):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    j: int
    value: ApComplex


class VerificationReport(AbstractBaseSchema):
    """
    Both sides of one reciprocity identity at a fixed precision.

    ``residual`` is never stored authoritatively: it is recomputed from ``lhs`` and
    ``rhs`` whenever it is read, so a parsed report reproduces the bits it was written with.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    schema_version: int = SCHEMA_VERSION
    inputs: ReportInputs
    lhs: ApComplex
    rhs: ApComplex
    terms: list[ReportTerm] = Field(default_factory=list)
    error_budget: Any = 0
    wall_ms: dict[str, float] = Field(default_factory=dict)

    @property
    def residual(self):
        return abs(self.lhs - self.rhs)

    @property
    def contract(self):
        return mpmath.mpf(10) ** (10 - self.inputs.digits)

    @property
    def passed(self) -> bool:
        return self.residual < self.contract

    @property
    def name(self) -> str:
        i = self.inputs
        if i.mode == 'corollary':
            return f'corollary k={i.weight} p={i.p} q={i.q}'
        if i.mode == 'lemma':
            return f'lemma k={i.weight} p={i.p} r={i.r} q={i.q} s={i.shift}'
        return f'theorem k={i.weight} p={i.p} q={i.q} r={i.r}'

    def to_dict(self, deterministic: bool = False) -> dict:
        with mpmath.workdps(working_dps(self.inputs.digits)):
            return {
                'schema_version': self.schema_version,
                'inputs': self.inputs.model_dump(),
                'lhs': self.lhs.to_dict(),
                'rhs': self.rhs.to_dict(),
                'terms': [{'j': t.j, 'value': t.value.to_dict()} for t in self.terms],
                'residual': mpmath.nstr(self.residual, 10, min_fixed=1, max_fixed=0),
                'error_budget': mpmath.nstr(mpmath.mpf(self.error_budget), 10, min_fixed=1, max_fixed=0),
                'wall_ms': {k: 0.0 for k in self.wall_ms} if deterministic else dict(self.wall_ms),
            }

    def to_json(self, indent: int | None = 2, deterministic: bool = False) -> str:
        return JSON.dumps(self.to_dict(deterministic=deterministic), indent=indent)

    def to_row(self) -> dict:
        i = self.inputs
        return {
            'mode': i.mode,
            'weight': i.weight,
            'p': i.p,
            'q': i.q,
            'r': i.r,
            'shift': i.shift,
            'digits': i.digits,
            'residual': mpmath.nstr(self.residual, 5),
            'error_budget': mpmath.nstr(mpmath.mpf(self.error_budget), 5),
            'passed': int(self.passed),
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'VerificationReport':
        inputs = ReportInputs(**data['inputs'])
        digits = inputs.digits
        with mpmath.workdps(working_dps(digits)):
            error_budget = mpmath.mpf(data.get('error_budget', 0))
        return cls(
            schema_version=data.get('schema_version', SCHEMA_VERSION),
            inputs=inputs,
            lhs=ApComplex.from_dict(data['lhs'], digits),
            rhs=ApComplex.from_dict(data['rhs'], digits),
            terms=[
                ReportTerm(j=t['j'], value=ApComplex.from_dict(t['value'], digits))
                for t in data.get('terms', [])
            ],
            error_budget=error_budget,
            wall_ms=data.get('wall_ms', {}),
        )

    @classmethod
    def from_json(cls, text: str) -> 'VerificationReport':
        return cls.from_dict(JSON.loads(text))
