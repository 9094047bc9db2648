from typing import Any

import mpmath
from pydantic import ConfigDict, Field

from twistrecip.schemas import AbstractBaseSchema
from .__verification import VerificationReport


class CheckResult(AbstractBaseSchema):
    """One residual measured against its contract."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    residual: Any
    contract: Any
    lhs: str = ''
    rhs: str = ''
    report: VerificationReport | None = None
    detail: dict = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return mpmath.mpf(self.residual) <= mpmath.mpf(self.contract)

    @classmethod
    def from_report(cls, report: VerificationReport) -> 'CheckResult':
        return cls(
            name=report.name,
            residual=report.residual,
            contract=report.contract,
            lhs=mpmath.nstr(report.lhs.value, 15),
            rhs=mpmath.nstr(report.rhs.value, 15),
            report=report,
        )

    def to_row(self) -> dict:
        return {
            'case': self.name,
            'lhs': self.lhs,
            'rhs': self.rhs,
            'residual': mpmath.nstr(mpmath.mpf(self.residual), 5),
            'contract': mpmath.nstr(mpmath.mpf(self.contract), 3),
            'passed': int(self.passed),
        }

    def to_dict(self, deterministic: bool = False) -> dict:
        if self.report is not None:
            return self.report.to_dict(deterministic=deterministic)
        return {**self.to_row(), **self.detail}
