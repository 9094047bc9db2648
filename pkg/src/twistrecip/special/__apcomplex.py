from numbers import Number

import mpmath
from mpmath.libmp import dps_to_prec

from twistrecip.config import SETTINGS
from twistrecip.utils.json import lossless_digits


def working_dps(digits: int) -> int:
    return digits + SETTINGS.GUARD_DIGITS


class ApComplex:
    """
    An arbitrary-precision complex number tagged with the decimal precision it is
    meant to be correct to.

    The wrapped ``mpc`` is always held with ``digits + GUARD_DIGITS`` decimal digits;
    binary operations run at the smaller of the two operand tags.
    """

    __slots__ = ('value', 'digits')

    def __init__(self, value, digits: int | None = None):
        if isinstance(value, ApComplex):
            digits = value.digits if digits is None else min(digits, value.digits)
            value = value.value
        self.digits = SETTINGS.DEFAULT_DIGITS if digits is None else int(digits)
        with mpmath.workdps(working_dps(self.digits)):
            self.value = mpmath.mpc(value)

    @property
    def real(self):
        return self.value.real

    @property
    def imag(self):
        return self.value.imag

    @property
    def prec(self) -> int:
        return dps_to_prec(working_dps(self.digits))

    def _coerce(self, other):
        if isinstance(other, ApComplex):
            return other.value, min(self.digits, other.digits)
        if isinstance(other, (Number, mpmath.mpf, mpmath.mpc)):
            return other, self.digits
        return NotImplemented, None

    def _binary(self, other, operation):
        value, digits = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        with mpmath.workdps(working_dps(digits)):
            return ApComplex(operation(self.value, value), digits)

    def __add__(self, other):
        return self._binary(other, lambda x, y: x + y)

    def __radd__(self, other):
        return self._binary(other, lambda x, y: y + x)

    def __sub__(self, other):
        return self._binary(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._binary(other, lambda x, y: y - x)

    def __mul__(self, other):
        return self._binary(other, lambda x, y: x * y)

    def __rmul__(self, other):
        return self._binary(other, lambda x, y: y * x)

    def __truediv__(self, other):
        return self._binary(other, lambda x, y: x / y)

    def __rtruediv__(self, other):
        return self._binary(other, lambda x, y: y / x)

    def __pow__(self, other):
        return self._binary(other, lambda x, y: x ** y)

    def __neg__(self):
        with mpmath.workdps(working_dps(self.digits)):
            return ApComplex(-self.value, self.digits)

    def __abs__(self):
        with mpmath.workdps(working_dps(self.digits)):
            return abs(self.value)

    def conjugate(self):
        with mpmath.workdps(working_dps(self.digits)):
            return ApComplex(mpmath.conj(self.value), self.digits)

    def __complex__(self):
        return complex(self.value)

    def __repr__(self):
        return f'ApComplex({mpmath.nstr(self.value, self.digits)}, digits={self.digits})'

    def to_dict(self) -> dict:
        n = lossless_digits(self.prec)
        with mpmath.workprec(self.prec):
            return {
                're': mpmath.nstr(self.real, n, min_fixed=1, max_fixed=0),
                'im': mpmath.nstr(self.imag, n, min_fixed=1, max_fixed=0),
            }

    @classmethod
    def from_dict(cls, data: dict, digits: int) -> 'ApComplex':
        with mpmath.workprec(dps_to_prec(working_dps(digits))):
            return cls(mpmath.mpc(mpmath.mpf(data['re']), mpmath.mpf(data['im'])), digits)


def to_mpc(value):
    if isinstance(value, ApComplex):
        return value.value
    return mpmath.mpc(value)


def digits_of(value, digits: int | None = None) -> int:
    if digits is not None:
        return int(digits)
    if isinstance(value, ApComplex):
        return value.digits
    return SETTINGS.DEFAULT_DIGITS
