from json import JSONEncoder
from fractions import Fraction
import datetime

import mpmath
from pydantic import BaseModel


def lossless_digits(prec: int) -> int:
    """Decimal digits that round-trip a binary mantissa of ``prec`` bits."""
    return int(prec * 0.30103) + 2


class Encoder(JSONEncoder):
    def default(self, obj):
        if isinstance(obj, (datetime.date, datetime.datetime)):
            return obj.isoformat()
        if isinstance(obj, Fraction):
            return f'{obj.numerator}/{obj.denominator}'
        if isinstance(obj, mpmath.mpf):
            return mpmath.nstr(obj, lossless_digits(mpmath.mp.prec), min_fixed=1, max_fixed=0)
        if isinstance(obj, mpmath.mpc):
            return {'re': self.default(obj.real), 'im': self.default(obj.imag)}
        if isinstance(obj, BaseModel):
            return obj.model_dump(mode='json')
        if hasattr(obj, 'to_dict'):
            return obj.to_dict()
        return super().default(obj)
