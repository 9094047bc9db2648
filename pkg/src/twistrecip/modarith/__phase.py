from fractions import Fraction
from math import gcd

from pydantic import BaseModel, ConfigDict, model_validator

from twistrecip.utils.exceptions import DomainError, NotCoprimeError, ValidationError


class ReducedPhase(BaseModel):
    """A rational phase a/b with gcd(a, b) = 1 and 0 <= a < b."""
    model_config = ConfigDict(frozen=True)

    a: int
    b: int

    @model_validator(mode='after')
    def check_reduced(self):
        if self.b < 1:
            raise ValidationError(f'phase denominator must be positive, got {self.b}.')
        if not 0 <= self.a < self.b:
            raise ValidationError(f'phase numerator must lie in [0, {self.b}), got {self.a}.')
        if gcd(self.a, self.b) != 1:
            raise NotCoprimeError(f'{self.a}/{self.b} is not in lowest terms.')
        return self

    @property
    def inverse(self) -> int:
        """a-bar in [0, b); 0 for the trivial phase."""
        return mod_inverse(self.a, self.b)

    @property
    def dual(self) -> 'ReducedPhase':
        """The phase -a-bar/b paired with a/b by the functional equation."""
        return reduce_phase(-self.inverse, self.b)

    @property
    def negated(self) -> 'ReducedPhase':
        return reduce_phase(-self.a, self.b)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.a, self.b)

    def __str__(self):
        return f'{self.a}/{self.b}'


def reduce_phase(a: int, b: int) -> ReducedPhase:
    if b == 0:
        raise ValidationError('phase denominator must be nonzero.')
    if b < 0:
        a, b = -a, -b
    if gcd(a, b) != 1:
        raise NotCoprimeError(f'{a}/{b} is not in lowest terms (gcd {gcd(a, b)}).')
    return ReducedPhase(a=a % b, b=b)


def mod_inverse(a: int, b: int) -> int:
    if b < 1:
        raise ValidationError(f'modulus must be positive, got {b}.')
    if gcd(a, b) != 1:
        raise NotCoprimeError(f'{a} has no inverse modulo {b}.')
    if b == 1:
        return 0
    return pow(a, -1, b)


def additive_reciprocity_check(n: int, a: int, b: int) -> Fraction:
    """
    Exact defect of n a-bar / b  ==  -n b-bar / a + n / (a b)  (mod 1),
    with a-bar the inverse of a mod |b| and b-bar the inverse of b mod |a|.
    """
    if a == 0 or b == 0:
        raise DomainError('additive reciprocity needs nonzero a and b.')
    if gcd(a, b) != 1:
        raise NotCoprimeError(f'{a} and {b} are not coprime.')
    a_bar = mod_inverse(a, abs(b))
    b_bar = mod_inverse(b, abs(a))
    lhs = Fraction(n * a_bar, b)
    rhs = Fraction(-n * b_bar, a) + Fraction(n, a * b)
    return (lhs - rhs) % 1
