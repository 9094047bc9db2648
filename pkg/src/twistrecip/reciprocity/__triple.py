from math import gcd

from pydantic import BaseModel, ConfigDict, model_validator

from twistrecip.modarith import ReducedPhase, mod_inverse, reduce_phase
from twistrecip.utils.exceptions import NotCoprimeError, ValidationError
from twistrecip.utils.validators import validate_prime


def moment_phase(u: int, v: int, modulus: int) -> ReducedPhase:
    """
    The phase u-bar v / m of M_f(u, v; m), u-bar the inverse of u mod m.

    Signed arguments such as -q are reduced on the spot; m = 1 gives the trivial phase.
    """
    if modulus < 1:
        raise ValidationError(f'modulus must be positive, got {modulus}.')
    if modulus == 1:
        return reduce_phase(0, 1)
    for name, value in (('u', u), ('v', v)):
        if gcd(value, modulus) != 1:
            raise NotCoprimeError(f'the modulus {modulus} divides the twist argument {name} = {value}.')
    return reduce_phase(mod_inverse(u % modulus, modulus) * v, modulus)


class PrimeTriple(BaseModel):
    """
    Distinct odd primes p, q, r. In corollary mode r is 1 and M_f(-p, q; 1) = L(1/2, f).
    """
    model_config = ConfigDict(frozen=True)

    p: int
    q: int
    r: int = 1
    corollary: bool = False

    @model_validator(mode='after')
    def check_primes(self):
        validate_prime(self.p)
        validate_prime(self.q)
        if self.r == 1:
            if not self.corollary:
                raise ValidationError('r = 1 is only allowed in corollary mode.')
        else:
            if self.corollary:
                raise ValidationError(f'corollary mode needs r = 1, got r = {self.r}.')
            validate_prime(self.r)
        values = [self.p, self.q] + ([] if self.corollary else [self.r])
        if len(set(values)) != len(values):
            raise ValidationError(f'the primes must be distinct, got {", ".join(map(str, values))}.')
        return self

    @property
    def lhs_phases(self) -> dict[str, ReducedPhase]:
        """The moments M_f(p, r; q), M_f(-q, r; p) and M_f(-p, q; r), keyed by label."""
        p, q, r = self.p, self.q, self.r
        return {
            'M(p,r;q)': moment_phase(p, r, q),
            'M(-q,r;p)': moment_phase(-q, r, p),
            'M(-p,q;r)': moment_phase(-p, q, r),
        }

    @property
    def rhs_phases(self) -> tuple[ReducedPhase, ReducedPhase]:
        """e(-p-bar q / r) and e(q r-bar / p)."""
        p, q, r = self.p, self.q, self.r
        first = reduce_phase(0, 1) if r == 1 else reduce_phase(-mod_inverse(p, r) * q, r)
        return first, reduce_phase(q * mod_inverse(r, p), p)

    def __str__(self):
        if self.corollary:
            return f'(p={self.p}, q={self.q})'
        return f'(p={self.p}, q={self.q}, r={self.r})'
