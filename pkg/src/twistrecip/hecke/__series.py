"""Exact integer power series truncated at a fixed length."""
from sympy import divisor_sigma

from twistrecip.utils.exceptions import UnsupportedWeightError


def _nbytes(a, b, length):
    bits = max((abs(c).bit_length() for c in a), default=0)
    bits += max((abs(c).bit_length() for c in b), default=0)
    bits += length.bit_length() + 2
    return (bits + 7) // 8


def _pack(coeffs, nbytes):
    pos = b''.join((c if c > 0 else 0).to_bytes(nbytes, 'little') for c in coeffs)
    neg = b''.join((-c if c < 0 else 0).to_bytes(nbytes, 'little') for c in coeffs)
    return int.from_bytes(pos, 'little') - int.from_bytes(neg, 'little')


def multiply(a, b, length):
    """
    Product of two integer series modulo q^length, by Kronecker substitution:
    both series are packed into one big integer each, multiplied once, and the
    signed digits are read back after adding a half-range offset to every slot.
    """
    a = list(a[:length])
    b = list(b[:length])
    if not a or not b:
        return [0] * length
    nbytes = _nbytes(a, b, length)
    half = 1 << (8 * nbytes - 1)

    product = _pack(a, nbytes) * _pack(b, nbytes)
    offset = int.from_bytes(half.to_bytes(nbytes, 'little') * length, 'little')
    window = (product + offset) & ((1 << (8 * nbytes * length)) - 1)

    raw = window.to_bytes(nbytes * length, 'little')
    return [
        int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], 'little') - half
        for i in range(length)
    ]


def power(a, exponent, length):
    result = [1] + [0] * (length - 1)
    base = list(a[:length])
    while exponent:
        if exponent & 1:
            result = multiply(result, base, length)
        exponent >>= 1
        if exponent:
            base = multiply(base, base, length)
    return result


def euler_product(length):
    """prod_{n>=1} (1 - q^n) modulo q^length, from the pentagonal number theorem."""
    coeffs = [0] * length
    k = 0
    while True:
        sign = -1 if k % 2 else 1
        first = k * (3 * k - 1) // 2
        if first >= length:
            break
        coeffs[first] += sign
        if k:
            second = k * (3 * k + 1) // 2
            if second < length:
                coeffs[second] += sign
        k += 1
    return coeffs


def delta_series(length):
    """q prod (1 - q^n)^24 modulo q^length; index i holds the coefficient of q^i."""
    if length <= 1:
        return [0] * length
    eta = euler_product(length - 1)
    eta8 = power(eta, 8, length - 1)
    eta16 = multiply(eta8, eta8, length - 1)
    eta24 = multiply(eta16, eta8, length - 1)
    return [0] + eta24


def eisenstein_series(weight, length):
    match weight:
        case 4:
            scale, k = 240, 3
        case 6:
            scale, k = -504, 5
        case _:
            raise UnsupportedWeightError(f'no Eisenstein normalization for weight {weight}.')
    return [1] + [scale * int(divisor_sigma(n, k)) for n in range(1, length)]
