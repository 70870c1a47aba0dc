"""Arithmetic helpers shared by games, surfaces and certificates.

Three number kinds flow through the engine: exact rationals (``int`` and
``Fraction``), binary floats, and ``mpmath`` multiprecision floats. Exact
values compare exactly, the others within a relative tolerance.
"""

import math
import random
from fractions import Fraction
from typing import Any

from mpmath import mp, mpf

# Relative equality tolerance for binary floating point (2^-40).
FLOAT_TOLERANCE = 2.0 ** -40

# mpmath values keep this many bits of headroom below the working precision.
MP_GUARD_BITS = 16


def is_exact(value: Any) -> bool:
    """True for ints and Fractions."""
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def is_mp(value: Any) -> bool:
    return isinstance(value, mpf)


def exactness(*values: Any) -> str:
    """Exactness tag used in every report: ``exact`` or ``approx``."""
    return 'exact' if all(is_exact(v) for v in values) else 'approx'


def relative_tolerance(*values: Any):
    """Tolerance appropriate for the least precise of ``values``."""
    if all(is_exact(v) for v in values):
        return 0
    if any(is_mp(v) for v in values):
        return mpf(2) ** -(mp.prec - MP_GUARD_BITS)
    return FLOAT_TOLERANCE


def _magnitude(*values: Any):
    return max(abs(v) for v in values)


def _promote(*values: Any):
    """mpmath does not mix with Fraction, so mixed operands all become mpf."""
    if any(is_mp(v) for v in values):
        return tuple(to_mp(v) for v in values)
    return values


def mul(*values: Any):
    """Product that stays exact for exact factors."""
    result = 1
    for v in _promote(*values):
        result = result * v
    return result


def leq(a: Any, b: Any, scale: Any = 0) -> bool:
    """``a <= b`` up to the tolerance of the operands.

    ``scale`` widens the slack for quantities computed from larger numbers,
    e.g. differences of circle positions.
    """
    a, b, scale = _promote(a, b, scale)
    tol = relative_tolerance(a, b, scale)
    if tol == 0:
        return a <= b
    return a <= b + tol * _magnitude(a, b, scale)


def close(a: Any, b: Any, scale: Any = 0) -> bool:
    a, b, scale = _promote(a, b, scale)
    tol = relative_tolerance(a, b, scale)
    if tol == 0:
        return a == b
    return abs(a - b) <= tol * _magnitude(a, b, scale)


def floor(value: Any) -> int:
    if is_mp(value):
        return int(mp.floor(value))
    return math.floor(value)


def sqrt(value: Any):
    if is_mp(value):
        return mp.sqrt(value)
    if is_exact(value):
        root = Fraction(math.isqrt(value.numerator), math.isqrt(value.denominator)) \
            if isinstance(value, Fraction) else Fraction(math.isqrt(value))
        if root * root == value:
            return root
    return math.sqrt(value)


def like(template: Any, value: Any):
    """Convert ``value`` to the number kind of ``template``."""
    if is_mp(template):
        return mpf(value) if not isinstance(value, Fraction) else mpf(value.numerator) / value.denominator
    if is_exact(template):
        return value if is_exact(value) else Fraction(value)
    return float(value)


def random_unit(rng: random.Random, template: Any):
    """Uniform number in [0, 1) of the same kind as ``template``."""
    if is_exact(template):
        return Fraction(rng.getrandbits(32), 2 ** 32)
    if is_mp(template):
        return mpf(rng.getrandbits(53)) / mpf(2) ** 53
    return rng.random()


def to_mp(value: Any) -> mpf:
    if isinstance(value, Fraction):
        return mpf(value.numerator) / value.denominator
    return mpf(value)


def format_number(value: Any) -> str:
    """Serialise a number so that :func:`parse_number` restores it bit-exactly."""
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if is_mp(value):
        man, exp = value.man_exp
        return f"{man}p{exp}"
    return repr(float(value))


def parse_number(text: str):
    text = text.strip()
    if 'p' in text and not text.startswith(('inf', 'nan')):
        man, exp = text.split('p')
        return mpf((int(man), int(exp)))
    if '/' in text:
        num, den = text.split('/')
        return Fraction(int(num), int(den))
    try:
        return int(text)
    except ValueError:
        return float(text)


def decimal(value: Any, digits: int = 17) -> str:
    """Human readable decimal rendering of any supported number."""
    if is_mp(value):
        return mp.nstr(value, digits)
    if isinstance(value, Fraction):
        return mp.nstr(to_mp(value), digits)
    return repr(value) if isinstance(value, float) else str(value)


def set_precision(dps: int) -> int:
    """Raise the mpmath working precision to at least ``dps`` digits; returns the new value."""
    if dps > mp.dps:
        mp.dps = dps
    return mp.dps
