"""Exact arithmetic in real quadratic fields ``Q(sqrt(d))``.

Elements are ``a + b sqrt(d)`` with rational ``a``, ``b`` and squarefree
``d > 1``. Rationals are elements with ``b == 0`` and belong to every field,
so they mix freely with any ``Q(sqrt(d))``. Ordering and ``floor`` are exact.
"""

import math
import re
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Tuple, Union

from mpmath import mp, mpf

from .errors import FieldMismatch, IETError

_RATIONAL = re.compile(r'^[+-]?\d+(?:/\d+)?$')
_QUADRATIC = re.compile(
    r'^\(?\s*(?P<a>[+-]?\d+(?:/\d+)?)?\s*(?P<sign>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?'
    r'sqrt\(\s*(?P<d>\d+)\s*\)\s*\)?(?:\s*/\s*(?P<c>\d+))?$'
)


def squarefree_part(d: int) -> Tuple[int, int]:
    """``(f, core)`` with ``d == f * f * core`` and ``core`` squarefree."""
    factor, core, p = 1, d, 2
    while p * p <= core:
        while core % (p * p) == 0:
            core //= p * p
            factor *= p
        p += 1
    return factor, core


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@total_ordering
class QuadraticNumber:
    """``a + b sqrt(d)``, kept in normal form (``d`` squarefree, ``d is None`` iff ``b == 0``)."""

    __slots__ = ('a', 'b', 'd')

    def __init__(self, a=0, b=0, d: Optional[int] = None):
        a, b = Fraction(a), Fraction(b)
        if b:
            if d is None or d <= 0:
                raise IETError(f"sqrt({d}) is not a real quadratic irrationality")
            factor, d = squarefree_part(d)
            b *= factor
            if d == 1:
                a, b = a + b, Fraction(0)
        self.a = a
        self.b = b
        self.d = d if b else None

    @classmethod
    def coerce(cls, value) -> 'QuadraticNumber':
        if isinstance(value, QuadraticNumber):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls(value)
        if isinstance(value, str):
            return parse_quadratic(value)
        raise TypeError(f"cannot use {type(value).__name__} as an exact field element")

    @classmethod
    def sqrt(cls, d: int) -> 'QuadraticNumber':
        return cls(0, 1, d)

    @property
    def is_rational(self) -> bool:
        return self.d is None

    def _field(self, other: 'QuadraticNumber') -> Optional[int]:
        if self.d is None:
            return other.d
        if other.d is None or other.d == self.d:
            return self.d
        raise FieldMismatch(self.d, other.d)

    def __add__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadraticNumber(self.a + other.a, self.b + other.b, self._field(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadraticNumber(self.a - other.a, self.b - other.b, self._field(other))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._field(other)
        a = self.a * other.a + (self.b * other.b * d if d is not None else 0)
        return QuadraticNumber(a, self.a * other.b + self.b * other.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> 'QuadraticNumber':
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        if self.d is None:
            return self.a * self.a
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> 'QuadraticNumber':
        norm = self.norm()
        if not norm:
            raise ZeroDivisionError("inverse of zero")
        return QuadraticNumber(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadraticNumber.coerce(other) * self.inverse()

    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: the larger square wins
        return sa if self.a * self.a > self.b * self.b * self.d else sb

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __lt__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        return hash(self.a) if self.d is None else hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __floor__(self) -> int:
        if self.d is None:
            return math.floor(self.a)
        n = math.floor(float(self))
        while (self - n).sign() < 0:
            n -= 1
        while (self - (n + 1)).sign() >= 0:
            n += 1
        return n

    def floor(self) -> int:
        return math.floor(self)

    def fractional(self) -> 'QuadraticNumber':
        return self - math.floor(self)

    def __float__(self):
        if self.d is None:
            return float(self.a)
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def to_mp(self) -> mpf:
        a = mpf(self.a.numerator) / self.a.denominator
        if self.d is None:
            return a
        return a + mpf(self.b.numerator) / self.b.denominator * mp.sqrt(self.d)

    def format(self) -> str:
        """Exact text that :func:`parse_quadratic` reads back."""
        if self.d is None:
            return str(self.a.numerator) if self.a.denominator == 1 else f"{self.a.numerator}/{self.a.denominator}"
        c = self.a.denominator * self.b.denominator // math.gcd(self.a.denominator, self.b.denominator)
        A, B = int(self.a * c), int(self.b * c)
        sign = '+' if B > 0 else '-'
        body = f"{A}{sign}{abs(B)}*sqrt({self.d})"
        return body if c == 1 else f"({body})/{c}"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"QuadraticNumber({self.format()})"


Exact = Union[int, Fraction, QuadraticNumber]

GOLDEN = QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 5)


def parse_quadratic(text: str) -> QuadraticNumber:
    """Read ``p/q``, ``sqrt(d)``, ``a+b*sqrt(d)`` or ``(a+b*sqrt(d))/c``."""
    text = text.strip()
    if _RATIONAL.match(text):
        return QuadraticNumber(Fraction(text))
    match = _QUADRATIC.match(text.replace(' ', ''))
    if not match:
        raise ValueError(f"not a rational or quadratic number: {text!r}")
    a = Fraction(match['a']) if match['a'] else Fraction(0)
    b = Fraction(match['b']) if match['b'] else Fraction(1)
    if match['sign'] == '-':
        b = -b
    c = int(match['c']) if match['c'] else 1
    if c == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return QuadraticNumber(a / c, b / c, int(match['d']))
