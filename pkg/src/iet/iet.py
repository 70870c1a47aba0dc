"""Interval exchange transformations of ``[0, 1)`` with exact lengths.

The permutation is in one-line notation: interval ``i`` (counted from the
left) is moved to position ``pi[i]``. ``T`` is right-continuous and its
discontinuities are the left endpoints of intervals ``2..n``, numbered
``1..n-1``.
"""

import bisect
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Tuple

from .errors import IETError, NotNormalized, Reducible
from .quadratic import Exact, QuadraticNumber

logger = logging.getLogger(__name__)


def _check_permutation(permutation: Sequence[int]) -> Tuple[int, ...]:
    permutation = tuple(int(p) for p in permutation)
    n = len(permutation)
    if sorted(permutation) != list(range(1, n + 1)):
        raise IETError(f"{permutation} is not a permutation of 1..{n}")
    return permutation


def first_invariant_block(permutation: Sequence[int]) -> int:
    """Smallest ``k < n`` with ``pi({1..k}) == {1..k}``, or 0 when irreducible."""
    for k in range(1, len(permutation)):
        if max(permutation[:k]) == k:
            return k
    return 0


@dataclass(frozen=True)
class IET:
    lengths: Tuple[QuadraticNumber, ...]
    permutation: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.lengths)

    @cached_property
    def starts(self) -> Tuple[QuadraticNumber, ...]:
        """Left endpoints of the intervals before the exchange."""
        starts, total = [], QuadraticNumber(0)
        for length in self.lengths:
            starts.append(total)
            total = total + length
        return tuple(starts)

    @cached_property
    def translations(self) -> Tuple[QuadraticNumber, ...]:
        """``T(x) - x`` on each interval."""
        image_starts = []
        for i in range(self.n):
            below = [self.lengths[j] for j in range(self.n) if self.permutation[j] < self.permutation[i]]
            image_starts.append(sum(below, QuadraticNumber(0)))
        return tuple(image - start for image, start in zip(image_starts, self.starts))

    def interval_of(self, x: Exact) -> int:
        """0-based index of the interval containing ``x``."""
        return bisect.bisect_right(self.starts, x) - 1

    def __call__(self, x: Exact) -> QuadraticNumber:
        x = QuadraticNumber.coerce(x)
        return x + self.translations[self.interval_of(x)]

    def __repr__(self):
        lengths = ', '.join(length.format() for length in self.lengths)
        return f"IET(pi={self.permutation}, lengths=({lengths}))"

    def to_dict(self):
        return {
            'n': self.n,
            'permutation': list(self.permutation),
            'lengths': [length.format() for length in self.lengths],
        }


def make_iet(lengths: Sequence[Exact], permutation: Sequence[int], normalize: bool = False) -> IET:
    """Validated IET; ``normalize`` rescales the lengths to total 1 first."""
    permutation = _check_permutation(permutation)
    lengths = tuple(QuadraticNumber.coerce(length) for length in lengths)
    if len(lengths) != len(permutation):
        raise IETError(f"{len(lengths)} lengths for a permutation of {len(permutation)} letters")
    if len(lengths) < 2:
        raise IETError("an interval exchange needs at least two intervals")
    for i, length in enumerate(lengths, start=1):
        if length.sign() <= 0:
            raise NotNormalized(f"length {i} is not positive: {length}")
    total = sum(lengths, QuadraticNumber(0))
    if normalize:
        lengths = tuple(length / total for length in lengths)
    elif total != 1:
        raise NotNormalized(f"lengths sum to {total}, not 1", total)
    k = first_invariant_block(permutation)
    if k:
        raise Reducible(permutation, k)
    return IET(lengths, permutation)


def rotation(alpha: Exact) -> IET:
    """The two-interval exchange ``x -> x - alpha (mod 1)``."""
    alpha = QuadraticNumber.coerce(alpha)
    return make_iet((alpha, 1 - alpha), (2, 1))


def apply(T: IET, x: Exact, k: int = 1) -> QuadraticNumber:
    """``T^k(x)`` in exact arithmetic."""
    x = QuadraticNumber.coerce(x)
    if not 0 <= x < 1:
        raise IETError(f"{x} is not in [0, 1)")
    for _ in range(k):
        x = T(x)
    return x


def orbit(T: IET, x: Exact, k: int) -> List[QuadraticNumber]:
    """``[T(x), T^2(x), ..., T^k(x)]``."""
    points, x = [], QuadraticNumber.coerce(x)
    for _ in range(k):
        x = T(x)
        points.append(x)
    return points


def discontinuities(T: IET) -> Tuple[QuadraticNumber, ...]:
    """``p_1, ..., p_(n-1)``: left endpoints of intervals ``2..n``."""
    return T.starts[1:]


def images(T: IET) -> List[Tuple[QuadraticNumber, QuadraticNumber]]:
    """``T([start_i, end_i))`` for every interval, in domain order."""
    return [(start + shift, start + shift + length)
            for start, shift, length in zip(T.starts, T.translations, T.lengths)]


def is_partition(T: IET) -> bool:
    """Images tile ``[0, 1)`` exactly."""
    pieces = sorted(images(T))
    end = QuadraticNumber(0)
    for start, stop in pieces:
        if start != end:
            return False
        end = stop
    return end == 1


def rotation_number(T: IET) -> QuadraticNumber:
    """``alpha`` with ``T(x) = x - alpha (mod 1)``, for two-interval exchanges."""
    if T.n != 2:
        raise IETError(f"rotation number needs a 2-interval exchange, got {T.n} intervals")
    return T.lengths[0]


def reorder(T: IET, sigma: Sequence[int]) -> IET:
    """Same permutation with lengths ``(lambda_sigma(1), ..., lambda_sigma(n))``."""
    sigma = _check_permutation(sigma)
    if len(sigma) != T.n:
        raise IETError(f"reordering of {len(sigma)} letters for {T.n} intervals")
    return IET(tuple(T.lengths[s - 1] for s in sigma), T.permutation)
