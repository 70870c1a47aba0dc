"""The statistic ``min_{1<=k<=N} k |T^k(p_1) - p_2|`` over pairs of discontinuities.

An IET is badly approximable when this stays bounded away from 0 as ``N``
grows, for every pair of discontinuities.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from surfaces.flat_surface import parallel_map

from .errors import IETError
from .iet import IET, discontinuities, orbit, reorder
from .quadratic import QuadraticNumber

logger = logging.getLogger(__name__)

DEFAULT_HORIZON = 10_000


@dataclass(frozen=True)
class OrbitStats:
    """Exact statistic for one ordered pair ``(p1, p2)`` with its argmin ``witness``."""

    p1: int
    p2: int
    horizon: int
    statistic: QuadraticNumber
    witness: Optional[int]

    @property
    def positive(self) -> bool:
        return self.statistic.sign() > 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'p1': self.p1,
            'p2': self.p2,
            'horizon': self.horizon,
            'witness_n': self.witness,
            'statistic': self.statistic.format(),
            'statistic_decimal': float(self.statistic.to_mp()),
            'exactness': 'exact',
        }


def _scan(points: List[QuadraticNumber], target: QuadraticNumber):
    best, witness = None, None
    for k, point in enumerate(points, start=1):
        value = abs(point - target) * k
        if best is None or value < best:
            best, witness = value, k
            if not value:
                break
    return best, witness


def _check_ids(T: IET, *ids: int):
    for p in ids:
        if not 1 <= p <= T.n - 1:
            raise IETError(f"discontinuity id {p} outside 1..{T.n - 1}")


def badness_statistic(T: IET, p1: int, p2: int, horizon: int = DEFAULT_HORIZON) -> OrbitStats:
    """``min_{1<=k<=horizon} k |T^k(p_1) - p_2|`` and the ``k`` attaining it."""
    _check_ids(T, p1, p2)
    if horizon < 1:
        raise IETError(f"horizon must be positive, got {horizon}")
    points = discontinuities(T)
    value, witness = _scan(orbit(T, points[p1 - 1], horizon), points[p2 - 1])
    return OrbitStats(p1, p2, horizon, value, witness)


def _row(args) -> List[OrbitStats]:
    T, p1, horizon = args
    points = discontinuities(T)
    trajectory = orbit(T, points[p1 - 1], horizon)
    rows = []
    for p2, target in enumerate(points, start=1):
        value, witness = _scan(trajectory, target)
        rows.append(OrbitStats(p1, p2, horizon, value, witness))
    return rows


def statistic_table(T: IET, horizon: int = DEFAULT_HORIZON) -> List[OrbitStats]:
    """Statistic for every ordered pair of discontinuities, one orbit per starting point."""
    rows = parallel_map(_row, [(T, p1, horizon) for p1 in range(1, T.n)])
    table = [stats for row in rows for stats in row]
    worst = min(table, key=lambda stats: stats.statistic)
    logger.info(f"{T!r}: min statistic {float(worst.statistic):.6g} at pair ({worst.p1}, {worst.p2}), "
                f"n={worst.witness}, horizon {horizon}")
    return table


def minimum_statistic(table: List[OrbitStats]) -> OrbitStats:
    return min(table, key=lambda stats: stats.statistic)


def reorder_harness(T: IET, horizon: int = DEFAULT_HORIZON) -> List[Dict[str, Any]]:
    """Minimum statistic of every reordering of the lengths of ``T``."""
    results = []
    for sigma in itertools.permutations(range(1, T.n + 1)):
        reordered = reorder(T, sigma)
        worst = minimum_statistic(statistic_table(reordered, horizon))
        results.append({
            'sigma': ' '.join(str(s) for s in sigma),
            'lengths': ' '.join(length.format() for length in reordered.lengths),
            **worst.to_dict(),
        })
    positive = sum(1 for row in results if row['statistic'] != '0')
    logger.info(f"reordering harness: {positive}/{len(results)} ordering(s) with positive statistic")
    return results
