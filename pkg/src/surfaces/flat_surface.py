"""Base class for flat surfaces."""

import logging
import math
import os
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple

from .saddle import SaddleConnection
from .spectrum import DirectionSpectrum

logger = logging.getLogger(__name__)


def worker_count() -> int:
    """Threads allowed by ``SCHMIDT_FLAT_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get('SCHMIDT_FLAT_THREADS', '1')))
    except ValueError:
        logger.warning("SCHMIDT_FLAT_THREADS is not an integer, using 1 thread")
        return 1


def parallel_map(func: Callable, items: Sequence[Any]) -> List[Any]:
    """``[func(item) ...]`` in input order, spread over the allowed threads."""
    workers = worker_count()
    if workers == 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))


def primitive_directions(bound: int) -> Iterable[Tuple[int, int]]:
    """Primitive integer vectors in the upper half plane with max-norm <= bound."""
    for q in range(0, bound + 1):
        for p in range(-bound, bound + 1):
            if q == 0 and p <= 0:
                continue
            if math.gcd(p, q) == 1:
                yield p, q


@dataclass(frozen=True)
class ConePoint:
    """A singular or marked point: total angle ``2 pi * multiple``."""

    label: str
    multiple: int
    marked: bool = True

    @property
    def order(self) -> int:
        """Zero order in the Abelian convention."""
        return self.multiple - 1

    @property
    def angle(self) -> float:
        return 2 * math.pi * self.multiple


class FlatSurface(ABC):
    """Translation surface of area 1 with a finite set of marked points.

    Subclasses build the raw surface and rescale lengths by ``scale`` so
    the area becomes 1.
    """

    kind = 'abstract'

    def __init__(self, config: Dict[str, Any] = None):
        self.config = config or {}
        self.logger = logging.getLogger(self.__class__.__name__)
        self.cone_points: List[ConePoint] = []
        self.raw_area: Any = 1
        self.scale: Any = 1

    @property
    def area(self):
        return self.scale * self.scale * self.raw_area

    @property
    def genus(self) -> int:
        total = sum(p.order for p in self.cone_points)
        return total // 2 + 1

    @property
    def zero_orders(self) -> Tuple[int, ...]:
        """Orders of the zeros (cone points of angle > 2 pi), largest first."""
        return tuple(sorted((p.order for p in self.cone_points if p.order > 0), reverse=True))

    @property
    def quadratic_orders(self) -> Tuple[int, ...]:
        """Zero orders of the squared differential: ``2k`` for each Abelian zero of order k."""
        return tuple(2 * k for k in self.zero_orders)

    @property
    def marked_points(self) -> List[ConePoint]:
        return [p for p in self.cone_points if p.marked]

    @property
    def num_marked(self) -> int:
        return len(self.marked_points)

    @abstractmethod
    def saddle_connections(self, lmax) -> List[SaddleConnection]:
        """Every saddle connection with ``|gamma| <= lmax``, once up to sign."""
        pass

    def enumerate_saddle_connections(self, lmax) -> DirectionSpectrum:
        connections = self.saddle_connections(lmax)
        spectrum = DirectionSpectrum(self, lmax, connections, self.config)
        self.logger.info(f"{self.kind}: {len(spectrum)} saddle connections up to length {lmax}")
        return spectrum

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind,
            'genus': self.genus,
            'zero_orders': list(self.zero_orders),
            'marked_points': self.num_marked,
            'area': float(self.area),
            'scale': float(self.scale),
        }

    def __repr__(self):
        return f"{self.__class__.__name__}(genus={self.genus}, zeros={self.zero_orders})"
