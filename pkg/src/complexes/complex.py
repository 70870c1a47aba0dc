"""Complexes of disjoint saddle connections."""

import logging
import math
from collections import Counter
from itertools import combinations
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from games import numeric
from surfaces import SaddleConnection, circle_distance

from .errors import AngleSpreadExceeded, ComplexError, EdgesIntersect, LevelBoundExceeded
from .geometry import SquareTiledGeometry, Triangle, geometry_for

logger = logging.getLogger(__name__)

ANGLE_SPREAD = math.pi / 4


def level_bound(surface) -> int:
    """Edges in a triangulation of the surface: ``6g - 6 + 3n``."""
    return 6 * surface.genus - 6 + 3 * surface.num_marked


def blocking_levels(surface) -> int:
    """Number of complex levels Alice blocks: ``max(1, 6g - 6 + n)``."""
    return max(1, 6 * surface.genus - 6 + surface.num_marked)


def epsilon_zero(surface, config: Dict[str, Any] = None) -> float:
    """Scale below which small complexes cannot triangulate the surface."""
    config = config or {}
    if config.get('epsilon_zero') is not None:
        return float(config['epsilon_zero'])
    return (4 * level_bound(surface) * math.sqrt(3)) ** -0.5


def rank(edge: SaddleConnection) -> Tuple:
    """Sort key putting the longest edge first, smallest angle breaking ties."""
    return -edge.length, edge.theta, edge.key


def representative_key(K) -> Tuple:
    """Order among equivalent complexes: smallest ``L(K)``, then smallest angle of the longest edge."""
    return K.length, K.theta, K.longest.key


def _longest(edges: Sequence[SaddleConnection]) -> SaddleConnection:
    return min(edges, key=rank)


class Complex:
    """Edges ``Gamma`` with the triangles they bound.

    ``theta`` is the angle that makes the longest edge vertical; among
    equally long edges the smallest angle wins.
    """

    def __init__(self, surface, edges: Sequence[SaddleConnection], triangles: Sequence[Triangle] = ()):
        self.surface = surface
        self.edges: Tuple[SaddleConnection, ...] = tuple(sorted(edges, key=lambda e: (e.length, e.theta)))
        self.triangles: Tuple[Triangle, ...] = tuple(triangles)
        self.longest = _longest(self.edges)
        self._keys = frozenset(e.key for e in self.edges)
        counts = Counter(side for t in self.triangles for side in t.sides)
        self._internal = frozenset(k for k, n in counts.items() if n >= 2)

    @property
    def level(self) -> int:
        return len(self.edges)

    @property
    def length(self):
        """L(K)."""
        return self.longest.length

    @property
    def theta(self) -> float:
        return self.longest.theta

    @property
    def theta_mp(self):
        return self.longest.theta_mp

    @property
    def boundary(self) -> Tuple[SaddleConnection, ...]:
        return tuple(e for e in self.edges if e.key not in self._internal)

    @property
    def internal(self) -> Tuple[SaddleConnection, ...]:
        return tuple(e for e in self.edges if e.key in self._internal)

    @property
    def boundary_length(self):
        """L(dK), or None when every edge is internal."""
        boundary = self.boundary
        return _longest(boundary).length if boundary else None

    @property
    def boundary_theta(self) -> Optional[float]:
        boundary = self.boundary
        return _longest(boundary).theta if boundary else None

    @property
    def edge_keys(self) -> FrozenSet[Tuple]:
        return self._keys

    @property
    def support(self) -> Tuple[FrozenSet[Tuple], Any]:
        """Canonical closed subset: non-internal edges plus the area the triangles cover."""
        area = sum((t.raw_area for t in self.triangles), 0)
        return frozenset(e.key for e in self.boundary), area

    def contains(self, edge: SaddleConnection) -> bool:
        return edge.key in self._keys

    def is_eps_complex(self, eps) -> bool:
        return numeric.leq(numeric.to_mp(self.length), numeric.to_mp(eps))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'surface': self.surface.kind,
            'level': self.level,
            'L': numeric.format_number(self.length),
            'theta': self.theta,
            'edges': [dict(e.to_dict(), boundary='external' if e.key not in self._internal else 'internal')
                      for e in self.edges],
            'triangles': len(self.triangles),
        }

    def __repr__(self):
        return f"Complex(level={self.level}, L={float(self.length):.6g}, theta={self.theta:.6f})"


def make_complex(surface, edges: Sequence[SaddleConnection],
                 geometry: Optional[SquareTiledGeometry] = None) -> Complex:
    """Validate ``edges`` and build the complex they span."""
    unique = list({e.key: e for e in edges}.values())
    if not unique:
        raise ComplexError("a complex needs at least one edge")
    bound = level_bound(surface)
    if len(unique) > bound:
        raise LevelBoundExceeded(len(unique), bound)

    if len(unique) > 1:
        geometry = geometry or geometry_for(surface)
    for a, b in combinations(unique, 2):
        point = geometry.crossing(a, b)
        if point is not None:
            raise EdgesIntersect(a, b, point)

    longest = _longest(unique)
    for edge in unique:
        spread = circle_distance(edge.theta, longest.theta)
        if spread > ANGLE_SPREAD + 1e-12:
            logger.info(f"Rejected complex: {edge!r} is {spread:.4f} from theta(K)")
            raise AngleSpreadExceeded(edge, longest.theta, spread)

    triangles = geometry.triangles(unique) if len(unique) >= 3 else []
    return Complex(surface, unique, triangles)


def is_small_complex(K: Complex, eps0) -> bool:
    """A ``3 eps0``-complex has strictly fewer edges than a triangulation.

    False means ``eps0`` is too large for the surface.
    """
    if not K.is_eps_complex(3 * eps0):
        return True
    return K.level < level_bound(K.surface)


def topologically_equivalent(first: Complex, second: Complex) -> bool:
    return first.support == second.support


def edges_outside(first: Complex, second: Complex) -> List[SaddleConnection]:
    """Edges of ``second`` not in the closed support of ``first``."""
    return [e for e in second.edges if not first.contains(e)]
