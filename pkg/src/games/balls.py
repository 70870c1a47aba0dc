"""Balls on the line, the circle and max-metric products of those."""

from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from . import numeric
from .errors import IllegalRadius


@dataclass(frozen=True)
class Space:
    """The line, or a circle of the given period."""

    kind: str = 'line'
    period: Any = None

    @classmethod
    def line(cls) -> 'Space':
        return cls('line')

    @classmethod
    def circle(cls, period: Any) -> 'Space':
        return cls('circle', period)

    @property
    def dimension(self) -> int:
        return 1

    @property
    def is_circle(self) -> bool:
        return self.kind == 'circle'

    def normalize(self, x: Any) -> Any:
        if not self.is_circle:
            return x
        return x - self.period * numeric.floor(x / self.period)

    def offset(self, origin: Any, x: Any) -> Any:
        """Signed displacement from ``origin`` to ``x``; on the circle in [-P/2, P/2)."""
        delta = x - origin
        if not self.is_circle:
            return delta
        half = self.period / 2
        return self.normalize(delta + half) - half

    def distance(self, a: Any, b: Any) -> Any:
        return abs(self.offset(a, b))

    def shift(self, x: Any, delta: Any) -> Any:
        return self.normalize(x + delta)

    def scale(self) -> Any:
        """Magnitude of coordinates, used to size comparison slack."""
        return self.period if self.is_circle else 0

    def to_dict(self) -> dict:
        data = {'kind': self.kind}
        if self.is_circle:
            data['period'] = numeric.format_number(self.period)
        return data


LINE = Space.line()


@dataclass(frozen=True)
class ProductSpace:
    """Finite product of line/circle factors with the max metric."""

    factors: Tuple[Space, ...]

    @property
    def dimension(self) -> int:
        return len(self.factors)

    def normalize(self, x: Sequence[Any]) -> Tuple[Any, ...]:
        return tuple(f.normalize(c) for f, c in zip(self.factors, x))

    def offset(self, origin: Sequence[Any], x: Sequence[Any]) -> Tuple[Any, ...]:
        return tuple(f.offset(o, c) for f, o, c in zip(self.factors, origin, x))

    def distance(self, a: Sequence[Any], b: Sequence[Any]) -> Any:
        return max(f.distance(p, q) for f, p, q in zip(self.factors, a, b))

    def scale(self) -> Any:
        return max(f.scale() for f in self.factors)

    def to_dict(self) -> dict:
        return {'kind': 'product', 'factors': [f.to_dict() for f in self.factors]}


def space_from_dict(data: dict):
    if data['kind'] == 'product':
        return ProductSpace(tuple(space_from_dict(f) for f in data['factors']))
    if data['kind'] == 'circle':
        return Space.circle(numeric.parse_number(data['period']))
    return LINE


@dataclass(frozen=True)
class Ball:
    """Closed ball ``B(center, radius)``; ``|B|`` is its diameter."""

    center: Any
    radius: Any
    space: Any = LINE

    def __post_init__(self):
        if not self.radius > 0:
            raise IllegalRadius(f"ball radius must be positive, got {self.radius}")
        factors = self.space.factors if isinstance(self.space, ProductSpace) else (self.space,)
        for factor in factors:
            if factor.is_circle and not 2 * self.radius < factor.period:
                raise IllegalRadius(
                    f"circle ball needs 2*radius < period, got radius {self.radius}"
                )
        if isinstance(self.space, ProductSpace):
            object.__setattr__(self, 'center', self.space.normalize(tuple(self.center)))
        else:
            object.__setattr__(self, 'center', self.space.normalize(self.center))

    @property
    def diameter(self) -> Any:
        return 2 * self.radius

    @property
    def dimension(self) -> int:
        return self.space.dimension

    def with_radius(self, radius: Any) -> 'Ball':
        return Ball(self.center, radius, self.space)

    def distance_to_point(self, x: Any) -> Any:
        """Distance from ``x`` to the ball (0 inside)."""
        gap = self.space.distance(self.center, x) - self.radius
        return gap if gap > 0 else 0 * gap

    def contains_point(self, x: Any) -> bool:
        return numeric.leq(self.space.distance(self.center, x), self.radius, self.space.scale())

    def contains(self, other: 'Ball') -> bool:
        d = self.space.distance(self.center, other.center)
        return numeric.leq(d + other.radius, self.radius, self.space.scale())

    def overlaps(self, other: 'Ball') -> bool:
        """Interiors intersect; tangent balls do not overlap."""
        d = self.space.distance(self.center, other.center)
        return not numeric.leq(other.radius + self.radius, d, self.space.scale())

    def bounds(self) -> Tuple[Any, Any]:
        """Endpoints ``(center - r, center + r)`` of a one-dimensional ball."""
        return self.center - self.radius, self.center + self.radius

    def to_dict(self) -> dict:
        center = self.center
        if isinstance(center, tuple):
            center = [numeric.format_number(c) for c in center]
        else:
            center = numeric.format_number(center)
        return {'center': center, 'radius': numeric.format_number(self.radius)}


def free_gaps(ball: Ball, blocks: Sequence[Ball]) -> List[Tuple[Any, Any]]:
    """Sub-intervals of a 1-d ``ball`` left uncovered by ``blocks``.

    Returned as ``(lo, hi)`` offsets from ``ball.center`` inside ``[-r, r]``,
    sorted left to right.
    """
    space = ball.space
    covered = []
    for block in blocks:
        o = space.offset(ball.center, block.center)
        lo, hi = o - block.radius, o + block.radius
        if hi <= -ball.radius or lo >= ball.radius:
            continue
        covered.append((max(lo, -ball.radius), min(hi, ball.radius)))
    covered.sort()
    gaps = []
    cursor = -ball.radius
    for lo, hi in covered:
        if lo > cursor:
            gaps.append((cursor, lo))
        if hi > cursor:
            cursor = hi
    if cursor < ball.radius:
        gaps.append((cursor, ball.radius))
    return gaps


def place_ball(ball: Ball, blocks: Sequence[Ball], radius: Any,
               target: Optional[Any] = None) -> Optional[Ball]:
    """Ball of ``radius`` inside ``ball`` avoiding ``blocks``.

    With a ``target`` point the admissible center nearest to it is chosen,
    otherwise the middle of the widest gap. Returns None if nothing fits.
    """
    space = ball.space
    best = None
    for lo, hi in free_gaps(ball, blocks):
        if hi - lo < 2 * radius:
            continue
        first, last = lo + radius, hi - radius
        if target is None:
            key = -(hi - lo)
            choice = (first + last) / 2
        else:
            t = space.offset(ball.center, target)
            choice = min(max(t, first), last)
            key = abs(choice - t)
        if best is None or key < best[0]:
            best = (key, choice)
    if best is None:
        return None
    return Ball(space.shift(ball.center, best[1]), radius, space)


def intersect(a: Ball, b: Ball) -> Optional[Ball]:
    """Intersection of two 1-d balls as a ball, or None if it is degenerate."""
    space = b.space
    o = space.offset(b.center, a.center)
    lo = max(o - a.radius, -b.radius)
    hi = min(o + a.radius, b.radius)
    if not hi > lo:
        return None
    return Ball(space.shift(b.center, (lo + hi) / 2), (hi - lo) / 2, space)
