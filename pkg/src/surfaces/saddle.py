"""Saddle connections and the direction convention."""

import hashlib
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

from mpmath import mp

from games import numeric

from .flow import FlowParams, exp, flow_holonomy, rotate


def canonical_sign(x, y) -> Tuple[Any, Any]:
    """Representative of ``±(x, y)`` in the upper half plane (y > 0, or y == 0 and x > 0)."""
    if y < 0 or (y == 0 and x < 0):
        return -x, -y
    return x, y


def direction(x, y) -> float:
    """Angle in [0, pi) rotating ``(x, y)`` to vertical."""
    theta = math.atan2(-x, y) % math.pi
    return 0.0 if theta == math.pi else theta


def direction_mp(x, y):
    theta = mp.atan2(-numeric.to_mp(x), numeric.to_mp(y))
    return theta % mp.pi


def circle_distance(a, b, period=None):
    """Distance on the circle of directions, which has period pi."""
    if period is None:
        period = mp.pi if isinstance(a, mp.mpf) or isinstance(b, mp.mpf) else math.pi
    d = abs(a - b) % period
    return min(d, period - d)


@dataclass(frozen=True)
class SaddleConnection:
    """Holonomy ``(x, y)`` of a saddle connection, stored up to sign.

    ``h`` and ``v`` are the absolute components, ``length`` their maximum.
    ``key`` identifies the connection combinatorially so that parallel
    connections with equal holonomy stay distinct.
    """

    x: Any
    y: Any
    start: str = 'v0'
    end: str = 'v0'
    key: Tuple = field(default=(), compare=True)

    def __post_init__(self):
        x, y = canonical_sign(self.x, self.y)
        object.__setattr__(self, 'x', x)
        object.__setattr__(self, 'y', y)

    @property
    def holonomy(self) -> Tuple[Any, Any]:
        return self.x, self.y

    @property
    def h(self):
        return abs(self.x)

    @property
    def v(self):
        return abs(self.y)

    @property
    def length(self):
        return max(self.h, self.v)

    @property
    def theta(self) -> float:
        return direction(float(self.x), float(self.y))

    @property
    def theta_mp(self):
        return direction_mp(self.x, self.y)

    @property
    def is_exact(self) -> bool:
        return numeric.is_exact(self.x) and numeric.is_exact(self.y)

    def h_theta(self, theta):
        return abs(rotate(self.x, self.y, theta)[0])

    def v_theta(self, theta):
        return abs(rotate(self.x, self.y, theta)[1])

    def flowed(self, t, theta) -> Tuple[Any, Any]:
        return flow_holonomy(self.holonomy, FlowParams(t, theta))

    def flowed_length(self, t, theta):
        et = exp(t)
        return max(et * self.h_theta(theta), self.v_theta(theta) / et)

    @property
    def id(self) -> str:
        raw = repr((self.x, self.y, self.start, self.end, self.key))
        return hashlib.md5(raw.encode()).hexdigest()[:12]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'theta': self.theta,
            'x': numeric.format_number(self.x),
            'y': numeric.format_number(self.y),
            'h': numeric.format_number(self.h),
            'v': numeric.format_number(self.v),
            'length': numeric.format_number(self.length),
            'start': self.start,
            'end': self.end,
            'exactness': 'exact' if self.is_exact else 'approx',
        }

    def __repr__(self):
        return f"SaddleConnection(({self.x}, {self.y}), theta={self.theta:.6f})"
