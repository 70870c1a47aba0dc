"""Unfolding of rational convex polygons into translation surfaces.

The unfolding has one copy of the polygon per element of the dihedral
group ``D_N`` generated by the edge reflections, where ``N`` is the lcm
of the angle denominators. Group elements are pairs ``(k, s)`` meaning
``rotation(2 pi k / N) * reflection_x ** s``.

Saddle connections are lifts of generalized diagonals: billiard paths
from vertex to vertex. Those are found by unfolding the polygon along
corridors while tracking the window of directions that still reach the
current copy.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from mpmath import mp

from games import numeric

from .errors import IrrationalAngle, SurfaceError
from .flat_surface import ConePoint, FlatSurface, parallel_map
from .saddle import SaddleConnection

logger = logging.getLogger(__name__)

Element = Tuple[int, int]
Point = Tuple[Any, Any]

ANGLE_DENOMINATOR_LIMIT = 10 ** 6
DEFAULT_MAX_DEPTH = 100_000


def _as_rational_angle(vertex: int, angle) -> Fraction:
    """Angle as a multiple of pi; floats must be very close to a small fraction."""
    if isinstance(angle, (int, Fraction)):
        return Fraction(angle)
    if isinstance(angle, str):
        try:
            return Fraction(angle.strip())
        except ValueError:
            raise IrrationalAngle(vertex, angle)
    value = float(angle)
    guess = Fraction(value).limit_denominator(ANGLE_DENOMINATOR_LIMIT)
    if abs(float(guess) - value) > 1e-12:
        raise IrrationalAngle(vertex, angle)
    return guess


def _cross(a: Point, b: Point):
    return a[0] * b[1] - a[1] * b[0]


def _sub(a: Point, b: Point) -> Point:
    return a[0] - b[0], a[1] - b[1]


def _reflect(point: Point, a: Point, b: Point) -> Point:
    """Mirror image of ``point`` in the line through ``a`` and ``b``."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    px, py = point[0] - a[0], point[1] - a[1]
    norm = dx * dx + dy * dy
    t = (px * dx + py * dy) / norm
    fx, fy = t * dx, t * dy
    return a[0] + 2 * fx - px, a[1] + 2 * fy - py


def _segment_distance(p: Point, a: Point, b: Point) -> float:
    dx, dy = b[0] - a[0], b[1] - a[1]
    norm = dx * dx + dy * dy
    t = max(0.0, min(1.0, ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / norm))
    return math.hypot(p[0] - a[0] - t * dx, p[1] - a[1] - t * dy)


@dataclass(frozen=True)
class RationalPolygon:
    """Convex polygon given by its angles (multiples of pi) and edge lengths.

    Edge ``i`` runs from vertex ``i`` to vertex ``i + 1``. Triangles may
    omit the lengths, which then follow from the law of sines.
    """

    angles: Tuple[Fraction, ...]
    lengths: Optional[Tuple[Any, ...]] = None

    def __post_init__(self):
        angles = tuple(_as_rational_angle(i, a) for i, a in enumerate(self.angles))
        object.__setattr__(self, 'angles', angles)
        k = len(angles)
        if k < 3:
            raise SurfaceError("a polygon needs at least three vertices")
        for i, a in enumerate(angles):
            if not 0 < a < 1:
                raise SurfaceError(f"only convex polygons unfold here; angle {a}pi at vertex {i}")
        if sum(angles) != k - 2:
            raise SurfaceError(f"angles sum to {sum(angles)}pi, expected {k - 2}pi")
        if self.lengths is None:
            if k != 3:
                raise SurfaceError("edge lengths are required for polygons with more than three sides")
        elif len(self.lengths) != k:
            raise SurfaceError(f"{k} angles but {len(self.lengths)} edge lengths")

    @property
    def size(self) -> int:
        return len(self.angles)

    @property
    def order(self) -> int:
        """``N``: lcm of the angle denominators."""
        n = 1
        for a in self.angles:
            n = n * a.denominator // math.gcd(n, a.denominator)
        return n

    def edge_lengths(self, high_precision: bool = False) -> List[Any]:
        if self.lengths is not None:
            return [numeric.to_mp(x) if high_precision else float(x) for x in self.lengths]
        # law of sines: edge i is opposite vertex i + 2
        sin = (lambda a: mp.sin(mp.pi * numeric.to_mp(a))) if high_precision \
            else (lambda a: math.sin(math.pi * float(a)))
        return [sin(self.angles[(i + 2) % 3]) for i in range(3)]

    def vertices(self, high_precision: bool = False) -> List[Point]:
        """Vertices counterclockwise from the origin, edge 0 along the x axis."""
        pi = mp.pi if high_precision else math.pi
        cos, sin = (mp.cos, mp.sin) if high_precision else (math.cos, math.sin)
        lengths = self.edge_lengths(high_precision)
        points = [(0 * pi, 0 * pi)]
        heading = 0 * pi
        for i in range(self.size - 1):
            x, y = points[-1]
            points.append((x + lengths[i] * cos(heading), y + lengths[i] * sin(heading)))
            turn = 1 - self.angles[i + 1]
            heading = heading + pi * (float(turn) if not high_precision else numeric.to_mp(turn))
        x, y = points[-1]
        closing = (x + lengths[-1] * cos(heading), y + lengths[-1] * sin(heading))
        if math.hypot(float(closing[0]), float(closing[1])) > 1e-9 * max(float(l) for l in lengths):
            raise SurfaceError("edge lengths do not close up with the given angles")
        return points

    def area(self) -> float:
        pts = self.vertices()
        return abs(sum(_cross(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts)))) / 2

    def edge_line_index(self, edge: int) -> int:
        """``j`` with edge direction ``pi j / N`` (mod pi)."""
        heading = Fraction(0)
        for i in range(edge):
            heading += 1 - self.angles[i + 1]
        return int(heading * self.order) % self.order


class DihedralGroup:
    """``D_N`` as pairs ``(k, s)``; reflection in the line at angle ``pi j / N`` is ``(j, 1)``."""

    def __init__(self, n: int):
        self.n = n

    def elements(self) -> List[Element]:
        return [(k, s) for s in (0, 1) for k in range(self.n)]

    def compose(self, a: Element, b: Element) -> Element:
        k1, s1 = a
        k2, s2 = b
        sign = -1 if s1 else 1
        return (k1 + sign * k2) % self.n, s1 ^ s2

    def reflection(self, j: int) -> Element:
        return j % self.n, 1

    def closure(self, generators: Sequence[Element]) -> List[Element]:
        group = {(0, 0)}
        frontier = [(0, 0)]
        while frontier:
            g = frontier.pop()
            for r in generators:
                h = self.compose(g, r)
                if h not in group:
                    group.add(h)
                    frontier.append(h)
        return sorted(group)

    def act(self, g: Element, w: Point, high_precision: bool = False) -> Point:
        k, s = g
        x, y = w
        if s:
            y = -y
        if high_precision:
            angle = 2 * mp.pi * k / self.n
            c, sn = mp.cos(angle), mp.sin(angle)
        else:
            angle = 2 * math.pi * k / self.n
            c, sn = math.cos(angle), math.sin(angle)
        return c * x - sn * y, sn * x + c * y


@dataclass(frozen=True)
class Diagonal:
    """Generalized diagonal from ``start`` to ``end`` found in copy ``copy``."""

    start: int
    end: int
    vector: Point
    copy: Element
    path: Tuple[Tuple[int, int], ...]
    along_edge: Optional[int] = None


class UnfoldedPolygon(FlatSurface):
    """Translation surface obtained by unfolding a rational convex polygon."""

    kind = 'unfolded_polygon'

    def __init__(self, polygon: RationalPolygon, config: Dict[str, Any] = None):
        super().__init__(config)
        self.polygon = polygon
        self.N = polygon.order
        self.group = DihedralGroup(self.N)
        self.copies = 2 * self.N
        self._vertices = polygon.vertices()
        self._reflections = [self.group.reflection(polygon.edge_line_index(e)) for e in range(polygon.size)]
        self._stabilizers = [
            self.group.closure([self._reflections[(i - 1) % polygon.size], self._reflections[i]])
            for i in range(polygon.size)
        ]
        self._build_cone_points()
        self.raw_area = self.copies * polygon.area()
        self.scale = 1 / math.sqrt(self.raw_area)
        self.max_depth = self.config.get('max_depth', DEFAULT_MAX_DEPTH)

    # -- topology -------------------------------------------------------------

    def point_label(self, vertex: int, g: Element) -> str:
        """Surface point that vertex ``vertex`` of copy ``g`` is glued into."""
        rep = min(self.group.compose(g, h) for h in self._stabilizers[vertex])
        return f"v{vertex}.{self._coset_index[vertex][rep]}"

    def _build_cone_points(self):
        self._coset_index: List[Dict[Element, int]] = []
        self.cone_points = []
        policy = self.config.get('marked_points', 'all')
        for i, a in enumerate(self.polygon.angles):
            reps = sorted({min(self.group.compose(g, h) for h in self._stabilizers[i])
                           for g in self.group.elements()})
            self._coset_index.append({r: j for j, r in enumerate(reps)})
            for j in range(len(reps)):
                multiple = a.numerator
                self.cone_points.append(ConePoint(f"v{i}.{j}", multiple, policy == 'all' or multiple > 1))

    @property
    def vertex_cone_data(self) -> List[Dict[str, Any]]:
        """Per polygon vertex: angle, number of surface points, cone angle multiple."""
        return [
            {'vertex': i, 'angle_over_pi': str(a), 'points': self.N // a.denominator,
             'cone_angle_over_2pi': a.numerator}
            for i, a in enumerate(self.polygon.angles)
        ]

    # -- corridor search ------------------------------------------------------

    def _diagonals_from(self, start: int, bound: float) -> List[Diagonal]:
        k = self.polygon.size
        verts = self._vertices
        P = verts[start]
        nxt, prv = (start + 1) % k, (start - 1) % k
        found = []
        for end, edge in ((nxt, start), (prv, prv)):
            w = _sub(verts[end], P)
            if math.hypot(*w) <= bound:
                found.append(Diagonal(start, end, w, (0, 0), (), edge))

        chain = [(start + t) % k for t in range(1, k)]
        stack = [(list(verts), chain, _sub(verts[nxt], P), _sub(verts[prv], P), (0, 0), ())]
        eps = 1e-12
        steps = 0
        while stack:
            copy_verts, chain, lo, hi, g, path = stack.pop()
            steps += 1
            if steps > self.max_depth:
                self.logger.warning(f"corridor search from vertex {start} stopped after {steps} copies")
                break
            for t, u in enumerate(chain):
                d = _sub(copy_verts[u], P)
                if 0 < t < len(chain) - 1 and math.hypot(*d) <= bound:
                    scale = math.hypot(*lo) * math.hypot(*d)
                    if _cross(lo, d) > eps * scale and _cross(d, hi) > eps * math.hypot(*hi) * math.hypot(*d):
                        found.append(Diagonal(start, u, d, g, path))
            for u, w in zip(chain, chain[1:]):
                a, b = copy_verts[u], copy_verts[w]
                if _segment_distance(P, a, b) > bound:
                    continue
                du, dw = _sub(a, P), _sub(b, P)
                new_lo = du if _cross(lo, du) > 0 else lo
                new_hi = dw if _cross(dw, hi) > 0 else hi
                if _cross(new_lo, new_hi) <= eps * math.hypot(*new_lo) * math.hypot(*new_hi):
                    continue
                edge = u if (u + 1) % k == w else w
                reflected = [_reflect(p, a, b) for p in copy_verts]
                step = 1 if w == (u - 1) % k else -1
                new_chain = [(u + step * t) % k for t in range(k)]
                stack.append((reflected, new_chain, new_lo, new_hi,
                              self.group.compose(g, self._reflections[edge]), path + ((u, w),)))
        return found

    def _develop_mp(self, diagonal: Diagonal) -> Point:
        """The diagonal's vector recomputed in mpmath along its corridor."""
        verts = self.polygon.vertices(high_precision=True)
        P = verts[diagonal.start]
        for u, w in diagonal.path:
            a, b = verts[u], verts[w]
            verts = [_reflect(p, a, b) for p in verts]
        return _sub(verts[diagonal.end], P)

    # -- lifting ----------------------------------------------------------------

    def _lifts(self, diagonal: Diagonal) -> List[Tuple[Element, Point]]:
        lifts = []
        for g in self.group.elements():
            if diagonal.along_edge is not None:
                twin = self.group.compose(g, self._reflections[diagonal.along_edge])
                if twin < g:
                    continue
            lifts.append((g, self.group.act(g, diagonal.vector)))
        return lifts

    @staticmethod
    def _upper(x, y, size) -> bool:
        tol = 1e-12 * size
        if y > tol:
            return True
        return abs(y) <= tol and x > 0

    def _within(self, diagonal: Diagonal, g: Element, length: float, lmax: float, guard: float) -> bool:
        if length < lmax - guard:
            return True
        if length > lmax + guard:
            return False
        w = self._develop_mp(diagonal)
        x, y = self.group.act(g, w, high_precision=True)
        exact_length = max(abs(x), abs(y)) / mp.sqrt(numeric.to_mp(self.copies) * self._area_mp())
        return numeric.leq(exact_length, numeric.to_mp(lmax))

    def _area_mp(self):
        pts = self.polygon.vertices(high_precision=True)
        return abs(sum(_cross(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts)))) / 2

    def saddle_connections(self, lmax) -> List[SaddleConnection]:
        lmax_f = float(lmax)
        guard = self.config.get('guard_band', 1e-9)
        bound = math.sqrt(2) * (lmax_f + guard) / self.scale
        per_vertex = parallel_map(lambda i: self._diagonals_from(i, bound), list(range(self.polygon.size)))

        connections = []
        for diagonals in per_vertex:
            for diagonal in diagonals:
                size = math.hypot(*diagonal.vector)
                for g, (x, y) in self._lifts(diagonal):
                    if not self._upper(x, y, size):
                        continue
                    length = max(abs(x), abs(y)) * self.scale
                    if not self._within(diagonal, g, length, lmax_f, guard):
                        continue
                    end_copy = self.group.compose(g, diagonal.copy)
                    connections.append(SaddleConnection(
                        x * self.scale, y * self.scale,
                        self.point_label(diagonal.start, g), self.point_label(diagonal.end, end_copy),
                        (diagonal.start, diagonal.end, diagonal.path, g),
                    ))
        return connections

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update({'copies': self.copies, 'angles': [str(a) for a in self.polygon.angles]})
        return data


def unfold_polygon(polygon: RationalPolygon, config: Dict[str, Any] = None) -> UnfoldedPolygon:
    return UnfoldedPolygon(polygon, config)
