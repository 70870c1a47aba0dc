"""Exact geometry of saddle connections on square-tiled surfaces.

A connection keyed ``(square, corner, p, q)`` is developed into the plane
with its start square on cell (0, 0) and its start vertex at that cell's
``corner``. The segment is cut at the grid lines; each piece is stored in
the local coordinates of the square it runs through. A piece lying on a
grid line belongs to the square above it or to its right.
"""

import logging
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from surfaces import Origami, SaddleConnection, Torus
from surfaces.origami import BL, BR, TL, TR

from .errors import UnsupportedSurface

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, Fraction]
Cell = Tuple[int, int]

NEIGHBOURS = ((1, 0), (-1, 0), (0, 1), (0, -1))
LOCAL_CORNERS = {(0, 0): BL, (1, 0): BR, (0, 1): TL, (1, 1): TR}


def _sub(a: Point, b: Point) -> Point:
    return a[0] - b[0], a[1] - b[1]


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _orient(a: Point, b: Point, c: Point):
    return _cross(_sub(b, a), _sub(c, a))


def _lerp(a: Point, b: Point, t) -> Point:
    return a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])


def segment_intersection(a0: Point, a1: Point, b0: Point, b1: Point) -> List[Point]:
    """Common points of two closed segments: none, one, or the two ends of an overlap."""
    d1, d2 = _orient(b0, b1, a0), _orient(b0, b1, a1)
    d3, d4 = _orient(a0, a1, b0), _orient(a0, a1, b1)
    if d1 == 0 and d2 == 0:
        axis = 0 if a0[0] != a1[0] else 1
        lo = max(min(a0, a1, key=lambda p: p[axis]), min(b0, b1, key=lambda p: p[axis]),
                 key=lambda p: p[axis])
        hi = min(max(a0, a1, key=lambda p: p[axis]), max(b0, b1, key=lambda p: p[axis]),
                 key=lambda p: p[axis])
        if lo[axis] > hi[axis]:
            return []
        return [lo] if lo == hi else [lo, hi]
    if d1 * d2 > 0 or d3 * d4 > 0:
        return []
    direction = _sub(a1, a0)
    t = Fraction(_cross(_sub(b0, a0), _sub(b1, b0))) / _cross(direction, _sub(b1, b0))
    return [_lerp(a0, a1, t)]


def polygon_area(poly: Sequence[Point]) -> Fraction:
    """Signed area, positive for counter-clockwise vertices."""
    total = Fraction(0)
    for i, p in enumerate(poly):
        total += _cross(p, poly[(i + 1) % len(poly)])
    return total / 2


def _clip_half_plane(poly: Sequence[Point], a: Point, b: Point) -> List[Point]:
    """Part of a convex polygon left of the directed line ``a -> b``."""
    out: List[Point] = []
    for i, cur in enumerate(poly):
        nxt = poly[(i + 1) % len(poly)]
        oc, on = _orient(a, b, cur), _orient(a, b, nxt)
        if oc >= 0:
            out.append(cur)
        if (oc >= 0) != (on >= 0):
            out.append(_lerp(cur, nxt, Fraction(oc) / (oc - on)))
    cleaned: List[Point] = []
    for p in out:
        if not cleaned or cleaned[-1] != p:
            cleaned.append(p)
    if len(cleaned) > 1 and cleaned[0] == cleaned[-1]:
        cleaned.pop()
    return cleaned


def clip_convex(poly: Sequence[Point], window: Sequence[Point]) -> List[Point]:
    """Intersection of a convex polygon with a counter-clockwise convex window."""
    out = list(poly)
    for i, a in enumerate(window):
        if len(out) < 3:
            return []
        out = _clip_half_plane(out, a, window[(i + 1) % len(window)])
    return out if len(out) >= 3 else []


def cell_box(cell: Cell) -> List[Point]:
    x, y = Fraction(cell[0]), Fraction(cell[1])
    return [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]


@dataclass(frozen=True)
class Piece:
    """Part of a connection inside one square, in that square's coordinates."""

    square: int
    cell: Cell
    start: Point
    end: Point


@dataclass(frozen=True)
class Triangle:
    """An embedded triangle bounded by three edges of a complex."""

    sides: FrozenSet[Tuple]
    region: FrozenSet[Tuple]
    raw_area: Fraction


class SquareTiledGeometry:
    """Disjointness and triangle tests for connections of one surface."""

    def __init__(self, surface):
        if isinstance(surface, Origami):
            self.origami = surface
        elif isinstance(surface, Torus):
            self.origami = Origami([1], [1])
        else:
            raise UnsupportedSurface(f"complexes need a square-tiled surface, got {surface.kind}")
        self.surface = surface
        self._pieces: Dict[Tuple, List[Piece]] = {}
        # one square with a single marked point: the torus intersection count applies
        self._lattice = self.origami.n == 1 and self.origami.vertex_count == 1

    def move(self, square: int, dx: int, dy: int) -> int:
        o = self.origami
        if dy == 1:
            square = o.v[square]
        elif dy == -1:
            square = o.v_inv[square]
        if dx == 1:
            square = o.h[square]
        elif dx == -1:
            square = o.h_inv[square]
        return square

    def _vertex(self, square: int, local: Point) -> Optional[int]:
        corner = LOCAL_CORNERS.get((local[0], local[1]))
        if corner is None:
            return None
        return self.origami.vertex_of(square, corner)

    def _is_marked(self, vertex: int) -> bool:
        return self.origami.cone_points[vertex].marked

    @staticmethod
    def _check_key(conn: SaddleConnection) -> Tuple:
        if len(conn.key) != 4:
            raise UnsupportedSurface(f"{conn!r} carries no square-tiled key")
        return conn.key

    def pieces(self, conn: SaddleConnection) -> List[Piece]:
        key = self._check_key(conn)
        if key in self._pieces:
            return self._pieces[key]
        square, corner, p, q = key
        ox = 0 if corner == 'BL' else 1
        cuts = {Fraction(0), Fraction(1)}
        if p:
            for m in range(min(ox, ox + p) + 1, max(ox, ox + p)):
                cuts.add(Fraction(m - ox, p))
        for m in range(1, abs(q)):
            cuts.add(Fraction(m, q))
        cuts = sorted(cuts)

        pieces: List[Piece] = []
        current, cell = square - 1, (0, 0)
        for t0, t1 in zip(cuts, cuts[1:]):
            a = (ox + t0 * p, t0 * q)
            b = (ox + t1 * p, t1 * q)
            mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
            nxt = (math.floor(mid[0]), math.floor(mid[1]))
            if pieces:
                current = self.move(current, nxt[0] - cell[0], nxt[1] - cell[1])
            cell = nxt
            pieces.append(Piece(current, cell, _sub(a, cell), _sub(b, cell)))
        self._pieces[key] = pieces
        return pieces

    def passed_vertices(self, conn: SaddleConnection) -> Set[int]:
        """Unmarked vertices crossed in the interior of ``conn``."""
        passed = set()
        for piece in self.pieces(conn)[1:]:
            vertex = self._vertex(piece.square, piece.start)
            if vertex is not None:
                passed.add(vertex)
        return passed

    def crossing_by_tracing(self, a: SaddleConnection, b: SaddleConnection):
        """First common point of ``a`` and ``b`` off the marked points, as ``(square, point)``."""
        if a.key == b.key:
            first = self.pieces(a)[0]
            return first.square + 1, first.end
        shared = self.passed_vertices(a) & self.passed_vertices(b)
        if shared:
            return 'vertex', min(shared)
        by_square: Dict[int, List[Piece]] = {}
        for piece in self.pieces(b):
            by_square.setdefault(piece.square, []).append(piece)
        for piece in self.pieces(a):
            for other in by_square.get(piece.square, ()):
                points = segment_intersection(piece.start, piece.end, other.start, other.end)
                if len(points) == 2:
                    return piece.square + 1, points[0]
                for point in points:
                    if self._vertex(piece.square, point) is None:
                        return piece.square + 1, point
        return None

    def crossing(self, a: SaddleConnection, b: SaddleConnection):
        if self._lattice and a.key != b.key:
            det = a.key[2] * b.key[3] - a.key[3] * b.key[2]
            # closed curves meet |det| times, once at the marked point
            return None if abs(det) == 1 else ('lattice', abs(det) - 1)
        return self.crossing_by_tracing(a, b)

    def disjoint(self, a: SaddleConnection, b: SaddleConnection) -> bool:
        return self.crossing(a, b) is None

    def triangles(self, edges: Sequence[SaddleConnection]) -> List[Triangle]:
        """Embedded triangles whose three sides are edges in ``edges``."""
        found: Dict[FrozenSet, Triangle] = {}
        for a in edges:
            A = (a.key[2], a.key[3])
            others = [e for e in edges if e.key != a.key]
            for b, c in permutations(others, 2):
                for sb in (1, -1):
                    B = (sb * b.key[2], sb * b.key[3])
                    if _cross(A, B) == 0:
                        continue
                    for sc in (1, -1):
                        if A[0] + B[0] + sc * c.key[2] != 0 or A[1] + B[1] + sc * c.key[3] != 0:
                            continue
                        triangle = self._develop(a, B, sb, sc, b, c)
                        if triangle is not None and triangle.region not in found:
                            found[triangle.region] = triangle
        return list(found.values())

    def _start_cell(self, a_key: Tuple, left: bool) -> Cell:
        _, _, p, q = a_key
        if p == 0:
            return (-1, 0) if left else (0, 0)
        if q == 0:
            up = (p > 0) == left
            return (0, 0) if up else (0, -1)
        return 0, 0

    def _square_of(self, cell: Cell, cells: Dict[Cell, int]) -> Optional[int]:
        if cell in cells:
            return cells[cell]
        for dx, dy in NEIGHBOURS:
            source = (cell[0] - dx, cell[1] - dy)
            if source in cells:
                return self.move(cells[source], dx, dy)
        return None

    def _side_key(self, start: Point, conn_key: Tuple, cells: Dict[Cell, int]) -> Optional[Tuple]:
        p, q = conn_key[2], conn_key[3]
        corner = 'BL' if p >= 0 else 'BR'
        x, y = int(start[0]), int(start[1])
        cell = (x, y) if corner == 'BL' else (x - 1, y)
        square = self._square_of(cell, cells)
        if square is None:
            return None
        return square + 1, corner, p, q

    def _develop(self, a, B, sb, sc, b, c) -> Optional[Triangle]:
        square, corner, p, q = a.key
        P0 = (Fraction(0 if corner == 'BL' else 1), Fraction(0))
        P1 = (P0[0] + p, P0[1] + q)
        P2 = (P1[0] + B[0], P1[1] + B[1])
        left = _cross((p, q), B) > 0
        tri = [P0, P1, P2] if left else [P0, P2, P1]

        start = self._start_cell(a.key, left)
        cells = {start: self.move(square - 1, *start)}
        queue = deque([start])
        region: List[Tuple[int, Tuple[Point, ...]]] = []
        while queue:
            cell = queue.popleft()
            poly = clip_convex(tri, cell_box(cell))
            if not poly or polygon_area(poly) <= 0:
                return None
            region.append((cells[cell], tuple(_sub(pt, cell) for pt in poly)))
            for dx, dy in NEIGHBOURS:
                nb = (cell[0] + dx, cell[1] + dy)
                nb_poly = clip_convex(tri, cell_box(nb))
                if not nb_poly or polygon_area(nb_poly) <= 0:
                    continue
                nb_square = self.move(cells[cell], dx, dy)
                if nb in cells:
                    if cells[nb] != nb_square:
                        return None
                    continue
                cells[nb] = nb_square
                queue.append(nb)

        corners = set(tri)
        for (cx, cy), sq in cells.items():
            for (i, j), corner_index in LOCAL_CORNERS.items():
                point = (Fraction(cx + i), Fraction(cy + j))
                if point in corners:
                    continue
                if all(_orient(tri[k], tri[(k + 1) % 3], point) >= 0 for k in range(3)):
                    cone = self.origami.cone_points[self.origami.vertex_of(sq, corner_index)]
                    if cone.marked or cone.multiple > 1:
                        return None

        by_square: Dict[int, List[Tuple[Point, ...]]] = {}
        for sq, poly in region:
            for other in by_square.get(sq, ()):
                overlap = clip_convex(list(poly), list(other))
                if overlap and polygon_area(overlap) > 0:
                    return None
            by_square.setdefault(sq, []).append(poly)

        b_start = P1 if sb == 1 else P2
        c_start = P2 if sc == 1 else P0
        sides = {self._side_key(b_start, b.key, cells), self._side_key(c_start, c.key, cells)}
        if sides != {b.key, c.key}:
            return None
        return Triangle(
            sides=frozenset({a.key, b.key, c.key}),
            region=frozenset((sq, tuple(sorted(poly))) for sq, poly in region),
            raw_area=abs(polygon_area(tri)),
        )


def geometry_for(surface) -> SquareTiledGeometry:
    """Cached geometry helper of ``surface``."""
    geometry = getattr(surface, '_complex_geometry', None)
    if geometry is None:
        geometry = SquareTiledGeometry(surface)
        surface._complex_geometry = geometry
    return geometry
