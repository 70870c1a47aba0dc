"""Square-tiled surfaces (origamis).

Square ``s`` has right neighbour ``h(s)`` and top neighbour ``v(s)``.
Squares are numbered from 1 in the public API and from 0 internally.
"""

import math
from collections import deque
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from games import numeric

from .errors import NotConnected, SurfaceError
from .flat_surface import ConePoint, FlatSurface, parallel_map, primitive_directions
from .saddle import SaddleConnection

BL, BR, TL, TR = 0, 1, 2, 3
CORNER_NAMES = ('BL', 'BR', 'TL', 'TR')

PermutationLike = Union[str, Sequence[int], Sequence[Sequence[int]]]


def parse_cycles(text: str, n: Optional[int] = None) -> List[int]:
    """``"(1 2)(3)"`` to a 0-based image list; fixed points may be omitted."""
    cycles = []
    for chunk in text.replace(')', ')\n').splitlines():
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith('(') and chunk.endswith(')')):
            raise SurfaceError(f"malformed cycle {chunk!r}")
        body = chunk[1:-1].replace(',', ' ').split()
        cycles.append([int(x) for x in body])
    return cycles_to_images(cycles, n)


def cycles_to_images(cycles: Sequence[Sequence[int]], n: Optional[int] = None) -> List[int]:
    largest = max((x for c in cycles for x in c), default=0)
    size = max(largest, n or 0)
    images = list(range(size))
    seen = set()
    for cycle in cycles:
        for i, x in enumerate(cycle):
            if x < 1 or x in seen:
                raise SurfaceError(f"invalid or repeated square {x} in cycles")
            seen.add(x)
            images[x - 1] = cycle[(i + 1) % len(cycle)] - 1
    return images


def _to_images(perm: PermutationLike, n: Optional[int]) -> List[int]:
    if isinstance(perm, str):
        return parse_cycles(perm, n)
    perm = list(perm)
    if perm and isinstance(perm[0], (list, tuple)):
        return cycles_to_images(perm, n)
    images = [int(x) - 1 for x in perm]
    if sorted(images) != list(range(len(images))):
        raise SurfaceError(f"{perm} is not a permutation of 1..{len(images)}")
    return images


def _inverse(images: Sequence[int]) -> List[int]:
    inverse = [0] * len(images)
    for i, j in enumerate(images):
        inverse[j] = i
    return inverse


def _crossings(p: int, q: int) -> str:
    """Order in which a ray along ``(p, q)`` from a lattice point crosses grid lines.

    'H' for a vertical line (horizontal move to the next square), 'V' for
    a horizontal line; the ray is primitive so no two coincide.
    """
    a, b = abs(p), abs(q)
    i, j = 1, 1
    word = []
    while i < a or j < b:
        # compare i/a with j/b
        if j >= b or (i < a and i * b < j * a):
            word.append('H')
            i += 1
        else:
            word.append('V')
            j += 1
    return ''.join(word)


class Origami(FlatSurface):
    """Translation surface glued from ``n`` unit squares."""

    kind = 'origami'

    def __init__(self, h: PermutationLike, v: PermutationLike, config: Dict[str, Any] = None):
        super().__init__(config)
        hi = _to_images(h, None)
        vi = _to_images(v, None)
        n = max(len(hi), len(vi))
        hi = _to_images(h, n)
        vi = _to_images(v, n)
        if len(hi) != len(vi):
            raise SurfaceError("permutations act on different index sets")
        self.n = n
        self.h, self.v = hi, vi
        self.h_inv, self.v_inv = _inverse(hi), _inverse(vi)
        self._check_connected()
        self._corner_class = self._glue_corners()
        self._build_cone_points()
        self.raw_area = n
        self.scale = numeric.sqrt(Fraction(1, n))

    def _check_connected(self):
        seen = {0}
        queue = deque([0])
        while queue:
            s = queue.popleft()
            for t in (self.h[s], self.v[s], self.h_inv[s], self.v_inv[s]):
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        if len(seen) != self.n:
            raise NotConnected(f"squares {sorted(set(range(1, self.n + 1)) - {s + 1 for s in seen})} "
                               f"are not reachable from square 1")

    def _glue_corners(self) -> Dict[Tuple[int, int], int]:
        parent = {(s, c): (s, c) for s in range(self.n) for c in range(4)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        for s in range(self.n):
            union((s, BR), (self.h[s], BL))
            union((s, TL), (self.v[s], BL))
            union((s, TR), (self.h[s], TL))
            union((s, TR), (self.v[s], BR))

        roots = sorted({find(k) for k in parent})
        label = {r: i for i, r in enumerate(roots)}
        return {k: label[find(k)] for k in parent}

    def _build_cone_points(self):
        count = max(self._corner_class.values()) + 1
        multiples = [0] * count
        for (s, c), cls in self._corner_class.items():
            if c == BL:
                multiples[cls] += 1
        policy = self.config.get('marked_points', 'auto')
        has_cone = any(m > 1 for m in multiples)
        marked = [m > 1 or policy == 'all' or (policy == 'auto' and not has_cone) for m in multiples]
        self.cone_points = [ConePoint(f"v{i}", m, mk) for i, (m, mk) in enumerate(zip(multiples, marked))]

    @property
    def vertex_count(self) -> int:
        return len(self.cone_points)

    def vertex_of(self, square: int, corner: int) -> int:
        """Vertex class of a corner (0-based square)."""
        return self._corner_class[(square, corner)]

    def _step(self, square: int, p: int, q: int, word: str) -> Tuple[int, int]:
        """Follow one lattice step; returns (final square, arrival corner)."""
        for move in word:
            if move == 'H':
                square = self.h[square] if p > 0 else self.h_inv[square]
            else:
                square = self.v[square]
        if q == 0:
            return square, BR
        if p == 0:
            return square, TL
        return square, (TR if p > 0 else TL)

    def _continue(self, square: int, p: int, q: int) -> int:
        """Start square of the straight continuation through a regular vertex."""
        if q == 0:
            return self.h[square]
        if p == 0:
            return self.v[square]
        if p > 0:
            return self.h[self.v[square]]
        return self.h_inv[self.v[square]]

    def _trace_direction(self, args) -> List[SaddleConnection]:
        (p, q), raw_bound = args
        word = _crossings(p, q)
        corner = BL if p >= 0 else BR
        steps_allowed = raw_bound // max(abs(p), abs(q))
        found = []
        for start in range(self.n):
            start_vertex = self.vertex_of(start, corner)
            if not self.cone_points[start_vertex].marked:
                continue
            square = start
            for m in range(1, steps_allowed + 1):
                square, arrival = self._step(square, p, q, word)
                end_vertex = self.vertex_of(square, arrival)
                if self.cone_points[end_vertex].marked:
                    found.append(SaddleConnection(
                        m * p * self.scale, m * q * self.scale,
                        self.cone_points[start_vertex].label, self.cone_points[end_vertex].label,
                        (start + 1, CORNER_NAMES[corner], m * p, m * q),
                    ))
                    break
                square = self._continue(square, p, q)
        return found

    def saddle_connections(self, lmax) -> List[SaddleConnection]:
        raw_bound = int(math.floor(float(lmax) / float(self.scale) + 1e-9))
        directions = [(d, raw_bound) for d in primitive_directions(raw_bound)]
        chunks = parallel_map(self._trace_direction, directions)
        return [s for chunk in chunks for s in chunk]

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update({'squares': self.n, 'h': [x + 1 for x in self.h], 'v': [x + 1 for x in self.v]})
        return data


def build_origami(h: PermutationLike, v: PermutationLike, config: Dict[str, Any] = None) -> Origami:
    return Origami(h, v, config)
